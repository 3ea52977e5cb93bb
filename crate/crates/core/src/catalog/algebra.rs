use super::matching::{contains_induced, is_isomorphic};
use super::{PatternFamily, PatternGraph};

/// Drops isomorphic duplicates (keeping the smallest name) and every member
/// that contains another member as an induced subgraph. The result is sorted
/// by (order, edge count, name), so it does not depend on input order.
pub fn minimalize(family: &[PatternGraph]) -> Vec<PatternGraph> {
    let mut unique: Vec<PatternGraph> = Vec::new();
    for p in family {
        match unique
            .iter_mut()
            .find(|q| is_isomorphic(q.graph(), p.graph()))
        {
            Some(q) => {
                if p.name() < q.name() {
                    *q = p.clone();
                }
            }
            None => unique.push(p.clone()),
        }
    }
    let mut kept: Vec<PatternGraph> = unique
        .iter()
        .enumerate()
        .filter(|&(i, p)| {
            !unique.iter().enumerate().any(|(j, q)| {
                i != j && q.order() <= p.order() && contains_induced(p.graph(), q.graph())
            })
        })
        .map(|(_, p)| p.clone())
        .collect();
    kept.sort_by(|a, b| {
        (a.order(), a.graph().edge_count(), a.name()).cmp(&(
            b.order(),
            b.graph().edge_count(),
            b.name(),
        ))
    });
    kept
}

/// The super-pruned family: members of either family that contain a member
/// of the other family as an induced subgraph, minimalized. Both families
/// are materialized up to `size_cap` vertices.
pub fn sp_family(f1: &PatternFamily, f2: &PatternFamily, size_cap: usize) -> Vec<PatternGraph> {
    let a = f1.members(size_cap);
    let b = f2.members(size_cap);
    let mut found = Vec::new();
    for h1 in &a {
        for h2 in &b {
            if h1.order() >= h2.order() && contains_induced(h1.graph(), h2.graph()) {
                found.push(h1.clone());
            }
            if h2.order() >= h1.order() && contains_induced(h2.graph(), h1.graph()) {
                found.push(h2.clone());
            }
        }
    }
    minimalize(&found)
}

/// Pairs `(H1, H2)` from `F1 x F2` where neither member belongs to the
/// super-pruned family, in `F1`-major order.
pub fn forbidden_pairs(
    f1: &PatternFamily,
    f2: &PatternFamily,
    size_cap: usize,
) -> Vec<(PatternGraph, PatternGraph)> {
    let sp = sp_family(f1, f2, size_cap);
    let in_sp = |h: &PatternGraph| sp.iter().any(|s| is_isomorphic(s.graph(), h.graph()));
    let a: Vec<_> = f1
        .members(size_cap)
        .into_iter()
        .filter(|h| !in_sp(h))
        .collect();
    let b: Vec<_> = f2
        .members(size_cap)
        .into_iter()
        .filter(|h| !in_sp(h))
        .collect();
    let mut out = Vec::new();
    for h1 in &a {
        for h2 in &b {
            out.push((h1.clone(), h2.clone()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[PatternGraph]) -> Vec<&str> {
        v.iter().map(|p| p.name()).collect()
    }

    #[test]
    fn minimalize_drops_supergraphs() {
        let fam = vec![
            PatternGraph::path(5),
            PatternGraph::path(3),
            PatternGraph::claw(),
        ];
        assert_eq!(names(&minimalize(&fam)), ["P3"]);
    }

    #[test]
    fn minimalize_dedupes_isomorphic_copies() {
        let fam = vec![PatternGraph::net(), PatternGraph::dagger_aw(2)];
        assert_eq!(names(&minimalize(&fam)), ["dagger-aw-2"]);
    }

    #[test]
    fn claw_free_with_triangle_free() {
        let sp = sp_family(
            &PatternFamily::claw_free(),
            &PatternFamily::triangle_free(),
            12,
        );
        assert!(sp.is_empty());
        let fp = forbidden_pairs(
            &PatternFamily::claw_free(),
            &PatternFamily::triangle_free(),
            12,
        );
        assert_eq!(fp.len(), 1);
        assert_eq!((fp[0].0.name(), fp[0].1.name()), ("claw", "C3"));
    }

    #[test]
    fn cluster_with_forest() {
        let sp = sp_family(&PatternFamily::cluster(), &PatternFamily::cycles(), 12);
        let expect: Vec<String> = (4..=12).map(|l| format!("C{l}")).collect();
        assert_eq!(names(&sp), expect);
        let fp = forbidden_pairs(&PatternFamily::cluster(), &PatternFamily::cycles(), 12);
        assert_eq!(fp.len(), 1);
        assert_eq!((fp[0].0.name(), fp[0].1.name()), ("P3", "C3"));
    }
}
