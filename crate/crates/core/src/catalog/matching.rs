use std::collections::BTreeSet;
use std::ops::ControlFlow;

use super::{Occurrence, PatternGraph};
use crate::graph::{Graph, VertexSet};

/// Pattern vertices in BFS order (each component started at a max-degree
/// vertex), with each vertex's earliest-placed neighbor as its anchor.
struct Plan {
    order: Vec<usize>,
    anchor: Vec<Option<usize>>,
}

fn plan(h: &Graph) -> Plan {
    let n = h.n();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut pos = vec![usize::MAX; n];
    while order.len() < n {
        let start = (0..n)
            .filter(|&v| !seen[v])
            .max_by_key(|&v| (h.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex exists");
        seen[start] = true;
        let mut head = order.len();
        pos[start] = order.len();
        order.push(start);
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in h.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    pos[w] = order.len();
                    order.push(w);
                }
            }
        }
    }
    let anchor = order
        .iter()
        .map(|&p| {
            h.neighbors(p)
                .iter()
                .map(|&q| pos[q])
                .filter(|&i| i < pos[p])
                .min()
        })
        .collect();
    Plan { order, anchor }
}

/// Calls `visit` with the host image of every induced embedding of `h`
/// (indexed by position in the plan order).
fn for_each_embedding<F>(g: &Graph, h: &Graph, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return;
    }
    let plan = plan(h);
    let mut image = Vec::with_capacity(h.n());
    let mut used = vec![false; g.n()];
    let _ = extend(g, h, &plan, &mut image, &mut used, &mut visit);
}

fn extend<F>(
    g: &Graph,
    h: &Graph,
    plan: &Plan,
    image: &mut Vec<usize>,
    used: &mut [bool],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let i = image.len();
    if i == plan.order.len() {
        return visit(image);
    }
    let p = plan.order[i];
    let need = h.degree(p);
    let candidates: Vec<usize> = match plan.anchor[i] {
        Some(a) => g.neighbors(image[a]).to_vec(),
        None => (0..g.n()).collect(),
    };
    for x in candidates {
        if used[x] || g.degree(x) < need {
            continue;
        }
        let consistent = (0..i).all(|j| h.has_edge(plan.order[j], p) == g.has_edge(image[j], x));
        if !consistent {
            continue;
        }
        used[x] = true;
        image.push(x);
        let flow = extend(g, h, plan, image, used, visit);
        image.pop();
        used[x] = false;
        flow?;
    }
    ControlFlow::Continue(())
}

/// Every vertex set of `g` that induces a copy of `h`, ascending.
pub fn enumerate_induced(g: &Graph, h: &PatternGraph) -> Vec<Occurrence> {
    let mut sets = BTreeSet::new();
    for_each_embedding(g, h.graph(), |img| {
        sets.insert(VertexSet::from_iter(img.iter().copied()));
        ControlFlow::Continue(())
    });
    sets.into_iter()
        .map(|vertices| Occurrence {
            pattern: h.name().to_string(),
            vertices,
        })
        .collect()
}

/// The lexicographically smallest induced copy of `h`, if any.
pub fn find_induced(g: &Graph, h: &PatternGraph) -> Option<Occurrence> {
    let mut best: Option<VertexSet> = None;
    for_each_embedding(g, h.graph(), |img| {
        let s = VertexSet::from_iter(img.iter().copied());
        if best.as_ref().is_none_or(|b| s < *b) {
            best = Some(s);
        }
        ControlFlow::Continue(())
    });
    best.map(|vertices| Occurrence {
        pattern: h.name().to_string(),
        vertices,
    })
}

/// Whether `g` has an induced subgraph isomorphic to `h`; stops at the first hit.
pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    let mut found = false;
    for_each_embedding(g, h, |_| {
        found = true;
        ControlFlow::Break(())
    });
    found
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && a.degree_sequence() == b.degree_sequence()
        && contains_induced(a, b)
}

/// The shortest induced cycle with length in `[min_len, max_len]`; among
/// holes of that length, the lexicographically smallest vertex set.
pub fn find_hole(g: &Graph, min_len: usize, max_len: Option<usize>) -> Option<Occurrence> {
    let hi = max_len.unwrap_or(g.n()).min(g.n());
    for len in min_len.max(3)..=hi {
        let mut best: Option<VertexSet> = None;
        holes_of_length(g, len, &mut |cycle| {
            let s = VertexSet::from_iter(cycle.iter().copied());
            if best.as_ref().is_none_or(|b| s < *b) {
                best = Some(s);
            }
            ControlFlow::Continue(())
        });
        if let Some(vertices) = best {
            return Some(Occurrence {
                pattern: format!("C{len}"),
                vertices,
            });
        }
    }
    None
}

pub fn has_hole(g: &Graph, min_len: usize, max_len: Option<usize>) -> bool {
    let hi = max_len.unwrap_or(g.n()).min(g.n());
    (min_len.max(3)..=hi).any(|len| {
        let mut found = false;
        holes_of_length(g, len, &mut |_| {
            found = true;
            ControlFlow::Break(())
        });
        found
    })
}

/// Visits each chordless cycle of length `len` once, as a vertex sequence
/// starting at its smallest vertex.
fn holes_of_length<F>(g: &Graph, len: usize, visit: &mut F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let mut path = Vec::with_capacity(len);
    for s in 0..g.n() {
        path.clear();
        path.push(s);
        if grow(g, len, &mut path, visit).is_break() {
            return;
        }
    }
}

fn grow<F>(g: &Graph, len: usize, path: &mut Vec<usize>, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let s = path[0];
    let last = *path.last().expect("path is nonempty");
    let k = path.len();
    for &w in g.neighbors(last) {
        if w <= s || path.contains(&w) {
            continue;
        }
        if k == 1 {
            path.push(w);
            let flow = grow(g, len, path, visit);
            path.pop();
            flow?;
            continue;
        }
        if path[1..k - 1].iter().any(|&p| g.has_edge(p, w)) {
            continue;
        }
        let closes = g.has_edge(s, w);
        if k + 1 == len {
            if closes && path[1] < w {
                path.push(w);
                let flow = visit(path);
                path.pop();
                flow?;
            }
        } else if !closes {
            path.push(w);
            let flow = grow(g, len, path, visit);
            path.pop();
            flow?;
        }
    }
    ControlFlow::Continue(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build;

    #[test]
    fn triangles_of_k4() {
        let occ = enumerate_induced(&build::complete(4), &PatternGraph::triangle());
        let sets: Vec<Vec<usize>> = occ.iter().map(|o| o.vertices.as_slice().to_vec()).collect();
        assert_eq!(
            sets,
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]
        );
    }

    #[test]
    fn c6_has_no_induced_c4() {
        assert!(find_induced(&build::cycle(6), &PatternGraph::cycle(4)).is_none());
    }

    #[test]
    fn hole_in_c6_with_chord_is_c4() {
        let mut e: Vec<_> = build::cycle(6).edges().collect();
        e.push((0, 3));
        let g = Graph::from_edges(6, e).unwrap();
        let hole = find_hole(&g, 4, None).unwrap();
        assert_eq!(hole.vertices.as_slice(), &[0, 1, 2, 3]);
        assert_eq!(hole.pattern, "C4");
    }

    #[test]
    fn induced_not_subgraph() {
        // K4 contains P3 as a subgraph, never as an induced one.
        assert!(!contains_induced(
            &build::complete(4),
            PatternGraph::path(3).graph()
        ));
        assert!(contains_induced(
            &build::path(4),
            PatternGraph::path(3).graph()
        ));
    }

    #[test]
    fn disconnected_pattern_matches() {
        let g = build::path(4);
        let occ = enumerate_induced(&g, &PatternGraph::two_k1());
        assert_eq!(occ.len(), 3);
        assert!(find_induced(&g, &PatternGraph::two_k2()).is_none());
        assert!(find_induced(&build::path(5), &PatternGraph::two_k2()).is_some());
    }

    #[test]
    fn isomorphism_is_label_free() {
        let a = PatternGraph::long_claw();
        let perm = [6, 2, 4, 0, 1, 5, 3];
        let b = Graph::from_edges(7, a.graph().edges().map(|(u, v)| (perm[u], perm[v]))).unwrap();
        assert!(is_isomorphic(a.graph(), &b));
        assert!(!is_isomorphic(a.graph(), PatternGraph::x3().graph()));
    }

    #[test]
    fn hole_bounds() {
        let g = build::cycle(7);
        assert!(find_hole(&g, 4, Some(6)).is_none());
        assert!(has_hole(&g, 4, Some(7)));
        assert!(!has_hole(&build::complete(5), 4, None));
    }
}
