//! Bounded search tree for deleting at most `k` vertices so that every
//! component of the remainder belongs to one of the profile's two classes.

use serde::Serialize;
use thiserror::Error;

use crate::base::{exact_hereditary_deletion, side_applicability};
use crate::catalog::{enumerate_induced, find_induced};
use crate::graph::{Graph, Path, VertexSet};
use crate::profile::{Mode, ProblemProfile, SiteShape};
use crate::recognize::is_member;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("component {0} contains patterns from both sides but no obstruction pair")]
    NoApplicableSide(VertexSet),
}

/// A closest induced pair `(J1, J2)` for one of the profile's obstruction
/// pairs, with a lexicographically least shortest path from `J1` to `J2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairOccurrence {
    pub pair_index: usize,
    pub j1: VertexSet,
    pub j2: VertexSet,
    pub path: Path,
    pub distance: usize,
}

impl PairOccurrence {
    /// The vertices the engine branches on for this occurrence.
    pub fn branch_set(&self, mode: Mode) -> VertexSet {
        let mut s = self.j1.union(&self.j2);
        if mode != Mode::C {
            s = s.union(&self.path.interior().iter().copied().collect());
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub profile: String,
    pub feasible: bool,
    pub value: Option<usize>,
    pub solution: VertexSet,
    pub nodes: u64,
    pub max_children: usize,
    pub max_depth: usize,
}

/// Counters collected while auditing branch sites.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AuditReport {
    pub pair_sites: u64,
    pub site_checks: u64,
    /// Audited sites whose connecting path has a nonempty interior.
    pub interior_sites: u64,
    pub site_violations: Vec<String>,
    pub path_checks: u64,
    pub path_violations: u64,
}

impl AuditReport {
    fn absorb(&mut self, other: AuditReport) {
        self.pair_sites += other.pair_sites;
        self.site_checks += other.site_checks;
        self.interior_sites += other.interior_sites;
        self.site_violations.extend(other.site_violations);
        self.path_checks += other.path_checks;
        self.path_violations += other.path_violations;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SearchMode {
    /// Stop at the first child that succeeds.
    #[default]
    FirstFound,
    /// Explore every child, keeping the smallest solution.
    Best,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SolveOptions {
    pub search: SearchMode,
    pub audit: bool,
}

/// Deletes every component already in one of the two classes. Returns the
/// remaining graph, its labels in `g`, and the removed components.
pub fn reduce_components(
    g: &Graph,
    profile: &ProblemProfile,
) -> (Graph, Vec<usize>, Vec<VertexSet>) {
    let mut removed = Vec::new();
    let mut keep = Vec::new();
    for comp in g.connected_components() {
        let h = g.induced_subgraph(&comp).0;
        if is_member(&h, profile.class1) || is_member(&h, profile.class2) {
            removed.push(comp);
        } else {
            keep.extend(comp.iter());
        }
    }
    let (h, labels) = g.induced_subgraph(&VertexSet::from_iter(keep));
    (h, labels, removed)
}

/// Overlap size of two sorted sets.
fn overlap(a: &VertexSet, b: &VertexSet) -> usize {
    let (x, y) = (a.as_slice(), b.as_slice());
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < x.len() && j < y.len() {
        match x[i].cmp(&y[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// The closest pair over all obstruction pairs. Ties break by smaller
/// `|J1 ∪ J2|`, then pair index, then `J1`, then `J2` lexicographically.
pub fn closest_pair_occurrence(g: &Graph, profile: &ProblemProfile) -> Option<PairOccurrence> {
    type Key = (usize, usize, usize, VertexSet, VertexSet);
    let mut best: Option<Key> = None;
    for (idx, (h1, h2)) in profile.pairs.iter().enumerate() {
        let occ2 = enumerate_induced(g, h2);
        if occ2.is_empty() {
            continue;
        }
        for o1 in enumerate_induced(g, h1) {
            let dist = g.multi_source_bfs(&o1.vertices);
            for o2 in &occ2 {
                let Some(d) = o2.vertices.iter().filter_map(|v| dist[v]).min() else {
                    continue;
                };
                let size =
                    o1.vertices.len() + o2.vertices.len() - overlap(&o1.vertices, &o2.vertices);
                let better = match &best {
                    None => true,
                    Some(b) => {
                        (d, size, idx, &o1.vertices, &o2.vertices) < (b.0, b.1, b.2, &b.3, &b.4)
                    }
                };
                if better {
                    best = Some((d, size, idx, o1.vertices.clone(), o2.vertices.clone()));
                }
            }
        }
    }
    let (distance, _, pair_index, j1, j2) = best?;
    let (d, path) = g
        .distance_between_sets(&j1, &j2)
        .expect("pair lies in one component");
    debug_assert_eq!(d, distance);
    Some(PairOccurrence {
        pair_index,
        j1,
        j2,
        path,
        distance,
    })
}

/// Checks the expected shape of the component of `G - (J1 ∪ J2)` that
/// holds the connecting path's interior.
pub fn check_branch_site(g: &Graph, occ: &PairOccurrence, shape: SiteShape) -> Result<(), String> {
    let interior = occ.path.interior();
    if interior.is_empty() {
        return Ok(());
    }
    let ends = occ.j1.union(&occ.j2);
    let (h, labels) = g.remove_vertices(&ends);
    let local = |v: usize| labels.iter().position(|&x| x == v);
    let start = local(interior[0]).ok_or("path interior meets J1 ∪ J2")?;
    let comp = h
        .connected_components()
        .into_iter()
        .find(|c| c.contains(start))
        .expect("every vertex has a component");
    let comp: VertexSet = comp.iter().map(|i| labels[i]).collect();
    let spine: VertexSet = interior.iter().copied().collect();
    if spine.iter().any(|v| !comp.contains(v)) {
        return Err(format!("interior {spine} is split across components"));
    }
    match shape {
        SiteShape::BarePath => {
            if comp != spine {
                return Err(format!("component {comp} is larger than interior {spine}"));
            }
        }
        SiteShape::Caterpillar => {
            let inner = g.induced_subgraph(&comp).0;
            if inner.edge_count() + 1 != comp.len() {
                return Err(format!("component {comp} is not a tree"));
            }
            for w in comp.iter().filter(|&w| !spine.contains(w)) {
                let nb = g.neighbors(w);
                if nb.len() != 1 || !spine.contains(nb[0]) {
                    return Err(format!("off-path vertex {w} is not a pendant leaf"));
                }
            }
        }
    }
    let p = occ.path.vertices();
    let mut want = vec![(p[1], p[0]), (p[p.len() - 2], p[p.len() - 1])];
    want.sort_unstable();
    let mut got: Vec<(usize, usize)> = comp
        .iter()
        .flat_map(|c| {
            g.neighbors(c)
                .iter()
                .filter(|&&x| ends.contains(x))
                .map(move |&x| (c, x))
        })
        .collect();
    got.sort_unstable();
    if got != want {
        return Err(format!(
            "attachments {got:?} differ from path ends {want:?}"
        ));
    }
    Ok(())
}

struct Search<'a> {
    profile: &'a ProblemProfile,
    options: SolveOptions,
    nodes: u64,
    max_children: usize,
    max_depth: usize,
    audit: AuditReport,
}

impl<'a> Search<'a> {
    fn new(profile: &'a ProblemProfile, options: SolveOptions) -> Self {
        Search {
            profile,
            options,
            nodes: 0,
            max_children: 0,
            max_depth: 0,
            audit: AuditReport::default(),
        }
    }

    /// The vertex set to branch on at this node, if any.
    fn branch_set(&mut self, g: &Graph) -> Option<VertexSet> {
        let profile = self.profile;
        if profile.mode == Mode::C {
            if let Some(o) = profile.g1.iter().find_map(|h| find_induced(g, h)) {
                return Some(o.vertices);
            }
        }
        let occ = closest_pair_occurrence(g, profile)?;
        self.audit.pair_sites += 1;
        if profile.has_path_bound() {
            self.audit.path_checks += 1;
            let bounded = occ.path.vertices().len() <= profile.alpha;
            debug_assert!(bounded, "connecting path longer than P{}", profile.alpha);
            if !bounded {
                self.audit.path_violations += 1;
            }
        }
        if self.options.audit {
            if let Some(shape) = profile.site_shape {
                self.audit.site_checks += 1;
                if !occ.path.interior().is_empty() {
                    self.audit.interior_sites += 1;
                }
                if let Err(e) = check_branch_site(g, &occ, shape) {
                    self.audit.site_violations.push(e);
                }
            }
        }
        Some(occ.branch_set(profile.mode))
    }

    fn run(
        &mut self,
        g: &Graph,
        labels: &[usize],
        budget: usize,
        depth: usize,
    ) -> Result<Option<Vec<usize>>, EngineError> {
        self.nodes += 1;
        self.max_depth = self.max_depth.max(depth);
        let (g, sub, _) = reduce_components(g, self.profile);
        let labels: Vec<usize> = sub.iter().map(|&i| labels[i]).collect();
        if g.n() == 0 {
            return Ok(Some(Vec::new()));
        }
        if let Some(set) = self.branch_set(&g) {
            if budget == 0 {
                return Ok(None);
            }
            self.max_children = self.max_children.max(set.len());
            let mut best: Option<Vec<usize>> = None;
            for v in set.iter() {
                let limit = match &best {
                    None => budget - 1,
                    Some(b) if b.len() >= 2 => (b.len() - 2).min(budget - 1),
                    Some(_) => break,
                };
                let (h, hl) = g.remove_vertices(&VertexSet::from([v]));
                let child_labels: Vec<usize> = hl.iter().map(|&i| labels[i]).collect();
                if let Some(mut s) = self.run(&h, &child_labels, limit, depth + 1)? {
                    s.push(labels[v]);
                    best = Some(s);
                    if self.options.search == SearchMode::FirstFound {
                        break;
                    }
                }
            }
            return Ok(best);
        }
        self.finish(&g, &labels, budget)
    }

    /// Solves each pair-free component exactly on its cheaper applicable side.
    fn finish(
        &mut self,
        g: &Graph,
        labels: &[usize],
        budget: usize,
    ) -> Result<Option<Vec<usize>>, EngineError> {
        let mut out = Vec::new();
        let mut remaining = budget;
        for comp in g.connected_components() {
            let (h, hl) = g.induced_subgraph(&comp);
            let sides = side_applicability(&h, self.profile);
            if sides.is_empty() {
                return Err(EngineError::NoApplicableSide(comp.relabel(labels)));
            }
            let mut best: Option<VertexSet> = None;
            for side in sides {
                let cap = best
                    .as_ref()
                    .map_or(remaining, |b| b.len().saturating_sub(1).min(remaining));
                if best.as_ref().is_some_and(|b| b.is_empty()) {
                    break;
                }
                if let Some(s) = exact_hereditary_deletion(&h, side.class(self.profile), cap) {
                    best = Some(s);
                }
            }
            let Some(s) = best else {
                return Ok(None);
            };
            remaining -= s.len();
            out.extend(s.iter().map(|i| labels[hl[i]]));
        }
        Ok(Some(out))
    }
}

fn solve_once(
    g: &Graph,
    k: usize,
    profile: &ProblemProfile,
    options: SolveOptions,
) -> Result<(SolveResult, AuditReport), EngineError> {
    let mut search = Search::new(profile, options);
    let labels: Vec<usize> = g.vertices().collect();
    let found = search.run(g, &labels, k, 0)?;
    let result = SolveResult {
        profile: profile.name.clone(),
        feasible: found.is_some(),
        value: found.as_ref().map(Vec::len),
        solution: found.map(VertexSet::from_iter).unwrap_or_default(),
        nodes: search.nodes,
        max_children: search.max_children,
        max_depth: search.max_depth,
    };
    Ok((result, search.audit))
}

/// Decides whether at most `k` deletions suffice, returning a witness.
pub fn solve_decision(
    g: &Graph,
    k: usize,
    profile: &ProblemProfile,
) -> Result<SolveResult, EngineError> {
    solve_once(g, k, profile, SolveOptions::default()).map(|r| r.0)
}

pub fn solve_decision_with(
    g: &Graph,
    k: usize,
    profile: &ProblemProfile,
    options: SolveOptions,
) -> Result<(SolveResult, AuditReport), EngineError> {
    solve_once(g, k, profile, options)
}

/// Minimum solution, found by raising `k` from zero. Search statistics are
/// summed (nodes) or maximized (width, depth) over all runs.
pub fn solve_optimize(g: &Graph, profile: &ProblemProfile) -> Result<SolveResult, EngineError> {
    solve_optimize_with(g, profile, SolveOptions::default()).map(|r| r.0)
}

pub fn solve_optimize_with(
    g: &Graph,
    profile: &ProblemProfile,
    options: SolveOptions,
) -> Result<(SolveResult, AuditReport), EngineError> {
    let mut audit = AuditReport::default();
    let (mut nodes, mut width, mut depth) = (0, 0, 0);
    for k in 0..=g.n() {
        let (mut r, a) = solve_once(g, k, profile, options)?;
        audit.absorb(a);
        nodes += r.nodes;
        width = width.max(r.max_children);
        depth = depth.max(r.max_depth);
        if r.feasible {
            r.nodes = nodes;
            r.max_children = width;
            r.max_depth = depth;
            return Ok((r, audit));
        }
    }
    unreachable!("deleting every vertex is always feasible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build;

    fn profile(name: &str) -> ProblemProfile {
        ProblemProfile::named(name).unwrap()
    }

    #[test]
    fn claw_and_triangle_in_separate_components_are_free() {
        let g = build::disjoint_union(&build::star(3), &build::complete(3));
        let r = solve_optimize(&g, &profile("claw-triangle")).unwrap();
        assert_eq!(r.value, Some(0));
        assert_eq!(r.nodes, 1);
    }

    #[test]
    fn gadget_a_closest_pair() {
        // Triangle 0-1-2, path 2-3-4, vertex 4 with extra leaves 5, 6, 7.
        // Vertex 3 is itself a claw leaf, so the closest claw sits at distance 1.
        let g = Graph::from_edges(
            8,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (4, 6),
                (4, 7),
            ],
        )
        .unwrap();
        let p = profile("claw-triangle");
        let occ = closest_pair_occurrence(&g, &p).unwrap();
        assert_eq!(occ.j1.as_slice(), &[3, 4, 5, 6]);
        assert_eq!(occ.j2.as_slice(), &[0, 1, 2]);
        assert_eq!(occ.distance, 1);
        assert_eq!(occ.path.vertices(), &[3, 2]);
        let r = solve_optimize(&g, &p).unwrap();
        assert_eq!(r.value, Some(1));
    }

    #[test]
    fn k4_into_cluster_or_forest_is_free() {
        let r = solve_optimize(&build::complete(4), &profile("cluster-forest")).unwrap();
        assert_eq!(r.value, Some(0));
    }

    #[test]
    fn decision_respects_budget() {
        // Triangle with a pendant path is neither a cluster nor a forest.
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let p = profile("cluster-forest");
        assert!(!solve_decision(&g, 0, &p).unwrap().feasible);
        let r = solve_decision(&g, 1, &p).unwrap();
        assert!(r.feasible);
        assert_eq!(r.value, Some(1));
    }

    #[test]
    fn best_mode_matches_first_found() {
        let g = Graph::from_edges(
            8,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 4),
                (6, 7),
            ],
        )
        .unwrap();
        for p in ProblemProfile::all() {
            let a = solve_optimize(&g, &p).unwrap();
            let opts = SolveOptions {
                search: SearchMode::Best,
                audit: false,
            };
            let b = solve_decision_with(&g, g.n(), &p, opts).unwrap().0;
            assert_eq!(a.value, b.value, "{}", p.name);
        }
    }

    #[test]
    fn reduction_keeps_only_mixed_components() {
        let g = build::disjoint_union(&build::path(3), &build::complete(4));
        let (h, labels, removed) = reduce_components(&g, &profile("claw-triangle"));
        assert_eq!(h.n(), 0);
        assert!(labels.is_empty());
        assert_eq!(removed.len(), 2);
    }
}
