//! Polynomial-time approximation: greedily pack disjoint forbidden
//! structures, then finish each residual component exactly.

use serde::Serialize;

use crate::base::{exact_hereditary_deletion, side_applicability};
use crate::catalog::find_induced;
use crate::engine::{closest_pair_occurrence, reduce_components, EngineError};
use crate::graph::{Graph, VertexSet};
use crate::profile::{Mode, ProblemProfile};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApproxResult {
    pub profile: String,
    pub solution: VertexSet,
    /// Disjoint sets deleted whole; each meets every feasible solution.
    pub packing_sets: Vec<VertexSet>,
    pub factor_bound: usize,
}

pub fn approx_solve(g: &Graph, profile: &ProblemProfile) -> Result<ApproxResult, EngineError> {
    let mut current = g.clone();
    let mut labels: Vec<usize> = g.vertices().collect();
    let mut packing = Vec::new();

    loop {
        let (h, sub, _) = reduce_components(&current, profile);
        labels = sub.iter().map(|&i| labels[i]).collect();
        current = h;
        let packed = match profile.mode {
            Mode::C => profile
                .g1
                .iter()
                .find_map(|q| find_induced(&current, q))
                .map(|o| o.vertices),
            Mode::A | Mode::B => None,
        }
        .or_else(|| closest_pair_occurrence(&current, profile).map(|o| o.branch_set(profile.mode)));
        let Some(set) = packed else { break };
        packing.push(set.relabel(&labels));
        let (h, sub) = current.remove_vertices(&set);
        labels = sub.iter().map(|&i| labels[i]).collect();
        current = h;
    }

    let mut solution: Vec<usize> = packing.iter().flat_map(|s| s.iter()).collect();
    for comp in current.connected_components() {
        let (h, hl) = current.induced_subgraph(&comp);
        let sides = side_applicability(&h, profile);
        if sides.is_empty() {
            return Err(EngineError::NoApplicableSide(comp.relabel(&labels)));
        }
        let best = sides
            .iter()
            .map(|side| {
                exact_hereditary_deletion(&h, side.class(profile), h.n())
                    .expect("deleting everything always fits")
            })
            .min_by_key(VertexSet::len)
            .expect("at least one side");
        solution.extend(best.iter().map(|i| labels[hl[i]]));
    }

    Ok(ApproxResult {
        profile: profile.name.clone(),
        solution: VertexSet::from_iter(solution),
        packing_sets: packing,
        factor_bound: profile.d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build;

    #[test]
    fn gadget_b_packs_the_pair() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap();
        let p = ProblemProfile::named("claw-triangle").unwrap();
        let r = approx_solve(&g, &p).unwrap();
        assert_eq!(r.solution.as_slice(), &[0, 1, 2, 3, 4, 5]);
        assert_eq!(r.packing_sets.len(), 1);
        assert_eq!(r.factor_bound, 7);
    }

    #[test]
    fn member_needs_nothing() {
        let p = ProblemProfile::named("interval-tree").unwrap();
        let r = approx_solve(&build::path(6), &p).unwrap();
        assert!(r.solution.is_empty());
        assert!(r.packing_sets.is_empty());
    }

    #[test]
    fn pair_free_c5_is_finished_exactly() {
        let p = ProblemProfile::named("split-bipartite").unwrap();
        let r = approx_solve(&build::cycle(5), &p).unwrap();
        assert!(r.packing_sets.is_empty());
        assert_eq!(r.solution.len(), 1);
    }
}
