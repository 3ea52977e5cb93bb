//! Brute-force ground truth, built only on graph operations and recognizers.

use itertools::Itertools;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::profile::ProblemProfile;
use crate::recognize::{is_member, GraphClass};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("no solution with at most {cap} vertices")]
pub struct AboveCap {
    pub cap: usize,
}

/// Whether every component of `G - S` lies in one of the two classes.
pub fn verify_with_classes(
    g: &Graph,
    s: &VertexSet,
    class1: GraphClass,
    class2: GraphClass,
) -> bool {
    if s.iter().any(|v| v >= g.n()) {
        return false;
    }
    let (rest, _) = g.remove_vertices(s);
    rest.connected_components().iter().all(|c| {
        let h = rest.induced_subgraph(c).0;
        is_member(&h, class1) || is_member(&h, class2)
    })
}

pub fn verify_solution(g: &Graph, s: &VertexSet, profile: &ProblemProfile) -> bool {
    verify_with_classes(g, s, profile.class1, profile.class2)
}

/// Smallest feasible set of size at most `cap`, trying subsets by size and
/// then lexicographically; the first hit is the witness.
pub fn brute_force_opt(
    g: &Graph,
    profile: &ProblemProfile,
    cap: usize,
) -> Result<(usize, VertexSet), AboveCap> {
    for size in 0..=cap.min(g.n()) {
        for combo in (0..g.n()).combinations(size) {
            let s = VertexSet::from_iter(combo);
            if verify_solution(g, &s, profile) {
                return Ok((size, s));
            }
        }
    }
    Err(AboveCap { cap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build;

    fn gadget_b() -> Graph {
        Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap()
    }

    #[test]
    fn gadget_b_verification() {
        let p = ProblemProfile::named("claw-triangle").unwrap();
        assert!(verify_solution(&gadget_b(), &VertexSet::from([0]), &p));
        assert!(!verify_solution(&gadget_b(), &VertexSet::default(), &p));
        assert!(verify_solution(&gadget_b(), &(0..6).collect(), &p));
        assert!(!verify_solution(&gadget_b(), &VertexSet::from([9]), &p));
    }

    #[test]
    fn brute_force_examples() {
        let ct = ProblemProfile::named("claw-triangle").unwrap();
        assert_eq!(
            brute_force_opt(&gadget_b(), &ct, 3),
            Ok((1, VertexSet::from([0])))
        );
        assert_eq!(
            brute_force_opt(&build::complete(4), &ct, 0),
            Ok((0, VertexSet::default()))
        );
        let it = ProblemProfile::named("interval-tree").unwrap();
        assert_eq!(
            brute_force_opt(&build::cycle(4), &it, 2),
            Ok((1, VertexSet::from([0])))
        );
        assert_eq!(
            brute_force_opt(&build::cycle(4), &it, 0),
            Err(AboveCap { cap: 0 })
        );
    }
}
