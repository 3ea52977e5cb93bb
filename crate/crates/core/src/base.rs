//! Exact vertex deletion into a single hereditary class, used to finish
//! components that contain no obstruction pair.

use crate::catalog::{contains_induced, PatternFamily};
use crate::graph::{Graph, VertexSet};
use crate::profile::ProblemProfile;
use crate::recognize::{is_member_componentwise, minimal_obstruction_by, GraphClass};

/// Which of the profile's two classes a component is finished into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub fn class(self, profile: &ProblemProfile) -> GraphClass {
        match self {
            Side::One => profile.class1,
            Side::Two => profile.class2,
        }
    }
}

/// Minimum `S` with `|S| <= budget` such that every component of `G - S`
/// lies in `class`, or `None` when no such set fits the budget.
///
/// Branches on the vertices of a minimal obstruction found by peeling; any
/// solution must hit it.
pub fn exact_hereditary_deletion(g: &Graph, class: GraphClass, budget: usize) -> Option<VertexSet> {
    let labels: Vec<usize> = g.vertices().collect();
    best_deletion(g, &labels, class, budget).map(VertexSet::from_iter)
}

fn best_deletion(
    g: &Graph,
    labels: &[usize],
    class: GraphClass,
    budget: usize,
) -> Option<Vec<usize>> {
    if is_member_componentwise(g, class) {
        return Some(Vec::new());
    }
    if budget == 0 {
        return None;
    }
    let obstruction = minimal_obstruction_by(g, |h| is_member_componentwise(h, class))
        .expect("a non-member has an obstruction");
    let mut best: Option<Vec<usize>> = None;
    let mut cap = budget;
    for v in obstruction.iter() {
        if cap == 0 {
            break;
        }
        let (h, sub) = g.remove_vertices(&VertexSet::from([v]));
        let child_labels: Vec<usize> = sub.iter().map(|&i| labels[i]).collect();
        if let Some(mut s) = best_deletion(&h, &child_labels, class, cap - 1) {
            s.push(labels[v]);
            cap = s.len() - 1;
            best = Some(s);
        }
    }
    best
}

/// Sides whose obstruction-pair members are absent from `component`.
pub fn side_applicability(component: &Graph, profile: &ProblemProfile) -> Vec<Side> {
    let free = |fam: &PatternFamily| {
        fam.fixed
            .iter()
            .all(|h| !contains_induced(component, h.graph()))
    };
    let mut out = Vec::new();
    if free(&profile.side1_free) {
        out.push(Side::One);
    }
    if free(&profile.side2_free) {
        out.push(Side::Two);
    }
    out
}
