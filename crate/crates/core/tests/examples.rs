//! Small worked examples for each public operation.

use scattered::base::{exact_hereditary_deletion, side_applicability, Side};
use scattered::catalog::{
    enumerate_induced, find_hole, find_induced, forbidden_pairs, is_isomorphic, minimalize,
    sp_family, PatternFamily, PatternGraph,
};
use scattered::engine::{
    closest_pair_occurrence, reduce_components, solve_decision, solve_optimize,
};
use scattered::graph::{build, Graph, VertexSet};
use scattered::oracle::brute_force_opt;
use scattered::profile::ProblemProfile;
use scattered::recognize::{is_at_free, is_member, minimal_obstruction_peel, GraphClass};

fn profile(name: &str) -> ProblemProfile {
    ProblemProfile::named(name).unwrap()
}

/// Triangle 0-1-2 and a claw centered at 3 that uses vertex 0 as a leaf.
fn gadget_b() -> Graph {
    Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap()
}

fn sets(occ: Vec<scattered::catalog::Occurrence>) -> Vec<Vec<usize>> {
    occ.into_iter().map(|o| o.vertices.into_vec()).collect()
}

fn names(v: &[PatternGraph]) -> Vec<String> {
    v.iter().map(|p| p.name().to_string()).collect()
}

#[test]
fn pattern_search() {
    let claw = PatternGraph::claw();
    let hit = find_induced(&build::star(3), &claw).unwrap();
    assert_eq!(hit.vertices.as_slice(), &[0, 1, 2, 3]);
    assert!(find_induced(&build::cycle(4), &PatternGraph::triangle()).is_none());
    assert!(find_induced(&build::complete(4), &claw).is_none());
    assert_eq!(
        sets(enumerate_induced(&build::path(5), &PatternGraph::path(3))),
        vec![vec![0, 1, 2], vec![1, 2, 3], vec![2, 3, 4]]
    );
    assert!(enumerate_induced(&build::star(6), &PatternGraph::cycle(4)).is_empty());
}

#[test]
fn hole_search() {
    let c6 = find_hole(&build::cycle(6), 4, None).unwrap();
    assert_eq!(c6.vertices.len(), 6);
    let pendant = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
    assert!(find_hole(&pendant, 5, Some(10)).is_none());
    let chorded = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
    assert!(find_hole(&chorded, 4, None).is_none());
}

#[test]
fn super_pruned_families() {
    let interval = sp_family(&PatternFamily::interval(), &PatternFamily::cycles(), 12);
    let mut got = names(&interval);
    got.sort();
    let mut want: Vec<String> = ["net", "sun", "whipping-top"]
        .iter()
        .map(|s| s.to_string())
        .chain((4..=12).map(|l| format!("C{l}")))
        .chain((3..=8).map(|d| format!("dagger-aw-{d}")))
        .chain((2..=7).map(|d| format!("ddagger-aw-{d}")))
        .collect();
    want.sort();
    assert_eq!(got, want);

    let p3 = PatternFamily::finite(vec![PatternGraph::path(3)]);
    let k5 = PatternFamily::finite(vec![PatternGraph::complete(5)]);
    assert!(sp_family(&p3, &k5, 12).is_empty());
}

#[test]
fn forbidden_pair_families() {
    let show = |pairs: Vec<(PatternGraph, PatternGraph)>| -> Vec<(String, String)> {
        pairs
            .into_iter()
            .map(|(a, b)| (a.name().to_string(), b.name().to_string()))
            .collect()
    };
    let s = |a: &str, b: &str| (a.to_string(), b.to_string());
    assert_eq!(
        show(forbidden_pairs(
            &PatternFamily::interval(),
            &PatternFamily::cycles(),
            12
        )),
        vec![s("long-claw", "C3")]
    );
    assert_eq!(
        show(forbidden_pairs(
            &PatternFamily::split_components(),
            &PatternFamily::odd_cycles(),
            12
        )),
        vec![s("C4", "C3"), s("P5", "C3")]
    );
    assert_eq!(
        show(forbidden_pairs(
            &PatternFamily::chordal(),
            &PatternFamily::bipartite_permutation(),
            12
        )),
        vec![s("C4", "long-claw"), s("C4", "C3")]
    );
}

#[test]
fn minimalize_examples() {
    let m = minimalize(&[PatternGraph::path(3), PatternGraph::path(5)]);
    assert_eq!(names(&m), ["P3"]);
    let m = minimalize(&[PatternGraph::cycle(3), PatternGraph::cycle(4)]);
    assert_eq!(names(&m), ["C3", "C4"]);
    let m = minimalize(&[PatternGraph::claw(), PatternGraph::long_claw()]);
    assert_eq!(names(&m), ["claw"]);
}

#[test]
fn recognizer_examples() {
    assert!(!is_member(&build::cycle(4), GraphClass::Chordal));
    assert!(is_member(&build::complete(4), GraphClass::Cluster));
    assert!(!is_member(&build::path(3), GraphClass::Cluster));
    assert!(!is_member(&build::cycle(5), GraphClass::Split));
    assert!(!is_at_free(PatternGraph::long_claw().graph()));
    assert!(is_at_free(&build::path(6)));
    assert!(!is_at_free(&build::cycle(6)));
}

#[test]
fn peel_examples() {
    let mut e: Vec<_> = build::cycle(5).edges().collect();
    e.push((2, 5));
    let c5p = Graph::from_edges(6, e).unwrap();
    assert_eq!(
        minimal_obstruction_peel(&c5p, GraphClass::Forest)
            .unwrap()
            .as_slice(),
        &[0, 1, 2, 3, 4]
    );
    let c4p = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]).unwrap();
    assert_eq!(
        minimal_obstruction_peel(&c4p, GraphClass::Chordal)
            .unwrap()
            .as_slice(),
        &[0, 1, 2, 3]
    );
    let two = build::disjoint_union(&build::complete(3), &build::complete(3));
    let t = minimal_obstruction_peel(&two, GraphClass::TriangleFree).unwrap();
    assert!(is_isomorphic(
        &two.induced_subgraph(&t).0,
        PatternGraph::triangle().graph()
    ));
    assert_eq!(t.as_slice(), &[3, 4, 5]);
}

#[test]
fn reduction_examples() {
    let g = build::disjoint_union(&build::complete(4), &build::cycle(5));
    let (h, _, removed) = reduce_components(&g, &profile("claw-triangle"));
    assert_eq!((h.n(), removed.len()), (0, 2));
    let (h, _, _) = reduce_components(&build::path(7), &profile("interval-tree"));
    assert_eq!(h.n(), 0);
    let (h, _, removed) = reduce_components(&gadget_b(), &profile("claw-triangle"));
    assert_eq!((h.n(), removed.len()), (6, 0));
}

#[test]
fn closest_pair_examples() {
    let occ = closest_pair_occurrence(&gadget_b(), &profile("claw-triangle")).unwrap();
    assert_eq!(occ.j1.as_slice(), &[0, 3, 4, 5]);
    assert_eq!(occ.j2.as_slice(), &[0, 1, 2]);
    assert_eq!(occ.distance, 0);
    assert!(closest_pair_occurrence(&build::cycle(9), &profile("claw-triangle")).is_none());
}

#[test]
fn decision_examples() {
    let ct = profile("claw-triangle");
    let r = solve_decision(&gadget_b(), 1, &ct).unwrap();
    assert!(r.feasible);
    assert_eq!(r.value, Some(1));
    assert!(r.solution == VertexSet::from([0]) || r.solution == VertexSet::from([3]));
    assert!(
        solve_decision(&build::complete(4), 0, &ct)
            .unwrap()
            .feasible
    );

    let it = profile("interval-tree");
    assert!(!solve_decision(&build::cycle(4), 0, &it).unwrap().feasible);
    assert!(solve_decision(&build::cycle(4), 1, &it).unwrap().feasible);
    assert!(
        solve_decision(&build::cycle(5), 1, &profile("split-bipartite"))
            .unwrap()
            .feasible
    );
}

#[test]
fn optimize_examples() {
    let two = build::disjoint_union(&gadget_b(), &gadget_b());
    assert_eq!(
        solve_optimize(&two, &profile("claw-triangle"))
            .unwrap()
            .value,
        Some(2)
    );
    assert_eq!(
        solve_optimize(&build::cycle(11), &profile("interval-tree"))
            .unwrap()
            .value,
        Some(1)
    );
    for p in ProblemProfile::all() {
        assert_eq!(
            solve_optimize(&build::path(4), &p).unwrap().value,
            Some(0),
            "{}",
            p.name
        );
    }
}

#[test]
fn base_solver_examples() {
    assert_eq!(
        exact_hereditary_deletion(&build::cycle(7), GraphClass::Forest, 3)
            .unwrap()
            .len(),
        1
    );
    let it = profile("interval-tree");
    assert_eq!(
        side_applicability(&build::cycle(11), &it),
        vec![Side::One, Side::Two]
    );
    let tri_pendant = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
    assert_eq!(
        side_applicability(&tri_pendant, &profile("claw-triangle")),
        vec![Side::One]
    );
    for p in ProblemProfile::all() {
        assert_eq!(
            side_applicability(&Graph::empty(1), &p),
            vec![Side::One, Side::Two]
        );
    }
}

#[test]
fn oracle_matches_engine_on_gadgets() {
    let ct = profile("claw-triangle");
    let (v, s) = brute_force_opt(&gadget_b(), &ct, 3).unwrap();
    assert_eq!((v, s.as_slice()), (1, &[0][..]));
}
