//! Problem profiles: a pair of target classes together with the obstruction
//! pairs, preprocessing patterns and width constants the engine needs.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::catalog::{is_isomorphic, sp_family, PatternFamily, PatternGraph};
use crate::recognize::GraphClass;

/// How the engine uses the obstruction pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Side one forbids exactly one path `P_alpha`; branch on both
    /// occurrences plus the interior of the shortest path between them.
    A,
    /// Like `A`, with `P_alpha` one of several side-one patterns.
    B,
    /// Branch on preprocessing patterns first, then on pair occurrences
    /// alone, and finish pair-free components with the base solver.
    C,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Mode::A => "A",
            Mode::B => "B",
            Mode::C => "C",
        };
        f.write_str(s)
    }
}

/// Shape that the component between a closest pair is expected to have in
/// a graph free of the preprocessing patterns. Used only for auditing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SiteShape {
    /// The component is exactly the interior of the connecting path.
    BarePath,
    /// The component is a tree whose off-path vertices are pendant leaves.
    Caterpillar,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProfileError {
    #[error("unknown profile `{0}`")]
    Unknown(String),
    #[error("profile has no obstruction pairs")]
    NoPairs,
    #[error("pair member {0} is disconnected")]
    DisconnectedPair(String),
    #[error("mode {mode} needs P{alpha} among the side-one patterns")]
    MissingPath { mode: Mode, alpha: usize },
    #[error("mode {0} does not use preprocessing patterns")]
    UnexpectedPreprocessing(Mode),
    #[error("pattern {name} has {order} vertices, above the width bound {c}")]
    WidthTooSmall {
        name: String,
        order: usize,
        c: usize,
    },
}

#[derive(Clone, Debug)]
pub struct ProblemProfile {
    pub name: String,
    pub class1: GraphClass,
    pub class2: GraphClass,
    pub pairs: Vec<(PatternGraph, PatternGraph)>,
    /// Patterns branched on before any pair (mode C only).
    pub g1: Vec<PatternGraph>,
    /// Distinct first members of `pairs`: a component free of all of them
    /// can be finished by deleting into `class1`.
    pub side1_free: PatternFamily,
    pub side2_free: PatternFamily,
    pub mode: Mode,
    pub alpha: usize,
    /// Bound on the branching width.
    pub c: usize,
    /// Approximation factor.
    pub d: usize,
    pub site_shape: Option<SiteShape>,
    /// Size cap used to derive `g1` from the two class families.
    pub g1_cap: usize,
}

fn distinct(patterns: impl Iterator<Item = PatternGraph>) -> Vec<PatternGraph> {
    let mut out: Vec<PatternGraph> = Vec::new();
    for p in patterns {
        if !out.iter().any(|q| is_isomorphic(q.graph(), p.graph())) {
            out.push(p);
        }
    }
    out
}

fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn interval_tree_g1() -> Vec<String> {
    let mut v: Vec<String> = (4..=10).map(|l| format!("C{l}")).collect();
    v.extend(strs(&["net", "sun", "whipping-top"]));
    v.extend((3..=6).map(|d| format!("dagger-aw-{d}")));
    v.extend((2..=5).map(|d| format!("ddagger-aw-{d}")));
    v
}

fn chordal_bipperm_g1() -> Vec<String> {
    let mut v: Vec<String> = (5..=10).map(|l| format!("C{l}")).collect();
    v.extend(strs(&["X2", "X3"]));
    v
}

pub const PROFILE_NAMES: [&str; 6] = [
    "claw-triangle",
    "interval-tree",
    "proper-interval-tree",
    "chordal-bipperm",
    "split-bipartite",
    "cluster-forest",
];

impl ProblemProfile {
    /// Builds and validates a profile. Side families are derived from `pairs`.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        class1: GraphClass,
        class2: GraphClass,
        pairs: Vec<(PatternGraph, PatternGraph)>,
        g1: Vec<PatternGraph>,
        mode: Mode,
        alpha: usize,
        c: usize,
        d: usize,
    ) -> Result<Self, ProfileError> {
        if pairs.is_empty() {
            return Err(ProfileError::NoPairs);
        }
        for (a, b) in &pairs {
            for h in [a, b] {
                if !h.is_connected() {
                    return Err(ProfileError::DisconnectedPair(h.name().to_string()));
                }
            }
        }
        let side1 = distinct(pairs.iter().map(|p| p.0.clone()));
        let side2 = distinct(pairs.iter().map(|p| p.1.clone()));
        match mode {
            Mode::A | Mode::B => {
                if !g1.is_empty() {
                    return Err(ProfileError::UnexpectedPreprocessing(mode));
                }
                let path = PatternGraph::path(alpha.max(1));
                let has_path = alpha >= 2
                    && side1.iter().any(|h| is_isomorphic(h.graph(), path.graph()))
                    && (mode == Mode::B || side1.len() == 1);
                if !has_path {
                    return Err(ProfileError::MissingPath { mode, alpha });
                }
            }
            Mode::C => {
                for (a, b) in &pairs {
                    if a.order() + b.order() > c {
                        return Err(ProfileError::WidthTooSmall {
                            name: format!("{a}+{b}"),
                            order: a.order() + b.order(),
                            c,
                        });
                    }
                }
            }
        }
        if let Some(p) = g1.iter().find(|p| p.order() > c) {
            return Err(ProfileError::WidthTooSmall {
                name: p.name().to_string(),
                order: p.order(),
                c,
            });
        }
        Ok(ProblemProfile {
            name: name.into(),
            class1,
            class2,
            pairs,
            g1,
            side1_free: PatternFamily::finite(side1),
            side2_free: PatternFamily::finite(side2),
            mode,
            alpha,
            c,
            d,
            site_shape: None,
            g1_cap: 0,
        })
    }

    fn with_site(mut self, shape: SiteShape) -> Self {
        self.site_shape = Some(shape);
        self
    }

    /// Sets the preprocessing patterns, which should equal the super-pruned
    /// family of the two classes truncated at `cap` vertices.
    fn with_g1(mut self, names: &[String], cap: usize) -> Result<Self, ProfileError> {
        self.g1 = names
            .iter()
            .map(|n| PatternGraph::by_name(n).expect("catalog name"))
            .collect();
        self.g1_cap = cap;
        if let Some(p) = self.g1.iter().find(|p| p.order() > self.c) {
            return Err(ProfileError::WidthTooSmall {
                name: p.name().to_string(),
                order: p.order(),
                c: self.c,
            });
        }
        Ok(self)
    }

    /// The preprocessing family recomputed from the class obstructions.
    pub fn derived_g1(&self) -> Vec<PatternGraph> {
        sp_family(
            &self.class1.obstructions(),
            &self.class2.obstructions(),
            self.g1_cap,
        )
    }

    pub fn named(name: &str) -> Result<Self, ProfileError> {
        use GraphClass::*;
        let pg = PatternGraph::by_name;
        let p = |s: &str| pg(s).expect("catalog name");
        match name {
            "claw-triangle" => ProblemProfile::new(
                name,
                ClawFree,
                TriangleFree,
                vec![(p("claw"), p("C3"))],
                vec![],
                Mode::C,
                0,
                7,
                7,
            )
            .map(|x| x.with_site(SiteShape::BarePath)),
            "interval-tree" => ProblemProfile::new(
                name,
                Interval,
                Forest,
                vec![(p("long-claw"), p("C3"))],
                vec![],
                Mode::C,
                0,
                10,
                10,
            )
            .and_then(|x| x.with_g1(&interval_tree_g1(), 10))
            .map(|x| x.with_site(SiteShape::Caterpillar)),
            "proper-interval-tree" => ProblemProfile::new(
                name,
                ProperInterval,
                Forest,
                vec![(p("claw"), p("C3"))],
                vec![],
                Mode::C,
                0,
                7,
                7,
            )
            .and_then(|x| x.with_g1(&strs(&["net", "sun", "C4", "C5", "C6", "C7"]), 7))
            .map(|x| x.with_site(SiteShape::BarePath)),
            "chordal-bipperm" => ProblemProfile::new(
                name,
                Chordal,
                BipartitePermutation,
                vec![(p("C4"), p("long-claw")), (p("C4"), p("C3"))],
                vec![],
                Mode::C,
                0,
                11,
                11,
            )
            .and_then(|x| x.with_g1(&chordal_bipperm_g1(), 10))
            .map(|x| x.with_site(SiteShape::Caterpillar)),
            "split-bipartite" => ProblemProfile::new(
                name,
                Split,
                Bipartite,
                vec![(p("C4"), p("C3")), (p("P5"), p("C3"))],
                vec![],
                Mode::B,
                5,
                11,
                11,
            ),
            "cluster-forest" => ProblemProfile::new(
                name,
                Cluster,
                Forest,
                vec![(p("P3"), p("C3"))],
                vec![],
                Mode::B,
                3,
                4,
                4,
            ),
            _ => Err(ProfileError::Unknown(name.to_string())),
        }
    }

    pub fn all() -> Vec<Self> {
        PROFILE_NAMES
            .iter()
            .map(|n| ProblemProfile::named(n).expect("built-in profiles are valid"))
            .collect()
    }

    /// Whether side one forbids the path `P_alpha` (so connecting paths are short).
    pub fn has_path_bound(&self) -> bool {
        self.mode != Mode::C && self.alpha >= 2
    }
}

impl FromStr for ProblemProfile {
    type Err = ProfileError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ProblemProfile::named(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[PatternGraph]) -> Vec<String> {
        v.iter().map(|p| p.name().to_string()).collect()
    }

    #[test]
    fn all_profiles_build() {
        let all = ProblemProfile::all();
        assert_eq!(all.len(), 6);
        for p in &all {
            assert!(p.g1.iter().all(|h| h.order() <= p.c), "{}", p.name);
        }
    }

    #[test]
    fn interval_tree_preprocessing() {
        let p = ProblemProfile::named("interval-tree").unwrap();
        let mut got = names(&p.derived_g1());
        got.sort();
        let mut fixed = names(&p.g1);
        fixed.sort();
        assert_eq!(got, fixed);
        let mut want: Vec<String> = ["net", "sun", "whipping-top"]
            .iter()
            .map(|s| s.to_string())
            .chain((4..=10).map(|l| format!("C{l}")))
            .chain((3..=6).map(|d| format!("dagger-aw-{d}")))
            .chain((2..=5).map(|d| format!("ddagger-aw-{d}")))
            .collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn proper_interval_and_chordal_preprocessing() {
        let p = ProblemProfile::named("proper-interval-tree").unwrap();
        assert_eq!(
            names(&p.derived_g1()),
            ["C4", "C5", "C6", "net", "sun", "C7"]
        );
        let q = ProblemProfile::named("chordal-bipperm").unwrap();
        assert_eq!(
            names(&q.derived_g1()),
            ["C5", "C6", "C7", "X3", "X2", "C8", "C9", "C10"]
        );
    }

    #[test]
    fn side_families_follow_pairs() {
        let p = ProblemProfile::named("chordal-bipperm").unwrap();
        assert_eq!(names(&p.side1_free.fixed), ["C4"]);
        assert_eq!(names(&p.side2_free.fixed), ["long-claw", "C3"]);
    }

    #[test]
    fn invalid_profiles_are_rejected() {
        let p3 = PatternGraph::path(3);
        let c3 = PatternGraph::cycle(3);
        let err = ProblemProfile::new(
            "x",
            GraphClass::Cluster,
            GraphClass::Forest,
            vec![(p3.clone(), c3.clone())],
            vec![],
            Mode::B,
            4,
            4,
            4,
        );
        assert_eq!(
            err.unwrap_err(),
            ProfileError::MissingPath {
                mode: Mode::B,
                alpha: 4
            }
        );
        let err = ProblemProfile::new(
            "x",
            GraphClass::Cluster,
            GraphClass::Forest,
            vec![(PatternGraph::two_k1(), c3)],
            vec![],
            Mode::C,
            0,
            9,
            9,
        );
        assert!(matches!(err, Err(ProfileError::DisconnectedPair(_))));
        assert!(ProblemProfile::named("nope").is_err());
    }
}
