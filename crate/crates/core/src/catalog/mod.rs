//! Forbidden induced subgraphs: named patterns, parametric pattern families,
//! occurrence search, and the super-pruned / forbidden-pair family algebra.

mod algebra;
mod matching;

pub use algebra::{forbidden_pairs, minimalize, sp_family};
pub use matching::{
    contains_induced, enumerate_induced, find_hole, find_induced, has_hole, is_isomorphic,
};

use std::fmt;

use crate::graph::{Graph, VertexSet};

/// A small fixed graph with a canonical vertex labeling.
#[derive(Clone, PartialEq, Eq)]
pub struct PatternGraph {
    name: String,
    graph: Graph,
    connected: bool,
}

impl fmt::Debug for PatternGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

impl fmt::Display for PatternGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

fn edges_graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).expect("catalog edge lists are valid")
}

impl PatternGraph {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        assert!(graph.n() >= 1, "patterns have at least one vertex");
        let connected = graph.is_connected();
        PatternGraph {
            name: name.into(),
            graph,
            connected,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.n()
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn path(n: usize) -> Self {
        PatternGraph::new(format!("P{n}"), crate::graph::build::path(n))
    }

    pub fn cycle(len: usize) -> Self {
        PatternGraph::new(format!("C{len}"), crate::graph::build::cycle(len))
    }

    pub fn complete(t: usize) -> Self {
        PatternGraph::new(format!("K{t}"), crate::graph::build::complete(t))
    }

    pub fn triangle() -> Self {
        Self::cycle(3)
    }

    /// K_{1,3}: center 0, leaves 1, 2, 3.
    pub fn claw() -> Self {
        PatternGraph::new("claw", crate::graph::build::star(3))
    }

    /// Center 0 with three legs of length two: 0-1-2, 0-3-4, 0-5-6.
    pub fn long_claw() -> Self {
        PatternGraph::new(
            "long-claw",
            edges_graph(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]),
        )
    }

    /// Triangle 0,1,2 with one pendant on each corner.
    pub fn net() -> Self {
        PatternGraph::new(
            "net",
            edges_graph(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]),
        )
    }

    /// Triangle 0,1,2; vertex 3 sees 0,1; vertex 4 sees 1,2; vertex 5 sees 0,2
    /// (also known as the tent).
    pub fn sun() -> Self {
        PatternGraph::new(
            "sun",
            edges_graph(
                6,
                &[
                    (0, 1),
                    (1, 2),
                    (0, 2),
                    (0, 3),
                    (1, 3),
                    (1, 4),
                    (2, 4),
                    (0, 5),
                    (2, 5),
                ],
            ),
        )
    }

    /// Path 0-1-2-3-4, apex 5 adjacent to the whole path, pendant 6 on vertex 2.
    pub fn whipping_top() -> Self {
        let mut e = vec![(0, 1), (1, 2), (2, 3), (3, 4), (2, 6)];
        e.extend((0..5).map(|i| (i, 5)));
        PatternGraph::new("whipping-top", edges_graph(7, &e))
    }

    /// Base path x0..x_{d+1} (vertices 0..=d+1), center d+2 adjacent to
    /// x1..xd, terminal d+3 adjacent to the center. `d = 2` is the net.
    pub fn dagger_aw(d: usize) -> Self {
        assert!(d >= 2);
        let c = d + 2;
        let t = d + 3;
        let mut e: Vec<_> = (0..=d).map(|i| (i, i + 1)).collect();
        e.extend((1..=d).map(|i| (i, c)));
        e.push((c, t));
        PatternGraph::new(format!("dagger-aw-{d}"), edges_graph(d + 4, &e))
    }

    /// Base path x0..x_{d+1}, adjacent centers c1 (sees x0..xd) and c2 (sees
    /// x1..x_{d+1}), terminal adjacent to both centers. `d = 1` is the sun.
    pub fn ddagger_aw(d: usize) -> Self {
        assert!(d >= 1);
        let c1 = d + 2;
        let c2 = d + 3;
        let t = d + 4;
        let mut e: Vec<_> = (0..=d).map(|i| (i, i + 1)).collect();
        e.extend((0..=d).map(|i| (i, c1)));
        e.extend((1..=d + 1).map(|i| (i, c2)));
        e.extend([(c1, c2), (c1, t), (c2, t)]);
        PatternGraph::new(format!("ddagger-aw-{d}"), edges_graph(d + 5, &e))
    }

    /// P4 a-b-c-d plus e adjacent to a and b (vertices a..e = 0..4).
    pub fn necktie() -> Self {
        PatternGraph::new(
            "necktie",
            edges_graph(5, &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4)]),
        )
    }

    /// Necktie plus the edge b-d: two triangles sharing vertex b.
    pub fn bowtie() -> Self {
        PatternGraph::new(
            "bowtie",
            edges_graph(5, &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (1, 3)]),
        )
    }

    /// K4 minus the edge 2-3.
    pub fn d4() -> Self {
        PatternGraph::new(
            "D4",
            edges_graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
        )
    }

    /// Domino (squares 0-1-4-5 and 1-2-3-4) with a pendant 6 on vertex 1.
    pub fn x2() -> Self {
        PatternGraph::new(
            "X2",
            edges_graph(
                7,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 0),
                    (1, 4),
                    (1, 6),
                ],
            ),
        )
    }

    /// Square 0-1-2-3 with pendants 4, 5, 6 on vertices 1, 2, 3.
    pub fn x3() -> Self {
        PatternGraph::new(
            "X3",
            edges_graph(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (2, 5), (3, 6)]),
        )
    }

    pub fn two_k1() -> Self {
        PatternGraph::new("2K1", Graph::empty(2))
    }

    pub fn two_k2() -> Self {
        PatternGraph::new("2K2", edges_graph(4, &[(0, 1), (2, 3)]))
    }

    /// Resolves a catalog name such as `claw`, `C7`, `K4`, `dagger-aw-3`.
    pub fn by_name(name: &str) -> Option<Self> {
        let fixed = match name {
            "claw" => Some(Self::claw()),
            "long-claw" => Some(Self::long_claw()),
            "net" => Some(Self::net()),
            "sun" | "tent" => Some(Self::sun()),
            "whipping-top" => Some(Self::whipping_top()),
            "necktie" => Some(Self::necktie()),
            "bowtie" => Some(Self::bowtie()),
            "triangle" => Some(Self::triangle()),
            "D4" => Some(Self::d4()),
            "X2" => Some(Self::x2()),
            "X3" => Some(Self::x3()),
            "2K1" => Some(Self::two_k1()),
            "2K2" => Some(Self::two_k2()),
            _ => None,
        };
        if fixed.is_some() {
            return fixed;
        }
        let num = |prefix: &str| -> Option<usize> {
            let rest = name.strip_prefix(prefix)?;
            if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            rest.parse().ok()
        };
        if let Some(d) = num("ddagger-aw-") {
            return (1..=7).contains(&d).then(|| Self::ddagger_aw(d));
        }
        if let Some(d) = num("dagger-aw-") {
            return (2..=8).contains(&d).then(|| Self::dagger_aw(d));
        }
        if let Some(n) = num("P") {
            return (1..=12).contains(&n).then(|| Self::path(n));
        }
        if let Some(n) = num("C") {
            return (3..=12).contains(&n).then(|| Self::cycle(n));
        }
        if let Some(n) = num("K") {
            return (1..=12).contains(&n).then(|| Self::complete(n));
        }
        None
    }
}

/// An infinite (or long) run of patterns indexed by one integer parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `C_l` for every `l >= min_len`; `odd_only` keeps odd lengths.
    Cycles { min_len: usize, odd_only: bool },
    /// †-AW with base parameter `d >= min_d`.
    DaggerAw { min_d: usize },
    /// ‡-AW with base parameter `d >= min_d`.
    DdaggerAw { min_d: usize },
}

impl Generator {
    /// Members with at most `size_cap` vertices, ascending by size.
    pub fn instantiate(&self, size_cap: usize) -> Vec<PatternGraph> {
        match *self {
            Generator::Cycles { min_len, odd_only } => (min_len.max(3)..=size_cap)
                .filter(|l| !odd_only || l % 2 == 1)
                .map(PatternGraph::cycle)
                .collect(),
            Generator::DaggerAw { min_d } => (min_d.max(2)..)
                .take_while(|d| d + 4 <= size_cap)
                .map(PatternGraph::dagger_aw)
                .collect(),
            Generator::DdaggerAw { min_d } => (min_d.max(1)..)
                .take_while(|d| d + 5 <= size_cap)
                .map(PatternGraph::ddagger_aw)
                .collect(),
        }
    }
}

/// A set of forbidden patterns: explicit members plus parametric tails that
/// are only ever materialized up to an explicit size cap.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PatternFamily {
    pub fixed: Vec<PatternGraph>,
    pub parametric: Vec<Generator>,
}

impl PatternFamily {
    pub fn finite(fixed: Vec<PatternGraph>) -> Self {
        PatternFamily {
            fixed,
            parametric: Vec::new(),
        }
    }

    /// Fixed members (in order) followed by every generator's members.
    pub fn members(&self, size_cap: usize) -> Vec<PatternGraph> {
        let mut out: Vec<PatternGraph> = self
            .fixed
            .iter()
            .filter(|p| p.order() <= size_cap)
            .cloned()
            .collect();
        for g in &self.parametric {
            out.extend(g.instantiate(size_cap));
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.fixed.is_empty() && self.parametric.is_empty()
    }

    /// Lekkerkerker–Boland obstructions for interval graphs.
    pub fn interval() -> Self {
        PatternFamily {
            fixed: vec![
                PatternGraph::net(),
                PatternGraph::sun(),
                PatternGraph::long_claw(),
                PatternGraph::whipping_top(),
            ],
            parametric: vec![
                Generator::DaggerAw { min_d: 3 },
                Generator::DdaggerAw { min_d: 2 },
                Generator::Cycles {
                    min_len: 4,
                    odd_only: false,
                },
            ],
        }
    }

    pub fn proper_interval() -> Self {
        PatternFamily {
            fixed: vec![
                PatternGraph::claw(),
                PatternGraph::net(),
                PatternGraph::sun(),
            ],
            parametric: vec![Generator::Cycles {
                min_len: 4,
                odd_only: false,
            }],
        }
    }

    pub fn chordal() -> Self {
        PatternFamily {
            fixed: vec![],
            parametric: vec![Generator::Cycles {
                min_len: 4,
                odd_only: false,
            }],
        }
    }

    pub fn bipartite_permutation() -> Self {
        PatternFamily {
            fixed: vec![
                PatternGraph::long_claw(),
                PatternGraph::x2(),
                PatternGraph::x3(),
                PatternGraph::triangle(),
            ],
            parametric: vec![Generator::Cycles {
                min_len: 5,
                odd_only: false,
            }],
        }
    }

    /// Connected obstructions for "every component is a split graph".
    pub fn split_components() -> Self {
        PatternFamily::finite(vec![
            PatternGraph::cycle(4),
            PatternGraph::cycle(5),
            PatternGraph::path(5),
            PatternGraph::necktie(),
            PatternGraph::bowtie(),
        ])
    }

    pub fn odd_cycles() -> Self {
        PatternFamily {
            fixed: vec![],
            parametric: vec![Generator::Cycles {
                min_len: 3,
                odd_only: true,
            }],
        }
    }

    /// All cycles: the obstructions for forests.
    pub fn cycles() -> Self {
        PatternFamily {
            fixed: vec![],
            parametric: vec![Generator::Cycles {
                min_len: 3,
                odd_only: false,
            }],
        }
    }

    pub fn cluster() -> Self {
        PatternFamily::finite(vec![PatternGraph::path(3)])
    }

    pub fn claw_free() -> Self {
        PatternFamily::finite(vec![PatternGraph::claw()])
    }

    pub fn triangle_free() -> Self {
        PatternFamily::finite(vec![PatternGraph::triangle()])
    }
}

/// One induced copy of a pattern inside a host graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Occurrence {
    pub pattern: String,
    pub vertices: VertexSet,
}
