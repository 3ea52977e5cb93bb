//! Polynomial membership tests for the hereditary classes used by the
//! profiles, and a peeling routine that shrinks any non-member down to a
//! vertex-minimal obstruction.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::catalog::PatternFamily;
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass {
    Forest,
    Bipartite,
    Cluster,
    ClawFree,
    TriangleFree,
    Chordal,
    Interval,
    ProperInterval,
    Split,
    BipartitePermutation,
}

impl GraphClass {
    pub const ALL: [GraphClass; 10] = [
        GraphClass::Forest,
        GraphClass::Bipartite,
        GraphClass::Cluster,
        GraphClass::ClawFree,
        GraphClass::TriangleFree,
        GraphClass::Chordal,
        GraphClass::Interval,
        GraphClass::ProperInterval,
        GraphClass::Split,
        GraphClass::BipartitePermutation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Forest => "forest",
            GraphClass::Bipartite => "bipartite",
            GraphClass::Cluster => "cluster",
            GraphClass::ClawFree => "claw-free",
            GraphClass::TriangleFree => "triangle-free",
            GraphClass::Chordal => "chordal",
            GraphClass::Interval => "interval",
            GraphClass::ProperInterval => "proper-interval",
            GraphClass::Split => "split",
            GraphClass::BipartitePermutation => "bipartite-permutation",
        }
    }

    /// Forbidden induced subgraphs of the class. For `Split` this is the
    /// connected family, which characterizes "every component is split";
    /// whole-graph splitness additionally forbids 2K2.
    pub fn obstructions(self) -> PatternFamily {
        match self {
            GraphClass::Forest => PatternFamily::cycles(),
            GraphClass::Bipartite => PatternFamily::odd_cycles(),
            GraphClass::Cluster => PatternFamily::cluster(),
            GraphClass::ClawFree => PatternFamily::claw_free(),
            GraphClass::TriangleFree => PatternFamily::triangle_free(),
            GraphClass::Chordal => PatternFamily::chordal(),
            GraphClass::Interval => PatternFamily::interval(),
            GraphClass::ProperInterval => PatternFamily::proper_interval(),
            GraphClass::Split => PatternFamily::split_components(),
            GraphClass::BipartitePermutation => PatternFamily::bipartite_permutation(),
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown graph class `{0}`")]
pub struct UnknownClass(pub String);

impl FromStr for GraphClass {
    type Err = UnknownClass;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| UnknownClass(s.to_string()))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RecognizeError {
    #[error("graph already belongs to {0}")]
    AlreadyMember(GraphClass),
}

pub fn is_member(g: &Graph, class: GraphClass) -> bool {
    match class {
        GraphClass::Forest => is_forest(g),
        GraphClass::Bipartite => is_bipartite(g),
        GraphClass::Cluster => is_cluster(g),
        GraphClass::ClawFree => is_claw_free(g),
        GraphClass::TriangleFree => is_triangle_free(g),
        GraphClass::Chordal => is_chordal(g),
        GraphClass::Interval => is_chordal(g) && is_at_free(g),
        GraphClass::ProperInterval => is_claw_free(g) && is_chordal(g) && is_at_free(g),
        GraphClass::Split => is_split(g),
        GraphClass::BipartitePermutation => is_bipartite(g) && is_at_free(g),
    }
}

/// Whether every connected component of `g` belongs to `class`. Differs
/// from [`is_member`] only for classes not closed under disjoint union.
pub fn is_member_componentwise(g: &Graph, class: GraphClass) -> bool {
    if class != GraphClass::Split {
        return is_member(g, class);
    }
    g.connected_components()
        .iter()
        .all(|c| is_member(&g.induced_subgraph(c).0, class))
}

pub fn is_forest(g: &Graph) -> bool {
    g.edge_count() + g.connected_components().len() == g.n()
}

pub fn is_bipartite(g: &Graph) -> bool {
    two_coloring(g).is_some()
}

/// A proper 2-coloring, coloring the smallest vertex of each component 0.
pub fn two_coloring(g: &Graph) -> Option<Vec<u8>> {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    let mut queue = Vec::new();
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        queue.clear();
        queue.push(s);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &w in g.neighbors(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    queue.push(w);
                } else if color[w] == color[u] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

pub fn is_cluster(g: &Graph) -> bool {
    g.connected_components()
        .iter()
        .all(|c| c.iter().all(|v| g.degree(v) + 1 == c.len()))
}

pub fn is_claw_free(g: &Graph) -> bool {
    g.vertices().all(|v| {
        let nb = g.neighbors(v);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                if nb[j + 1..]
                    .iter()
                    .any(|&c| !g.has_edge(a, c) && !g.has_edge(b, c))
                {
                    return false;
                }
            }
        }
        true
    })
}

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges().all(|(u, v)| {
        let (small, other) = if g.degree(u) <= g.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        g.neighbors(small).iter().all(|&w| !g.has_edge(other, w))
    })
}

/// Maximum cardinality search order; position 0 is visited last, so the
/// returned sequence is a perfect elimination order whenever `g` is chordal.
fn mcs_elimination_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut order = vec![0; n];
    for slot in (0..n).rev() {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex exists");
        done[v] = true;
        order[slot] = v;
        for &w in g.neighbors(v) {
            if !done[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

pub fn is_chordal(g: &Graph) -> bool {
    let order = mcs_elimination_order(g);
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        match later.iter().copied().min_by_key(|&w| pos[w]) {
            None => true,
            Some(p) => later.iter().all(|&w| w == p || g.has_edge(p, w)),
        }
    })
}

/// No asteroidal triple: three pairwise non-adjacent vertices such that each
/// pair is joined by a path avoiding the closed neighborhood of the third.
pub fn is_at_free(g: &Graph) -> bool {
    let n = g.n();
    // comp[c][v]: component id of v in G - N[c], or usize::MAX if v is in N[c].
    let comp: Vec<Vec<usize>> = (0..n)
        .map(|c| {
            let mut id = vec![usize::MAX; n];
            let mut blocked = vec![false; n];
            blocked[c] = true;
            for &w in g.neighbors(c) {
                blocked[w] = true;
            }
            let mut next = 0;
            let mut stack = Vec::new();
            for s in 0..n {
                if blocked[s] || id[s] != usize::MAX {
                    continue;
                }
                id[s] = next;
                stack.push(s);
                while let Some(u) = stack.pop() {
                    for &w in g.neighbors(u) {
                        if !blocked[w] && id[w] == usize::MAX {
                            id[w] = next;
                            stack.push(w);
                        }
                    }
                }
                next += 1;
            }
            id
        })
        .collect();
    let linked =
        |a: usize, b: usize, c: usize| comp[c][a] != usize::MAX && comp[c][a] == comp[c][b];
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) || g.has_edge(b, c) {
                    continue;
                }
                if linked(a, b, c) && linked(a, c, b) && linked(b, c, a) {
                    return false;
                }
            }
        }
    }
    true
}

/// Degree-sequence test: with degrees sorted descending and `m` the largest
/// index with `d_m >= m - 1`, `g` is split iff the top `m` degrees sum to
/// `m(m-1)` plus the remaining degrees.
pub fn is_split(g: &Graph) -> bool {
    let mut d = g.degree_sequence();
    d.reverse();
    let m = d
        .iter()
        .enumerate()
        .filter(|&(i, &di)| di >= i)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0);
    let top: usize = d[..m].iter().sum();
    let rest: usize = d[m..].iter().sum();
    top == m * m.saturating_sub(1) + rest
}

/// Shrinks a graph failing `keep` to a vertex set `S` such that `G[S]`
/// fails `keep` while every `G[S - v]` passes. `keep` must be hereditary.
/// Vertices are tried for removal in ascending order, repeatedly, until no
/// single removal keeps the graph outside the class.
pub fn minimal_obstruction_by<F>(g: &Graph, keep: F) -> Option<VertexSet>
where
    F: Fn(&Graph) -> bool,
{
    if keep(g) {
        return None;
    }
    let mut current: Vec<usize> = g.vertices().collect();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < current.len() {
            let trial: VertexSet = current
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &v)| v)
                .collect();
            if !keep(&g.induced_subgraph(&trial).0) {
                current.remove(i);
                changed = true;
            } else {
                i += 1;
            }
        }
        if !changed {
            return Some(VertexSet::from_iter(current));
        }
    }
}

/// A vertex-minimal subset of `g` that induces a non-member of `class`.
pub fn minimal_obstruction_peel(g: &Graph, class: GraphClass) -> Result<VertexSet, RecognizeError> {
    minimal_obstruction_by(g, |h| is_member(h, class)).ok_or(RecognizeError::AlreadyMember(class))
}
