//! Immutable simple undirected graphs over dense `0..n` vertex indices.
//!
//! Besides the adjacency structure this module owns the two external graph
//! formats: the whitespace-separated edge list (`n m` header followed by `m`
//! edge lines) and the JSON object `{"n": .., "edges": [[u, v], ..]}`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range (n = {n})")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input: missing \"n m\" header")]
    MissingHeader,
    #[error("malformed header (line {line}): {reason}")]
    Header { line: usize, reason: String },
    #[error("malformed edge (line {line}): {reason}")]
    Edge { line: usize, reason: String },
    #[error("vertex {vertex} out of range (line {line})")]
    OutOfRange { vertex: usize, line: usize },
    #[error("self-loop on vertex {vertex} (line {line})")]
    SelfLoop { vertex: usize, line: usize },
    #[error("header declares {declared} edges but {found} edge lines follow")]
    EdgeCount { declared: usize, found: usize },
    #[error("invalid graph JSON: {0}")]
    Json(String),
}

/// Sorted, duplicate-free list of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from a list that is already sorted and duplicate-free.
    pub fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    /// Maps every member through `labels` (e.g. back to host indices).
    pub fn relabel(&self, labels: &[usize]) -> VertexSet {
        self.iter().map(|v| labels[v]).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Ordered vertex sequence `x0, x1, .., xd`; its length is the edge count `d`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path(Vec<usize>);

impl Path {
    pub fn new(vertices: Vec<usize>) -> Self {
        assert!(!vertices.is_empty(), "a path has at least one vertex");
        Path(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_trivial(&self) -> bool {
        self.0.len() == 1
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        *self.0.last().unwrap()
    }

    /// The path without its two end vertices.
    pub fn interior(&self) -> &[usize] {
        if self.0.len() <= 2 {
            &[]
        } else {
            &self.0[1..self.0.len() - 1]
        }
    }

    pub fn relabel(&self, labels: &[usize]) -> Path {
        Path(self.0.iter().map(|&v| labels[v]).collect())
    }

    /// True when consecutive vertices are adjacent in `g` and no vertex repeats.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let distinct: VertexSet = self.0.iter().copied().collect();
        distinct.len() == self.0.len()
            && self.0.iter().all(|&v| v < g.n())
            && self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    words: usize,
    bits: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        Graph {
            n,
            adj: vec![Vec::new(); n],
            words,
            bits: vec![0; n * words],
        }
    }

    /// Builds a graph from an edge list; parallel edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set_bit(u, v);
            g.set_bit(v, u);
        }
        g.rebuild_adjacency();
        Ok(g)
    }

    fn set_bit(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1u64 << (v % 64);
    }

    fn rebuild_adjacency(&mut self) {
        for u in 0..self.n {
            let row = &self.bits[u * self.words..(u + 1) * self.words];
            let mut list = Vec::new();
            for (w, &word) in row.iter().enumerate() {
                let mut word = word;
                while word != 0 {
                    let b = word.trailing_zeros() as usize;
                    list.push(w * 64 + b);
                    word &= word - 1;
                }
            }
            self.adj[u] = list;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.bits[u * self.words + v / 64] >> (v % 64)) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Connected components ordered by their minimum vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut parts = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut part = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                        part.push(w);
                    }
                }
            }
            parts.push(part.into_iter().collect());
        }
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// Subgraph induced by `s`, plus the map from new indices to old ones.
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = s.iter().collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(map.len());
        for (i, &v) in map.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX {
                    g.set_bit(i, j);
                }
            }
        }
        g.rebuild_adjacency();
        (g, map)
    }

    /// `G - removed`, plus the map from new indices to old ones.
    pub fn remove_vertices(&self, removed: &VertexSet) -> (Graph, Vec<usize>) {
        let keep: VertexSet = self.vertices().filter(|&v| !removed.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// BFS distances from every vertex of `sources` (None = unreachable).
    pub fn multi_source_bfs(&self, sources: &VertexSet) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in sources.iter() {
            dist[s] = Some(0);
            queue.push_back(s);
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Minimum distance between `a` and `b` together with the lexicographically
    /// smallest shortest path that starts in `a` and ends in `b`. `None` when no
    /// vertex of `a` reaches `b`.
    pub fn distance_between_sets(&self, a: &VertexSet, b: &VertexSet) -> Option<(usize, Path)> {
        assert!(
            !a.is_empty() && !b.is_empty(),
            "distance needs nonempty sets"
        );
        let to_b = self.multi_source_bfs(b);
        let start = a.iter().filter_map(|v| to_b[v].map(|d| (d, v))).min()?;
        let (d, mut cur) = start;
        let mut path = vec![cur];
        for remaining in (0..d).rev() {
            // neighbor lists are sorted, so the first hit is the smallest
            cur = *self.adj[cur]
                .iter()
                .find(|&&w| to_b[w] == Some(remaining))
                .expect("BFS layer has a predecessor");
            path.push(cur);
        }
        Some((d, Path(path)))
    }

    /// Serializes to the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Graph, ParseError> {
        Graph::from_edges(json.n, json.edges.iter().map(|e| (e[0], e[1])))
            .map_err(|e| ParseError::Json(e.to_string()))
    }
}

/// JSON form of a graph: edges as `[u, v]` with `u < v`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

fn parse_usize(tok: &str) -> Option<usize> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    tok.parse().ok()
}

/// Parses the edge-list format. Blank lines and `#` comments are skipped;
/// fields are separated by runs of spaces or tabs; LF and CRLF both work.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .split('\n')
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| {
            let t = l.trim_matches(|c| c == ' ' || c == '\t');
            !t.is_empty() && !t.starts_with('#')
        });

    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let fields: Vec<&str> = header
        .split([' ', '\t'])
        .filter(|s| !s.is_empty())
        .collect();
    if fields.len() != 2 {
        return Err(ParseError::Header {
            line: hline,
            reason: format!("expected \"n m\", got {} fields", fields.len()),
        });
    }
    let n = parse_usize(fields[0]).ok_or_else(|| ParseError::Header {
        line: hline,
        reason: format!("invalid vertex count {:?}", fields[0]),
    })?;
    let m = parse_usize(fields[1]).ok_or_else(|| ParseError::Header {
        line: hline,
        reason: format!("invalid edge count {:?}", fields[1]),
    })?;

    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let f: Vec<&str> = l.split([' ', '\t']).filter(|s| !s.is_empty()).collect();
        if f.len() != 2 {
            return Err(ParseError::Edge {
                line,
                reason: format!("expected \"u v\", got {} fields", f.len()),
            });
        }
        let mut ends = [0usize; 2];
        for (slot, tok) in ends.iter_mut().zip(&f) {
            *slot = parse_usize(tok).ok_or_else(|| ParseError::Edge {
                line,
                reason: format!("invalid vertex {tok:?}"),
            })?;
            if *slot >= n {
                return Err(ParseError::OutOfRange {
                    vertex: *slot,
                    line,
                });
            }
        }
        if ends[0] == ends[1] {
            return Err(ParseError::SelfLoop {
                vertex: ends[0],
                line,
            });
        }
        edges.push((ends[0], ends[1]));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, edges).expect("edges validated above"))
}

/// Accepts either the edge-list format or the JSON graph object.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    if text.trim_start().starts_with('{') {
        let json: GraphJson =
            serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
        Graph::from_json(&json)
    } else {
        parse_edge_list(text)
    }
}

/// Small named graph builders used across the crate and its tests.
pub mod build {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    /// Disjoint union; vertices of `b` are shifted by `a.n()`.
    pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
        let off = a.n();
        Graph::from_edges(
            a.n() + b.n(),
            a.edges().chain(b.edges().map(|(u, v)| (u + off, v + off))),
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::build::*;
    use super::*;

    #[test]
    fn parses_triangle() {
        let g = parse_edge_list("3 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(g, complete(3));
    }

    #[test]
    fn parses_edgeless() {
        let g = parse_edge_list("2 0").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn out_of_range_names_line() {
        let err = parse_edge_list("3 1\n0 5").unwrap_err();
        assert_eq!(err.to_string(), "vertex 5 out of range (line 2)");
    }

    #[test]
    fn rejects_self_loop_and_bad_header() {
        assert!(matches!(
            parse_edge_list("3 1\n# c\n\n1 1\n"),
            Err(ParseError::SelfLoop { vertex: 1, line: 4 })
        ));
        assert!(matches!(
            parse_edge_list("3\n"),
            Err(ParseError::Header { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("x 1\n"),
            Err(ParseError::Header { .. })
        ));
        assert!(matches!(
            parse_edge_list("# only\n"),
            Err(ParseError::MissingHeader)
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(ParseError::EdgeCount { .. })
        ));
    }

    #[test]
    fn crlf_tabs_comments_and_duplicates() {
        let g = parse_edge_list("# header next\r\n3\t 3\r\n0  1\r\n\r\n1\t0\r\n1 2\r\n").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(2, 1));
    }

    #[test]
    fn json_shape() {
        let g = parse_edge_list("3 2\n2 1\n1 0\n").unwrap();
        let s = serde_json::to_string(&g.to_json()).unwrap();
        assert_eq!(s, r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        assert_eq!(parse_graph(&s).unwrap(), g);
    }

    #[test]
    fn components_examples() {
        let g = disjoint_union(&complete(3), &Graph::empty(1));
        let parts = g.connected_components();
        assert_eq!(
            parts,
            vec![VertexSet::from([0, 1, 2]), VertexSet::from([3])]
        );
        assert!(Graph::empty(0).connected_components().is_empty());
        assert_eq!(
            path(4).connected_components(),
            vec![VertexSet::from([0, 1, 2, 3])]
        );
    }

    #[test]
    fn induced_examples() {
        let (t, map) = complete(4).induced_subgraph(&VertexSet::from([0, 1, 2]));
        assert_eq!(t, complete(3));
        assert_eq!(map, vec![0, 1, 2]);
        let (e, _) = cycle(5).induced_subgraph(&VertexSet::from([0, 2]));
        assert_eq!(e, Graph::empty(2));
        let (z, _) = cycle(5).induced_subgraph(&VertexSet::new());
        assert_eq!(z.n(), 0);
    }

    #[test]
    fn distance_examples() {
        let p5 = path(5);
        let (d, p) = p5
            .distance_between_sets(&VertexSet::from([0]), &VertexSet::from([4]))
            .unwrap();
        assert_eq!(d, 4);
        assert_eq!(p.vertices(), &[0, 1, 2, 3, 4]);

        let (d, p) = p5
            .distance_between_sets(&VertexSet::from([0, 1]), &VertexSet::from([1, 2]))
            .unwrap();
        assert_eq!((d, p.vertices()), (0, &[1][..]));

        let g = Graph::empty(4);
        assert!(g
            .distance_between_sets(&VertexSet::from([0]), &VertexSet::from([3]))
            .is_none());
    }

    #[test]
    fn distance_prefers_lexicographically_smallest_path() {
        // two shortest 0 -> 3 routes: via 1 and via 2
        let g = Graph::from_edges(4, [(0, 2), (2, 3), (0, 1), (1, 3)]).unwrap();
        let (_, p) = g
            .distance_between_sets(&VertexSet::from([0]), &VertexSet::from([3]))
            .unwrap();
        assert_eq!(p.vertices(), &[0, 1, 3]);
    }

    #[test]
    fn path_interior() {
        let p = Path::new(vec![4, 3, 2]);
        assert_eq!(p.edge_count(), 2);
        assert_eq!(p.interior(), &[3]);
        assert!(Path::new(vec![1, 2]).interior().is_empty());
    }
}
