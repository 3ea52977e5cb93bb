//! Seeded instance generation: random graphs, and yes-instances with a
//! planted deletion set.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{build, Graph, VertexSet};
use crate::profile::{ProblemProfile, ProfileError};
use crate::recognize::{is_member_componentwise, GraphClass};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub profile: String,
    pub n: usize,
    pub planted_k: usize,
    pub edge_density: f64,
    pub seed: u64,
}

#[derive(Debug, Error, PartialEq)]
pub enum GenerateError {
    #[error(transparent)]
    Profile(#[from] ProfileError),
    #[error("planted size {planted_k} exceeds vertex count {n}")]
    PlantedTooLarge { n: usize, planted_k: usize },
    #[error("edge density {0} is outside [0, 1]")]
    Density(f64),
}

/// Erdős–Rényi graph: each pair is an edge with probability `p`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs are in range")
}

fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edges(n, edges).expect("parents precede children")
}

/// A graph on `size` vertices whose components all lie in `class`.
fn member_piece<R: Rng>(class: GraphClass, size: usize, density: f64, rng: &mut R) -> Graph {
    for _ in 0..20 {
        let candidate = match rng.gen_range(0..5) {
            0 => random_graph(size, density, rng),
            1 => random_tree(size, rng),
            2 => build::complete(size),
            3 => build::path(size),
            _ if size >= 3 => build::cycle(size),
            _ => build::path(size),
        };
        if is_member_componentwise(&candidate, class) {
            return candidate;
        }
    }
    [build::path(size), build::complete(size)]
        .into_iter()
        .find(|g| is_member_componentwise(g, class))
        .unwrap_or_else(|| Graph::empty(size))
}

/// Builds `n - planted_k` vertices of disjoint pieces, each inside one of
/// the profile's classes, then adds `planted_k` fresh vertices joined to
/// earlier vertices at random. Deleting the fresh vertices is feasible.
pub fn generate_planted(spec: &GeneratorSpec) -> Result<(Graph, VertexSet), GenerateError> {
    let profile = ProblemProfile::named(&spec.profile)?;
    if spec.planted_k > spec.n {
        return Err(GenerateError::PlantedTooLarge {
            n: spec.n,
            planted_k: spec.planted_k,
        });
    }
    if !(0.0..=1.0).contains(&spec.edge_density) {
        return Err(GenerateError::Density(spec.edge_density));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let base_n = spec.n - spec.planted_k;
    let mut edges = Vec::new();
    let mut offset = 0;
    while offset < base_n {
        let size = rng.gen_range(1..=(base_n - offset).min(7));
        let class = *[profile.class1, profile.class2]
            .choose(&mut rng)
            .expect("two classes");
        let piece = member_piece(class, size, spec.edge_density, &mut rng);
        edges.extend(piece.edges().map(|(u, v)| (u + offset, v + offset)));
        offset += size;
    }
    for x in base_n..spec.n {
        for y in 0..x {
            if rng.gen_bool(spec.edge_density) {
                edges.push((y, x));
            }
        }
    }
    let g = Graph::from_edges(spec.n, edges).expect("generated edges are in range");
    Ok((g, (base_n..spec.n).collect()))
}
