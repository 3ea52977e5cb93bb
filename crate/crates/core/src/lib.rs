//! Vertex deletion to scattered graph classes: remove at most `k` vertices
//! so that every connected component of what remains belongs to one of two
//! hereditary classes.
//!
//! The exact solver lives in [`engine`], the approximation in [`approx`],
//! and a brute-force reference in [`oracle`].

pub mod approx;
pub mod base;
pub mod catalog;
pub mod cli;
pub mod engine;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod profile;
pub mod recognize;
