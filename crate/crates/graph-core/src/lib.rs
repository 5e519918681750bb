//! Simple n-valent graphs with directed edges ("darts"), the graph6 codec, canonical
//! labeling with automorphism groups, connections along edges, and cubic graph generation.
//!
//! Vertices are `0..n`. Every undirected edge `{u, v}` is stored as the two darts `(u, v)`
//! and `(v, u)`, which the involution swaps.

mod canon;
mod connection;
mod dart;
pub mod database;
mod error;
mod generate;
pub mod graph6;
mod json;

pub use canon::{automorphisms, canonical_form, canonize, isomorphic_graphs, Canon};
pub use connection::{connections_along, index_sets, induced_index_map, Connection};
pub use dart::{DartGraph, EdgeOrdering};
pub use error::GraphError;
pub use generate::generate_cubic;
pub use json::GraphJson;
