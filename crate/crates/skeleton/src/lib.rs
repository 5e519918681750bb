//! GKM skeletons: a regular graph with oriented, ordered edges and an integer label per edge.
//!
//! The structure matrix `A` and the labels `D` determine the kernel `ker(A − D)`, whose
//! dimension is the defect. Two kernel conditions on a basis of that kernel decide whether
//! the skeleton carries a GKM graph of the same rank, and the projection test rules out
//! graphs of rank two when the second condition fails.

mod canonical;
mod construct;
mod error;
pub mod fixtures;
mod kernel;
mod projection;
mod skeleton;
mod structure;

pub use canonical::{canonical_labels, edge_permutations, skeleton_canonical_label_vector};
pub use construct::{apply_weight_matrix, construct_weights, supports};
pub use error::SkeletonError;
pub use kernel::{check_k1, check_k2, ConnectionCheck, EdgeK2, K2Report, Term};
pub use projection::{projection_test, projection_witnesses, ProjectionVerdict, ProjectionWitness, RuledOut};
pub use skeleton::{is_positive_and_24, GkmSkeleton};
pub use structure::{defect_and_fundamental_system, structure_matrix, FundamentalSystem, StructureMatrix};
