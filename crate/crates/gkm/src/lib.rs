//! Abstract GKM graphs: a connected simple n-valent graph with an antisymmetric integer
//! weight on every dart, subject to a lattice-span, a pairwise-independence and a
//! compatible-connection axiom.
//!
//! Besides validation this crate computes the first Chern map, vertex profiles for a
//! generic direction, the degree-two Kirwan class test, localization integrals, membership
//! of vertex-wise polynomial data in equivariant cohomology, and the GKM graph of a smooth
//! lattice polytope.

mod abbv;
mod chern;
mod error;
pub mod fixtures;
mod generic;
mod graph;
mod iso;
mod kirwan;
mod membership;
pub mod polytope;
mod profile;
mod validate;
mod vecops;

pub use abbv::{abbv_integrate, parse_monomial};
pub use chern::{chern_sum, first_chern_map, is_positive, twenty_four_rule};
pub use error::GkmError;
pub use generic::{find_generic, is_generic, sample_generic};
pub use graph::{AbstractGkmGraph, GkmEdgeJson, GkmJson};
pub use iso::{isomorphic, project, GkmIsomorphism};
pub use kirwan::{kirwan_class_test, KirwanClass, KirwanFailure, KirwanOutcome};
pub use membership::{equivariant_chern_class, membership_test};
pub use profile::{betti_numbers, is_weak_index_increasing, vertex_profile, VertexProfile};
pub use validate::{compatible_connections, validate, Violation};
