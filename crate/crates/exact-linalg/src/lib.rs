//! Exact linear algebra over ℚ and ℤ.
//!
//! Every routine works with arbitrary-precision integers and rationals, so results never
//! depend on a tolerance. The mod-p echelon in [`modp`] is the one exception: it is a fast
//! necessary-condition filter and callers must confirm its verdicts exactly.

mod error;
mod lattice;
mod matrix;
pub mod modp;
mod rational;
mod solve;

pub use error::LinalgError;
pub use lattice::{hermite_rows, lattice_span_basis, spans_full_lattice};
pub use matrix::RationalMatrix;
pub use rational::{int, is_integer, parse_rational, rat, to_bigint, to_i64, Rational};
pub use solve::{invert, kernel_basis, multiple_of, rank, rank_of_vectors, solve_two_unknowns};
