use exact_linalg::LinalgError;
use graph_core::GraphError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GkmError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("vector {0:?} is not generic")]
    NotGeneric(Vec<i64>),
    #[error("graph is not positive")]
    NotPositive,
    #[error("C1 is not defined on dart {0}: weight-sum difference is not a multiple of the weight")]
    ChernUndefined(usize),
    #[error("monomial degree {degree} exceeds valency {n}")]
    DegreeOverflow { degree: usize, n: usize },
    #[error("weights at vertex {0} are not pairwise coprime")]
    NotCoprime(usize),
    #[error("localization sums disagree between evaluation points")]
    Inconsistent,
    #[error("polytope: {0}")]
    Polytope(String),
}
