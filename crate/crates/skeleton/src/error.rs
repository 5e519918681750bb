use exact_linalg::LinalgError;
use gkm::GkmError;
use graph_core::GraphError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeletonError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Gkm(#[from] GkmError),
    #[error("graph is not connected and regular")]
    NotRegular,
    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("malformed skeleton: {0}")]
    Malformed(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A constructed graph broke an axiom the construction guarantees.
    #[error("axiom violation: {0}")]
    Axiom(String),
}
