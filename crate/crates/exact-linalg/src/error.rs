use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("span deficient: vectors span a space of rank {rank} < {dim}")]
    SpanDeficient { rank: usize, dim: usize },
    #[error("singular matrix")]
    Singular,
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("dependent directions")]
    DependentDirections,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("malformed rational {0:?}")]
    Malformed(String),
}
