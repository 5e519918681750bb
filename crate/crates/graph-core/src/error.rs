use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("repeated edge ({0}, {1})")]
    RepeatedEdge(usize, usize),
    #[error("invalid edge ordering: {0}")]
    InvalidOrdering(String),
    #[error("unsupported vertex count {0}")]
    UnsupportedSize(usize),
    #[error("malformed graph JSON: {0}")]
    Json(String),
}
