use std::path::PathBuf;

use graph_core::database::DatabaseError;
use graph_core::GraphError;
use skeleton::SkeletonError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ForgeError {
    #[error(transparent)]
    Database(#[from] DatabaseError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Skeleton(#[from] SkeletonError),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: {msg}", path.display())]
    Cache { path: PathBuf, msg: String },
    #[error("invalid configuration: {0}")]
    Config(String),
}

impl ForgeError {
    pub(crate) fn io(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> Self {
        let path = path.into();
        move |source| Self::Io { path, source }
    }
}
