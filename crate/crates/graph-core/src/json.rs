use serde::{Deserialize, Serialize};

use crate::{DartGraph, GraphError};

/// `{"vertices": N, "edges": [[u, v], …]}` with each undirected edge listed once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn from_graph(g: &DartGraph) -> Self {
        Self { vertices: g.n_vertices(), edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect() }
    }

    pub fn to_graph(&self) -> Result<DartGraph, GraphError> {
        let e: Vec<_> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        DartGraph::new(self.vertices, &e)
    }

    pub fn parse(text: &str) -> Result<DartGraph, GraphError> {
        let j: Self = serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        j.to_graph()
    }
}
