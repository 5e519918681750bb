use graph_core::DartGraph;
use serde::{Deserialize, Serialize};

use crate::GkmError;

/// A dart graph with a weight in ℤ^d on every dart.
///
/// Construction only enforces shape (one weight of length `d` per dart); the GKM axioms are
/// checked by [`crate::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbstractGkmGraph {
    graph: DartGraph,
    d: usize,
    weights: Vec<Vec<i64>>,
}

impl AbstractGkmGraph {
    /// Weights indexed by dart.
    pub fn new(graph: DartGraph, d: usize, weights: Vec<Vec<i64>>) -> Result<Self, GkmError> {
        if weights.len() != graph.n_darts() {
            return Err(GkmError::Malformed(format!("{} weights for {} darts", weights.len(), graph.n_darts())));
        }
        if let Some(w) = weights.iter().find(|w| w.len() != d) {
            return Err(GkmError::Malformed(format!("weight {w:?} does not have length {d}")));
        }
        Ok(Self { graph, d, weights })
    }

    /// Weights given on one dart per edge; the reverse dart gets the negated weight.
    pub fn from_oriented(
        graph: DartGraph,
        d: usize,
        oriented: &[((usize, usize), Vec<i64>)],
    ) -> Result<Self, GkmError> {
        let mut weights: Vec<Option<Vec<i64>>> = vec![None; graph.n_darts()];
        for ((u, v), w) in oriented {
            let i =
                graph.dart_index(*u, *v).ok_or_else(|| GkmError::Malformed(format!("({u}, {v}) is not an edge")))?;
            let r = graph.reverse(i);
            if weights[i].is_some() || weights[r].is_some() {
                return Err(GkmError::Malformed(format!("edge ({u}, {v}) weighted twice")));
            }
            weights[i] = Some(w.clone());
            weights[r] = Some(w.iter().map(|x| -x).collect());
        }
        let weights = weights
            .into_iter()
            .enumerate()
            .map(|(i, w)| {
                w.ok_or_else(|| {
                    let (u, v) = graph.dart(i);
                    GkmError::Malformed(format!("edge ({u}, {v}) has no weight"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(graph, d, weights)
    }

    pub fn graph(&self) -> &DartGraph {
        &self.graph
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n_vertices(&self) -> usize {
        self.graph.n_vertices()
    }

    pub fn valency(&self) -> usize {
        self.graph.valency().unwrap_or(0)
    }

    pub fn weight(&self, dart: usize) -> &[i64] {
        &self.weights[dart]
    }

    pub fn weight_of(&self, u: usize, v: usize) -> Option<&[i64]> {
        self.graph.dart_index(u, v).map(|i| self.weight(i))
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    /// Weights of the darts leaving `v`, in target order.
    pub fn vertex_weights(&self, v: usize) -> Vec<&[i64]> {
        self.graph.out_darts(v).iter().map(|&i| self.weight(i)).collect()
    }

    /// Applies `f` to every weight, keeping the graph.
    pub fn map_weights(&self, d: usize, f: impl Fn(&[i64]) -> Vec<i64>) -> Self {
        let weights = self.weights.iter().map(|w| f(w)).collect();
        Self { graph: self.graph.clone(), d, weights }
    }

    /// The same weighted graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let graph = self.graph.relabel(perm);
        let mut weights = vec![Vec::new(); graph.n_darts()];
        for (i, &(u, v)) in self.graph.darts().iter().enumerate() {
            let j = graph.dart_index(perm[u], perm[v]).expect("relabeled dart");
            weights[j] = self.weights[i].clone();
        }
        Self { graph, d: self.d, weights }
    }

    pub fn to_json(&self) -> GkmJson {
        GkmJson {
            d: self.d,
            vertices: self.n_vertices(),
            edges: self
                .graph
                .edges()
                .into_iter()
                .map(|(u, v)| GkmEdgeJson { src: u, dst: v, w: self.weight_of(u, v).expect("edge").to_vec() })
                .collect(),
        }
    }

    pub fn from_json(j: &GkmJson) -> Result<Self, GkmError> {
        let edges: Vec<_> = j.edges.iter().map(|e| (e.src, e.dst)).collect();
        let g = DartGraph::new(j.vertices, &edges)?;
        let oriented: Vec<_> = j.edges.iter().map(|e| ((e.src, e.dst), e.w.clone())).collect();
        Self::from_oriented(g, j.d, &oriented)
    }

    pub fn parse_json(text: &str) -> Result<Self, GkmError> {
        let j: GkmJson = serde_json::from_str(text).map_err(|e| GkmError::Malformed(e.to_string()))?;
        Self::from_json(&j)
    }
}

/// `{"d": k, "vertices": N, "edges": [{"src": u, "dst": v, "w": [..]}]}`, one entry per edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GkmJson {
    pub d: usize,
    pub vertices: usize,
    pub edges: Vec<GkmEdgeJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GkmEdgeJson {
    pub src: usize,
    pub dst: usize,
    pub w: Vec<i64>,
}
