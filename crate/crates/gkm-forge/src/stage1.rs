use std::ops::ControlFlow;

use graph_core::graph6::encode_graph6;
use graph_core::{canonize, DartGraph};
use skeleton::{check_k1, defect_and_fundamental_system, structure_matrix, GkmSkeleton, StructureMatrix};

use crate::search::NullitySearch;
use crate::ForgeError;

/// Sum of the labels: the 24-Rule in dimension six.
pub const LABEL_SUM: i64 = 24;

/// A database graph relabeled into canonical form, with its skeleton data.
#[derive(Clone, Debug)]
pub struct PreparedGraph {
    /// Provenance: `C<X>.<position in the database file>`.
    pub source: String,
    /// graph6 of the canonical relabeling; the cache key.
    pub key: String,
    pub skeleton: GkmSkeleton,
    pub structure: StructureMatrix,
}

impl PreparedGraph {
    pub fn new(source: String, g: &DartGraph) -> Result<Self, ForgeError> {
        let order = canonize(&g.adjacency()).order;
        let mut perm = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            perm[v] = i;
        }
        let canon = g.relabel(&perm);
        let key = encode_graph6(&canon);
        let m = canon.n_edges();
        let skeleton = GkmSkeleton::lexicographic(canon, vec![0; m])?;
        let structure = structure_matrix(&skeleton);
        Ok(Self { source, key, skeleton, structure })
    }

    pub fn n_vertices(&self) -> usize {
        self.skeleton.graph().n_vertices()
    }

    pub fn search(&self) -> NullitySearch {
        NullitySearch::new(self.structure.rows(), LABEL_SUM, 2)
    }

    pub fn with_labels(&self, d: &[i64]) -> GkmSkeleton {
        self.skeleton.with_labels(d.to_vec()).expect("label count matches edge count")
    }

    /// Exact defect and K1 for labels that passed the modular screen.
    pub fn exact_defect_k1(&self, d: &[i64]) -> (usize, bool) {
        let s = self.with_labels(d);
        let (delta, fs) = defect_and_fundamental_system(&s, &self.structure);
        (delta, fs.is_some_and(|fs| check_k1(&fs, &self.structure)))
    }
}

/// Prepares every graph of one database size, numbering sources from 1.
pub fn prepare(x: usize, graphs: &[DartGraph]) -> Result<Vec<PreparedGraph>, ForgeError> {
    graphs.iter().enumerate().map(|(i, g)| PreparedGraph::new(format!("C{x}.{}", i + 1), g)).collect()
}

/// The first labels (lexicographically) with defect ≥ 2 and K1, if any.
pub fn stage1_witness(g: &PreparedGraph) -> Option<Vec<i64>> {
    let mut found = None;
    let _ = g.search().run(|d| {
        let (delta, k1) = g.exact_defect_k1(d);
        if delta >= 2 && k1 {
            found = Some(d.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}
