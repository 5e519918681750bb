//! Skeletons with published fundamental systems, shared by tests and the CLI.

use graph_core::DartGraph;

use crate::{FundamentalSystem, GkmSkeleton};

fn k4() -> DartGraph {
    DartGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).expect("K4")
}

/// K4 with lexicographic edges and the given labels.
pub fn k4_skeleton(labels: Vec<i64>) -> GkmSkeleton {
    GkmSkeleton::lexicographic(k4(), labels).expect("six labels")
}

/// Structure matrix of K4 with lexicographic edges.
pub const K4_STRUCTURE: [[i64; 6]; 6] = [
    [2, 1, 1, -1, -1, 0],
    [1, 2, 1, 1, 0, -1],
    [1, 1, 2, 0, 1, 1],
    [-1, 1, 0, 2, 1, -1],
    [-1, 0, 1, 1, 2, 1],
    [0, -1, 1, -1, 1, 2],
];

/// A fundamental system of K4 with all labels 4.
pub fn k4_fundamental_system_four() -> FundamentalSystem {
    FundamentalSystem::from_i64_rows(&[vec![0, -1, 0, -1, 0, 1], vec![-1, 0, 0, 1, 1, 0], vec![1, 1, 1, 0, 0, 0]])
        .expect("rows")
}

/// A fundamental system of K4 with all labels 0.
pub fn k4_fundamental_system_zero() -> FundamentalSystem {
    FundamentalSystem::from_i64_rows(&[vec![0, 1, -1, 0, 0, 1], vec![1, 0, -1, 0, 1, 0], vec![1, -1, 0, 1, 0, 0]])
        .expect("rows")
}

/// The rank-2 weight matrix turning the zero-label system into a (3, 2)-graph.
pub fn k4_zero_weight_matrix() -> Vec<Vec<i64>> {
    vec![vec![-1, 1, 0], vec![2, -1, 1]]
}

/// The triangular prism with labels `(3, 3, 3, 3, 2, 1, 3, 3, 3)`: defect 3, K1 holds, K2 fails.
///
/// Edges in order: `(0,1) (0,2) (0,3) (1,2) (1,4) (2,5) (3,4) (3,5) (4,5)`.
pub fn prism_skeleton() -> GkmSkeleton {
    let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (3, 5), (4, 5)];
    let g = DartGraph::new(6, &edges).expect("prism");
    GkmSkeleton::lexicographic(g, vec![3, 3, 3, 3, 2, 1, 3, 3, 3]).expect("nine labels")
}

pub fn prism_fundamental_system() -> FundamentalSystem {
    FundamentalSystem::from_i64_rows(&[
        vec![-1, 0, 0, 1, 0, 0, -1, 0, 1],
        vec![1, 1, 0, 0, 0, 0, 1, 1, 0],
        vec![1, 2, 3, 1, 3, 3, 0, 0, 0],
    ])
    .expect("rows")
}
