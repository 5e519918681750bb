//! Small weighted graphs with known invariants, shared by tests, benches and the CLI.

use graph_core::DartGraph;

use crate::AbstractGkmGraph;

fn build(n: usize, d: usize, oriented: &[((usize, usize), Vec<i64>)]) -> AbstractGkmGraph {
    let edges: Vec<_> = oriented.iter().map(|&(e, _)| e).collect();
    let g = DartGraph::new(n, &edges).expect("fixture graph");
    AbstractGkmGraph::from_oriented(g, d, oriented).expect("fixture weights")
}

/// The moment graph of CP³ for the standard 3-torus: `w(i, j) = xⱼ − xᵢ` with `x₀ = 0`.
pub fn projective_space() -> AbstractGkmGraph {
    let unit = |j: usize| -> Vec<i64> { (1..=3).map(|k| (k == j) as i64).collect() };
    let mut oriented = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let w = unit(j).iter().zip(unit(i)).map(|(a, b)| a - b).collect();
            oriented.push(((i, j), w));
        }
    }
    build(4, 3, &oriented)
}

/// CP³ with a 2-torus acting with pairwise coprime weights at every vertex.
pub fn projective_space_two_torus() -> AbstractGkmGraph {
    build(
        4,
        2,
        &[
            ((0, 1), vec![1, 0]),
            ((0, 2), vec![0, 2]),
            ((0, 3), vec![3, 3]),
            ((1, 2), vec![-1, 2]),
            ((1, 3), vec![2, 3]),
            ((2, 3), vec![3, 1]),
        ],
    )
}

/// A positive (3, 2)-graph on K₃,₃ satisfying the 24-rule that fails the Kirwan class test.
///
/// Vertices `v₁ … v₆` are `0 … 5`.
pub fn k33_two_torus() -> AbstractGkmGraph {
    build(
        6,
        2,
        &[
            ((0, 1), vec![-1, 2]),
            ((0, 3), vec![0, 1]),
            ((0, 5), vec![2, 0]),
            ((1, 2), vec![0, 1]),
            ((1, 4), vec![2, 0]),
            ((2, 3), vec![1, 0]),
            ((2, 5), vec![2, -1]),
            ((3, 4), vec![2, -1]),
            ((4, 5), vec![3, -2]),
        ],
    )
}

/// The moment graph of (CP¹)³: the cube with weights `±eᵢ`.
pub fn cube() -> AbstractGkmGraph {
    let mut oriented = Vec::new();
    for v in 0..8usize {
        for bit in 0..3 {
            if v & (1 << bit) == 0 {
                let w = (0..3).map(|k| (k == bit) as i64).collect();
                oriented.push(((v, v | (1 << bit)), w));
            }
        }
    }
    build(8, 3, &oriented)
}
