use crate::vecops::{integer_multiple, sub};
use crate::{AbstractGkmGraph, GkmError};

/// Sum of the weights of the darts leaving `v`.
pub(crate) fn weight_sum(g: &AbstractGkmGraph, v: usize) -> Vec<i64> {
    let mut s = vec![0; g.d()];
    for w in g.vertex_weights(v) {
        for (a, b) in s.iter_mut().zip(w) {
            *a += b;
        }
    }
    s
}

/// C₁ per dart: the integer `c` with `Σ_{E_{i(e)}} w − Σ_{E_{t(e)}} w = c·w(e)`.
pub fn first_chern_map(g: &AbstractGkmGraph) -> Result<Vec<i64>, GkmError> {
    let sums: Vec<Vec<i64>> = (0..g.n_vertices()).map(|v| weight_sum(g, v)).collect();
    (0..g.graph().n_darts())
        .map(|i| {
            let (u, v) = g.graph().dart(i);
            integer_multiple(&sub(&sums[u], &sums[v]), g.weight(i)).ok_or(GkmError::ChernUndefined(i))
        })
        .collect()
}

pub fn is_positive(g: &AbstractGkmGraph) -> Result<bool, GkmError> {
    Ok(first_chern_map(g)?.iter().all(|&c| c > 0))
}

/// Σ C₁ over the given darts, typically one per edge.
pub fn chern_sum(g: &AbstractGkmGraph, orientation: &[usize]) -> Result<i64, GkmError> {
    let c1 = first_chern_map(g)?;
    Ok(orientation.iter().map(|&i| c1[i]).sum())
}

/// Σ C₁ over the lexicographic orientation equals 24.
pub fn twenty_four_rule(g: &AbstractGkmGraph) -> Result<bool, GkmError> {
    let graph = g.graph();
    let darts: Vec<usize> = graph.edges().iter().map(|&(u, v)| graph.dart_index(u, v).expect("edge")).collect();
    Ok(chern_sum(g, &darts)? == 24)
}
