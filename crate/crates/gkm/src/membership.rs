use symalg::{divisible_by_linear, pairwise_coprime, sym_poly_in_weights, IntPolynomial, LinearForm};

use crate::{AbstractGkmGraph, GkmError};

fn vertex_forms(g: &AbstractGkmGraph, v: usize) -> Result<Vec<LinearForm>, GkmError> {
    g.vertex_weights(v)
        .into_iter()
        .map(|w| LinearForm::new(w.to_vec()).ok_or_else(|| GkmError::Malformed(format!("zero weight at vertex {v}"))))
        .collect()
}

/// The restriction of `c_k` to each vertex: `σ_k` of the weights there.
pub fn equivariant_chern_class(g: &AbstractGkmGraph, k: usize) -> Result<Vec<IntPolynomial>, GkmError> {
    (0..g.n_vertices()).map(|v| Ok(sym_poly_in_weights(&vertex_forms(g, v)?, k))).collect()
}

/// Whether `α(p) − α(q)` is divisible by `w(p, q)` over ℤ on every edge.
///
/// The criterion characterizes equivariant classes only when the weights at every vertex are
/// pairwise coprime, so that is checked first.
pub fn membership_test(g: &AbstractGkmGraph, alpha: &[IntPolynomial]) -> Result<bool, GkmError> {
    if alpha.len() != g.n_vertices() || alpha.iter().any(|p| p.nvars() != g.d()) {
        return Err(GkmError::Malformed("one polynomial in d variables per vertex expected".into()));
    }
    for v in 0..g.n_vertices() {
        if !pairwise_coprime(&vertex_forms(g, v)?) {
            return Err(GkmError::NotCoprime(v));
        }
    }
    let graph = g.graph();
    Ok(graph.edges().into_iter().all(|(p, q)| {
        let l = LinearForm::new(g.weight_of(p, q).expect("edge").to_vec()).expect("nonzero weight");
        divisible_by_linear(&(&alpha[p] - &alpha[q]), &l).is_some()
    }))
}
