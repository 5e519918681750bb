use std::collections::VecDeque;

use crate::chern::weight_sum;
use crate::generic::is_generic;
use crate::vecops::dot;
use crate::{AbstractGkmGraph, GkmError};

/// Per-vertex data for a generic direction `ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexProfile {
    pub xi: Vec<i64>,
    /// Number of descending darts, `⟨w(e), ξ⟩ < 0`.
    pub index: Vec<usize>,
    /// Weight sum `φ(v) = −Σ_{E_v} w(e)`.
    pub phi: Vec<Vec<i64>>,
    pub phi_xi: Vec<i64>,
    /// Vertices reachable from `v` along ascending darts, `v` included, ascending.
    pub stable: Vec<Vec<usize>>,
}

impl VertexProfile {
    /// Descending darts at `v`, ordered by target.
    pub fn descending(&self, g: &AbstractGkmGraph, v: usize) -> Vec<usize> {
        g.graph().out_darts(v).iter().copied().filter(|&i| dot(g.weight(i), &self.xi) < 0).collect()
    }
}

pub fn vertex_profile(g: &AbstractGkmGraph, xi: &[i64]) -> Result<VertexProfile, GkmError> {
    if !is_generic(g, xi) {
        return Err(GkmError::NotGeneric(xi.to_vec()));
    }
    let graph = g.graph();
    let n = graph.n_vertices();
    let index = (0..n).map(|v| graph.out_darts(v).iter().filter(|&&i| dot(g.weight(i), xi) < 0).count()).collect();
    let phi: Vec<Vec<i64>> = (0..n).map(|v| weight_sum(g, v).iter().map(|x| -x).collect()).collect();
    let phi_xi = phi.iter().map(|p| dot(p, xi) as i64).collect();
    let stable = (0..n)
        .map(|v| {
            let mut seen = vec![false; n];
            seen[v] = true;
            let mut queue = VecDeque::from([v]);
            while let Some(p) = queue.pop_front() {
                for &i in graph.out_darts(p) {
                    let q = graph.dart(i).1;
                    if dot(g.weight(i), xi) > 0 && !seen[q] {
                        seen[q] = true;
                        queue.push_back(q);
                    }
                }
            }
            (0..n).filter(|&q| seen[q]).collect()
        })
        .collect();
    Ok(VertexProfile { xi: xi.to_vec(), index, phi, phi_xi, stable })
}

/// `b_{2i} = #{v : λ(v) = i}` for `i = 0..=n`; odd Betti numbers are zero and omitted.
pub fn betti_numbers(g: &AbstractGkmGraph, xi: &[i64]) -> Result<Vec<usize>, GkmError> {
    let p = vertex_profile(g, xi)?;
    let mut b = vec![0; g.valency() + 1];
    for &l in &p.index {
        b[l] += 1;
    }
    Ok(b)
}

/// Every ascending dart `(p, q)` has `λ(p) ≤ λ(q)`.
pub fn is_weak_index_increasing(g: &AbstractGkmGraph, profile: &VertexProfile) -> bool {
    let graph = g.graph();
    (0..graph.n_darts()).all(|i| {
        let (p, q) = graph.dart(i);
        dot(g.weight(i), &profile.xi) < 0 || profile.index[p] <= profile.index[q]
    })
}
