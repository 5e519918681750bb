use exact_linalg::{invert, rank_of_vectors, spans_full_lattice, to_i64, RationalMatrix};
use graph_core::{automorphisms, isomorphic_graphs};

use crate::validate::validate;
use crate::vecops::to_rationals;
use crate::{AbstractGkmGraph, GkmError};

/// A vertex bijection `F` and `θ ∈ GL(d, ℤ)` with `θ·w₁(v, w) = w₂(F(v), F(w))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkmIsomorphism {
    pub vertex_map: Vec<usize>,
    /// Rows of `θ`.
    pub theta: Vec<Vec<i64>>,
}

fn apply(theta: &[Vec<i64>], w: &[i64]) -> Vec<i64> {
    theta.iter().map(|row| row.iter().zip(w).map(|(a, b)| a * b).sum()).collect()
}

/// The unique integral unimodular `θ` compatible with the vertex map `f`, if any.
fn theta_for(g1: &AbstractGkmGraph, g2: &AbstractGkmGraph, f: &[usize]) -> Option<Vec<Vec<i64>>> {
    let d = g1.d();
    let graph = g1.graph();
    // d independent weights; they exist at any vertex of a graph whose weights span ℤᵈ.
    let mut basis: Vec<usize> = Vec::new();
    for i in 0..graph.n_darts() {
        let mut cand: Vec<Vec<_>> = basis.iter().map(|&b| to_rationals(g1.weight(b))).collect();
        cand.push(to_rationals(g1.weight(i)));
        if rank_of_vectors(&cand) == cand.len() {
            basis.push(i);
            if basis.len() == d {
                break;
            }
        }
    }
    if basis.len() < d {
        return None;
    }
    let image = |i: usize| {
        let (u, v) = graph.dart(i);
        g2.weight_of(f[u], f[v]).map(<[i64]>::to_vec)
    };
    let b1: Vec<Vec<_>> = basis.iter().map(|&i| to_rationals(g1.weight(i))).collect();
    let b2: Vec<Vec<_>> = basis.iter().map(|&i| image(i).map(|w| to_rationals(&w))).collect::<Option<_>>()?;
    // Columns are basis weights: θ·B₁ = B₂.
    let m1 = RationalMatrix::from_columns(&b1, d).ok()?;
    let m2 = RationalMatrix::from_columns(&b2, d).ok()?;
    let t = m2.mul(&invert(&m1).ok()?).ok()?;
    let theta: Vec<Vec<i64>> =
        (0..d).map(|r| t.row(r).iter().map(to_i64).collect::<Option<Vec<_>>>()).collect::<Option<_>>()?;
    let inverse = invert(&t).ok()?;
    if !(0..d).all(|r| inverse.row(r).iter().all(|x| x.is_integer())) {
        return None;
    }
    (0..graph.n_darts()).all(|i| image(i).is_some_and(|w| w == apply(&theta, g1.weight(i)))).then_some(theta)
}

/// Searches all graph isomorphisms for one that carries the weights over up to `GL(d, ℤ)`.
pub fn isomorphic(g1: &AbstractGkmGraph, g2: &AbstractGkmGraph) -> Option<GkmIsomorphism> {
    if g1.d() != g2.d() || g1.n_vertices() != g2.n_vertices() {
        return None;
    }
    let f0 = isomorphic_graphs(g1.graph(), g2.graph())?;
    automorphisms(g1.graph()).into_iter().find_map(|a| {
        let f: Vec<usize> = a.iter().map(|&x| f0[x]).collect();
        theta_for(g1, g2, &f).map(|theta| GkmIsomorphism { vertex_map: f, theta })
    })
}

/// Applies a surjection `θ: ℤᵈ → ℤ^{d′}` (given by rows) to every weight.
///
/// Returns `None` when the image is not an abstract GKM graph.
pub fn project(g: &AbstractGkmGraph, theta: &[Vec<i64>]) -> Result<Option<AbstractGkmGraph>, GkmError> {
    let d2 = theta.len();
    if theta.iter().any(|r| r.len() != g.d()) {
        return Err(GkmError::Malformed(format!("projection rows must have length {}", g.d())));
    }
    let columns: Vec<Vec<i64>> = (0..g.d()).map(|c| theta.iter().map(|r| r[c]).collect()).collect();
    if !spans_full_lattice(&columns, d2) {
        return Err(GkmError::Malformed("projection is not surjective onto the lattice".into()));
    }
    let h = g.map_weights(d2, |w| apply(theta, w));
    Ok(validate(&h).is_empty().then_some(h))
}
