//! The degree-two Kirwan class test.
//!
//! For each index-one vertex `v` a candidate class `γ_v` is seeded on the vertices of index at
//! most one and then propagated upward in `φ^ξ` order. At a vertex `w` with descending
//! neighbours `r₁, r₂` (the two smallest by vertex label) the class must satisfy
//! `γ(w) = γ(r₁) + A₁·w(w, r₁) = γ(r₂) + A₂·w(w, r₂)` with integers `A₁, A₂`.

use exact_linalg::{solve_two_unknowns, to_i64, Rational};
use symalg::{IntPolynomial, LinearForm};

use crate::chern::is_positive;
use crate::generic::is_generic;
use crate::profile::vertex_profile;
use crate::vecops::{add, integer_multiple, scale, sub, to_rationals};
use crate::{AbstractGkmGraph, GkmError};

/// A degree-two class: one vector of `ℤᵈ` per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KirwanClass {
    pub seed: usize,
    pub values: Vec<Vec<i64>>,
}

impl KirwanClass {
    /// The class as linear polynomials, one per vertex.
    pub fn polynomials(&self) -> Vec<IntPolynomial> {
        self.values
            .iter()
            .map(|v| match LinearForm::new(v.clone()) {
                Some(l) => IntPolynomial::from_linear(&l),
                None => IntPolynomial::zero(v.len()),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KirwanFailure {
    /// The coefficients solving the two-dart system are not both integers. `gamma` holds the
    /// values fixed so far, zero where propagation has not reached.
    NonIntegral { seed: usize, vertex: usize, a1: Rational, a2: Rational, gamma: Vec<Vec<i64>> },
    /// The two-dart system has no solution.
    Inconsistent { seed: usize, vertex: usize },
    /// `γ(p) − γ(q)` is not an integer multiple of `w(p, q)`.
    NotDivisible { seed: usize, dart: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KirwanOutcome {
    Pass(Vec<KirwanClass>),
    Fail(KirwanFailure),
}

impl KirwanOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, Self::Pass(_))
    }
}

/// Runs the test for every index-one vertex. Requires a positive graph and a generic `ξ`.
pub fn kirwan_class_test(g: &AbstractGkmGraph, xi: &[i64]) -> Result<KirwanOutcome, GkmError> {
    if !is_generic(g, xi) {
        return Err(GkmError::NotGeneric(xi.to_vec()));
    }
    if !is_positive(g)? {
        return Err(GkmError::NotPositive);
    }
    let graph = g.graph();
    let profile = vertex_profile(g, xi)?;
    let n = graph.n_vertices();
    let mut order: Vec<usize> = (0..n).filter(|&v| profile.index[v] >= 2).collect();
    order.sort_by_key(|&v| (profile.phi_xi[v], v));

    let mut classes = Vec::new();
    for seed in (0..n).filter(|&v| profile.index[v] == 1) {
        let tau = g.weight(profile.descending(g, seed)[0]).to_vec();
        let mut gamma = vec![vec![0i64; g.d()]; n];
        for &q in &profile.stable[seed] {
            if profile.index[q] == 1 {
                gamma[q] = tau.clone();
            }
        }
        for &w in &order {
            let desc = profile.descending(g, w);
            let (e1, e2) = (desc[0], desc[1]);
            let (r1, r2) = (graph.dart(e1).1, graph.dart(e2).1);
            let target = to_rationals(&sub(&gamma[r1], &gamma[r2]));
            let u = to_rationals(&scale(-1, g.weight(e1)));
            let v = to_rationals(g.weight(e2));
            let Some((a1, a2)) = solve_two_unknowns(&target, &u, &v)? else {
                return Ok(KirwanOutcome::Fail(KirwanFailure::Inconsistent { seed, vertex: w }));
            };
            let (Some(c1), Some(_)) = (to_i64(&a1), to_i64(&a2)) else {
                return Ok(KirwanOutcome::Fail(KirwanFailure::NonIntegral { seed, vertex: w, a1, a2, gamma }));
            };
            gamma[w] = add(&gamma[r1], &scale(c1, g.weight(e1)));
            for &e in &desc[2..] {
                let r = graph.dart(e).1;
                if integer_multiple(&sub(&gamma[w], &gamma[r]), g.weight(e)).is_none() {
                    return Ok(KirwanOutcome::Fail(KirwanFailure::NotDivisible { seed, dart: e }));
                }
            }
        }
        for e in 0..graph.n_darts() {
            let (p, q) = graph.dart(e);
            if p < q && integer_multiple(&sub(&gamma[p], &gamma[q]), g.weight(e)).is_none() {
                return Ok(KirwanOutcome::Fail(KirwanFailure::NotDivisible { seed, dart: e }));
            }
        }
        classes.push(KirwanClass { seed, values: gamma });
    }
    Ok(KirwanOutcome::Pass(classes))
}
