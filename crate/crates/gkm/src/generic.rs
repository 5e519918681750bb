use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::vecops::dot;
use crate::AbstractGkmGraph;

/// `⟨w(e), ξ⟩ ≠ 0` on every dart.
pub fn is_generic(g: &AbstractGkmGraph, xi: &[i64]) -> bool {
    xi.len() == g.d() && g.weights().iter().all(|w| dot(w, xi) != 0)
}

/// First generic vector in a fixed enumeration of ℤᵈ.
///
/// Shells `max |ξᵢ| = r` are visited for `r = 1, 2, …`. Inside a shell vectors are ordered by
/// L¹ norm and then in decreasing lexicographic order, so `(1, 0)` comes before `(0, 1)`.
pub fn find_generic(g: &AbstractGkmGraph) -> Vec<i64> {
    let d = g.d();
    assert!(d > 0, "generic vectors need d > 0");
    for r in 1i64.. {
        let mut shell = Vec::new();
        let mut x = vec![-r; d];
        loop {
            if x.iter().any(|c| c.abs() == r) {
                shell.push(x.clone());
            }
            let Some(k) = x.iter().rposition(|&c| c < r) else { break };
            x[k] += 1;
            for c in &mut x[k + 1..] {
                *c = -r;
            }
        }
        shell.sort_by(|a, b| {
            let l1 = |v: &Vec<i64>| v.iter().map(|c| c.abs()).sum::<i64>();
            l1(a).cmp(&l1(b)).then_with(|| b.cmp(a))
        });
        if let Some(xi) = shell.into_iter().find(|xi| is_generic(g, xi)) {
            return xi;
        }
    }
    unreachable!("finitely many nonzero weights leave generic vectors in some shell")
}

/// `count` distinct generic vectors with entries in `[-bound, bound]`, drawn from a seeded stream.
///
/// Returns fewer than `count` only when the box does not contain enough generic vectors.
pub fn sample_generic(g: &AbstractGkmGraph, seed: u64, count: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let budget = 64 * count.max(1) + 1024;
    for _ in 0..budget {
        if out.len() == count {
            break;
        }
        let xi: Vec<i64> = (0..g.d()).map(|_| rng.gen_range(-bound..=bound)).collect();
        if is_generic(g, &xi) && seen.insert(xi.clone()) {
            out.push(xi);
        }
    }
    out
}
