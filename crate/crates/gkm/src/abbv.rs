use exact_linalg::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{AbstractGkmGraph, GkmError};

/// Parses a Chern monomial such as `c1^3`, `c1*c2`, `c1 c2` or `1` into its multiset of indices.
pub fn parse_monomial(text: &str) -> Result<Vec<usize>, GkmError> {
    let bad = || GkmError::Malformed(format!("monomial {text:?}"));
    let t = text.trim();
    if t == "1" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for factor in t.split(|c: char| c == '*' || c.is_whitespace()).filter(|s| !s.is_empty()) {
        for piece in factor.split('c').skip(1) {
            let (k, e) = piece.split_once('^').unwrap_or((piece, "1"));
            let k: usize = k.parse().map_err(|_| bad())?;
            let e: usize = e.parse().map_err(|_| bad())?;
            if k == 0 {
                return Err(bad());
            }
            out.extend(std::iter::repeat_n(k, e));
        }
        if !factor.starts_with('c') {
            return Err(bad());
        }
    }
    if out.is_empty() {
        return Err(bad());
    }
    out.sort_unstable();
    Ok(out)
}

fn elementary(values: &[Rational], k: usize) -> Rational {
    let mut e = vec![Rational::zero(); k + 1];
    e[0] = Rational::one();
    for x in values {
        for j in (1..=k).rev() {
            let t = &e[j - 1] * x;
            e[j] += t;
        }
    }
    e.swap_remove(k)
}

fn point(d: usize, t: i64) -> Vec<Rational> {
    (0..d as i64).map(|i| Rational::new(BigInt::from(7 * t.pow(i as u32 + 1) + i + 1), BigInt::from(i + 2))).collect()
}

/// The localization sum `Σ_v Π_i σ_{kᵢ}(w_v) / Π w_v` at a point where no weight vanishes.
fn localize(g: &AbstractGkmGraph, monomial: &[usize], x: &[Rational]) -> Option<Rational> {
    let mut total = Rational::zero();
    for v in 0..g.n_vertices() {
        let vals: Vec<Rational> =
            g.vertex_weights(v).iter().map(|w| w.iter().zip(x).map(|(&a, b)| b * BigInt::from(a)).sum()).collect();
        let euler: Rational = vals.iter().product();
        if euler.is_zero() {
            return None;
        }
        let num: Rational = monomial.iter().map(|&k| elementary(&vals, k)).product();
        total += num / euler;
    }
    Some(total)
}

/// `∫ c_{k₁}⋯c_{k_m}` by localization over the vertices.
///
/// The rational function is evaluated at two deterministic points on which no weight vanishes,
/// and both values must agree. Degrees above the valency are rejected.
pub fn abbv_integrate(g: &AbstractGkmGraph, monomial: &[usize]) -> Result<Rational, GkmError> {
    let n = g.valency();
    let degree: usize = monomial.iter().sum();
    if degree > n || monomial.contains(&0) {
        return Err(GkmError::DegreeOverflow { degree, n });
    }
    let mut values = Vec::with_capacity(2);
    for t in 1i64..=64 {
        if let Some(v) = localize(g, monomial, &point(g.d(), t)) {
            values.push(v);
            if values.len() == 2 {
                break;
            }
        }
    }
    match values.as_slice() {
        [a, b] if a == b => Ok(a.clone()),
        _ => Err(GkmError::Inconsistent),
    }
}
