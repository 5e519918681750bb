//! Small helpers on integer vectors. Intermediate products use `i128`.

use exact_linalg::Rational;
use num_bigint::BigInt;
use num_integer::Integer;

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

pub(crate) fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn scale(c: i64, a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| c * x).collect()
}

pub(crate) fn is_zero(a: &[i64]) -> bool {
    a.iter().all(|&x| x == 0)
}

/// `(p, q)` in lowest terms with `q > 0` and `q·v = p·w`, if `v` is a rational multiple of `w ≠ 0`.
pub(crate) fn rational_multiple(v: &[i64], w: &[i64]) -> Option<(i64, i64)> {
    let k = w.iter().position(|&x| x != 0)?;
    let (mut p, mut q) = (v[k] as i128, w[k] as i128);
    let g = p.gcd(&q);
    (p, q) = (p / g, q / g);
    if q < 0 {
        (p, q) = (-p, -q);
    }
    v.iter().zip(w).all(|(&a, &b)| q * a as i128 == p * b as i128).then_some((p as i64, q as i64))
}

/// `c` with `v = c·w`, if `c` exists and is an integer.
pub(crate) fn integer_multiple(v: &[i64], w: &[i64]) -> Option<i64> {
    match rational_multiple(v, w)? {
        (p, 1) => Some(p),
        _ => None,
    }
}

/// Linear independence of two vectors: some 2×2 minor is nonzero.
pub(crate) fn independent(a: &[i64], b: &[i64]) -> bool {
    (0..a.len()).any(|i| (i + 1..a.len()).any(|j| a[i] as i128 * b[j] as i128 != a[j] as i128 * b[i] as i128))
}

pub(crate) fn to_rationals(a: &[i64]) -> Vec<Rational> {
    a.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect()
}
