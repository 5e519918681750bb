use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{rank_of_vectors, LinalgError, Rational};

/// Hermite normal form of the lattice spanned by `rows`.
///
/// Returns the nonzero rows in echelon order. Pivots are positive and the entries above a
/// pivot lie in `[0, pivot)`, so two generating sets of the same lattice give equal output.
pub fn hermite_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut a: Vec<Vec<BigInt>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        loop {
            // Euclid on column c: move the smallest nonzero entry up, reduce the rest by it.
            let pick = (r..a.len()).filter(|&i| !a[i][c].is_zero()).min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()));
            let Some(p) = pick else { break };
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..a.len() {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = a[i][c].div_floor(&a[r][c]);
                let (head, tail) = a.split_at_mut(i);
                for (x, y) in tail[0].iter_mut().zip(&head[r]).skip(c) {
                    *x -= &q * y;
                }
                if !a[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < a.len() && !a[r][c].is_zero() {
            if a[r][c].is_negative() {
                a[r].iter_mut().for_each(|x| *x = -x.clone());
            }
            for i in 0..r {
                let q = a[i][c].div_floor(&a[r][c]);
                if q.is_zero() {
                    continue;
                }
                let (head, tail) = a.split_at_mut(r);
                for (x, y) in head[i].iter_mut().zip(&tail[0]).skip(c) {
                    *x -= &q * y;
                }
            }
            r += 1;
        }
        a.retain(|row| row.iter().any(|x| !x.is_zero()));
    }
    a.truncate(r);
    a
}

/// A ℤ-basis of the lattice spanned by `vectors`, which must span ℚ^δ.
///
/// Denominators are cleared with their common LCM `L`, the Hermite form of the scaled
/// lattice is taken, and each basis vector is divided by `L` again.
pub fn lattice_span_basis(vectors: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>, LinalgError> {
    let dim =
        vectors.first().map(Vec::len).ok_or_else(|| LinalgError::DimensionMismatch("empty vector list".into()))?;
    if vectors.iter().any(|v| v.len() != dim) {
        return Err(LinalgError::DimensionMismatch("vectors of unequal length".into()));
    }
    let rk = rank_of_vectors(vectors);
    if rk < dim {
        return Err(LinalgError::SpanDeficient { rank: rk, dim });
    }
    let l = vectors.iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<Vec<BigInt>> =
        vectors.iter().map(|v| v.iter().map(|x| x.numer() * (&l / x.denom())).collect()).collect();
    let h = hermite_rows(&scaled);
    debug_assert_eq!(h.len(), dim);
    Ok(h.into_iter().map(|row| row.into_iter().map(|x| Rational::new(x, l.clone())).collect()).collect())
}

/// True when the integer vectors generate all of ℤ^`dim`.
pub fn spans_full_lattice(vectors: &[Vec<i64>], dim: usize) -> bool {
    let rows: Vec<Vec<BigInt>> = vectors.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect();
    if rows.iter().any(|r| r.len() != dim) {
        return false;
    }
    let h = hermite_rows(&rows);
    h.len() == dim && (0..dim).all(|i| h[i][i].is_one())
}
