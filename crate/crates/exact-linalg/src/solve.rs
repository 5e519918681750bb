use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{LinalgError, Rational, RationalMatrix};

/// Basis of ker(m) in reduced row-echelon form, one vector per returned entry.
///
/// The basis is canonical: any two matrices with the same kernel produce the same list.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    let (r, pivots) = m.rref();
    let n = m.cols();
    let mut pivot_row = vec![None; n];
    for (i, &c) in pivots.iter().enumerate() {
        pivot_row[c] = Some(i);
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|&c| pivot_row[c].is_none()) {
        let mut v = vec![Rational::zero(); n];
        v[free] = Rational::one();
        for (i, &c) in pivots.iter().enumerate() {
            v[c] = -r.get(i, free).clone();
        }
        basis.push(v);
    }
    if basis.is_empty() {
        return basis;
    }
    let k = basis.len();
    let stacked = RationalMatrix::from_rows(basis, n).expect("uniform length");
    let (canon, _) = stacked.rref();
    canon.row_vecs().into_iter().take(k).collect()
}

/// Exact rank by fraction-free (Bareiss) elimination after clearing row denominators.
pub fn rank(m: &RationalMatrix) -> usize {
    let rows: Vec<Vec<Rational>> = m.row_vecs();
    rank_of_vectors(&rows)
}

/// Rank of the matrix whose rows (equivalently columns) are `vectors`.
pub fn rank_of_vectors(vectors: &[Vec<Rational>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = vectors.iter().map(|v| clear_denominators(v)).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

fn clear_denominators(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// The scalar `c` with `v = c·f`, if one exists. For `f = 0` this is `Some(0)` exactly when `v = 0`.
pub fn multiple_of(v: &[Rational], f: &[Rational]) -> Option<Rational> {
    assert_eq!(v.len(), f.len(), "multiple_of: dimension mismatch");
    let Some(i) = f.iter().position(|x| !x.is_zero()) else {
        return v.iter().all(Zero::is_zero).then(Rational::zero);
    };
    let c = &v[i] / &f[i];
    v.iter().zip(f).all(|(a, b)| *a == &c * b).then_some(c)
}

/// Solves `target = a1·u + a2·v` for independent `u`, `v`; `Ok(None)` when `target` is off their span.
pub fn solve_two_unknowns(
    target: &[Rational],
    u: &[Rational],
    v: &[Rational],
) -> Result<Option<(Rational, Rational)>, LinalgError> {
    let n = target.len();
    if u.len() != n || v.len() != n {
        return Err(LinalgError::DimensionMismatch("solve_two_unknowns".into()));
    }
    let mut minor = None;
    'outer: for i in 0..n {
        for j in i + 1..n {
            let det = &u[i] * &v[j] - &u[j] * &v[i];
            if !det.is_zero() {
                minor = Some((i, j, det));
                break 'outer;
            }
        }
    }
    let (i, j, det) = minor.ok_or(LinalgError::DependentDirections)?;
    let a1 = (&target[i] * &v[j] - &target[j] * &v[i]) / &det;
    let a2 = (&u[i] * &target[j] - &u[j] * &target[i]) / &det;
    let consistent = (0..n).all(|k| target[k] == &a1 * &u[k] + &a2 * &v[k]);
    Ok(consistent.then_some((a1, a2)))
}

/// Exact inverse by Gauss-Jordan elimination.
pub fn invert(m: &RationalMatrix) -> Result<RationalMatrix, LinalgError> {
    let n = m.rows();
    if m.cols() != n {
        return Err(LinalgError::NotSquare { rows: n, cols: m.cols() });
    }
    let mut aug = RationalMatrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, n + i, Rational::one());
    }
    let (r, pivots) = aug.rref();
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(LinalgError::Singular);
    }
    let rows = (0..n).map(|i| r.row(i)[n..].to_vec()).collect();
    RationalMatrix::from_rows(rows, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, rat};

    fn iv(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        assert!(kernel_basis(&RationalMatrix::identity(3)).is_empty());
        let k = kernel_basis(&RationalMatrix::zeros(2, 2));
        assert_eq!(k, vec![iv(&[1, 0]), iv(&[0, 1])]);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = RationalMatrix::from_i64_rows(&[[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&RationalMatrix::zeros(3, 4)), 0);
        let m = RationalMatrix::from_i64_rows(&[[1, 2], [2, 4]]);
        assert_eq!(rank(&m), 1);
        let half = RationalMatrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![int(3), int(2)]], 2).unwrap();
        assert_eq!(rank(&half), 1);
    }

    #[test]
    fn inverses() {
        assert_eq!(invert(&RationalMatrix::identity(3)).unwrap(), RationalMatrix::identity(3));
        let d = RationalMatrix::from_i64_rows(&[[2, 0], [0, 3]]);
        let inv = invert(&d).unwrap();
        assert_eq!(inv.get(0, 0), &rat(1, 2));
        assert_eq!(inv.get(1, 1), &rat(1, 3));
        assert_eq!(invert(&RationalMatrix::from_i64_rows(&[[1, 2], [2, 4]])), Err(LinalgError::Singular));
        assert!(matches!(invert(&RationalMatrix::zeros(2, 3)), Err(LinalgError::NotSquare { .. })));
    }

    #[test]
    fn multiples() {
        assert_eq!(multiple_of(&iv(&[0, 0, 12]), &iv(&[0, 0, 3])), Some(int(4)));
        assert_eq!(multiple_of(&iv(&[-1, 0, 1]), &iv(&[0, 0, 3])), None);
        assert_eq!(multiple_of(&iv(&[0, 0]), &iv(&[0, 0])), Some(int(0)));
        assert_eq!(multiple_of(&iv(&[1, 0]), &iv(&[0, 0])), None);
        assert_eq!(multiple_of(&iv(&[1, 2]), &iv(&[2, 4])), Some(rat(1, 2)));
    }

    #[test]
    fn two_unknowns() {
        // target = a1*u + a2*v
        let s = solve_two_unknowns(&iv(&[-1, 2]), &iv(&[0, 1]), &iv(&[-1, 0])).unwrap();
        assert_eq!(s, Some((int(2), int(1))));
        let s = solve_two_unknowns(&iv(&[1, 0]), &iv(&[2, 0]), &iv(&[-2, 1])).unwrap();
        assert_eq!(s, Some((rat(1, 2), int(0))));
        let s = solve_two_unknowns(&iv(&[0, 0]), &iv(&[1, 3]), &iv(&[2, 1])).unwrap();
        assert_eq!(s, Some((int(0), int(0))));
        let s = solve_two_unknowns(&iv(&[0, 0, 1]), &iv(&[1, 0, 0]), &iv(&[0, 1, 0])).unwrap();
        assert_eq!(s, None);
        assert_eq!(solve_two_unknowns(&iv(&[1, 1]), &iv(&[1, 1]), &iv(&[2, 2])), Err(LinalgError::DependentDirections));
    }
}
