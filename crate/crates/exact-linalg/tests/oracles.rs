use exact_linalg::*;
use num_traits::Zero;

const K4_A: [[i64; 6]; 6] = [
    [2, 1, 1, -1, -1, 0],
    [1, 2, 1, 1, 0, -1],
    [1, 1, 2, 0, 1, 1],
    [-1, 1, 0, 2, 1, -1],
    [-1, 0, 1, 1, 2, 1],
    [0, -1, 1, -1, 1, 2],
];

const K4_F: [[i64; 6]; 3] = [[0, -1, 0, -1, 0, 1], [-1, 0, 0, 1, 1, 0], [1, 1, 1, 0, 0, 0]];

fn iv(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| int(x)).collect()
}

fn k4_shifted(d: i64) -> RationalMatrix {
    let mut rows = K4_A;
    for (i, r) in rows.iter_mut().enumerate() {
        r[i] -= d;
    }
    RationalMatrix::from_i64_rows(&rows)
}

#[test]
fn k4_kernel_is_three_dimensional() {
    let m = k4_shifted(4);
    let k = kernel_basis(&m);
    assert_eq!(k.len(), 3);
    for v in &k {
        assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
    }
    // The printed fundamental system spans the same space, so its RREF equals ours.
    let printed = RationalMatrix::from_i64_rows(&K4_F);
    let (canon, _) = printed.rref();
    assert_eq!(canon.row_vecs(), k);
}

#[test]
fn printed_fundamental_system_has_rank_three() {
    assert_eq!(rank(&RationalMatrix::from_i64_rows(&K4_F)), 3);
}

#[test]
fn projection_witness_matrix_rank() {
    let cols = [iv(&[0, 0, 3]), iv(&[0, 0, 3]), iv(&[-1, 0, 1]), iv(&[0, -1, -1])];
    let m = RationalMatrix::from_columns(&cols, 3).unwrap();
    assert_eq!(rank(&m), 3);
}

#[test]
fn k4_vertex_columns_span_z3() {
    let f = RationalMatrix::from_i64_rows(&K4_F);
    let cols: Vec<_> = (0..3).map(|j| f.column(j)).collect();
    let basis = lattice_span_basis(&cols).unwrap();
    assert_eq!(basis, vec![iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[0, 0, 1])]);
}

#[test]
fn inverse_of_basis_matrix_maps_columns_to_integers() {
    let f = RationalMatrix::from_i64_rows(&K4_F);
    let cols: Vec<_> = (0..3).map(|j| f.column(j)).collect();
    let basis = lattice_span_basis(&cols).unwrap();
    let b = RationalMatrix::from_columns(&basis, 3).unwrap();
    let m = invert(&b).unwrap();
    assert_eq!(m.mul(&b).unwrap(), RationalMatrix::identity(3));
    for j in 0..6 {
        let w = m.mul_vec(&f.column(j)).unwrap();
        assert!(w.iter().all(is_integer));
    }
}

#[test]
fn kirwan_coefficients() {
    // target = A1·(−w(e)) + A2·w(e′)
    let s = solve_two_unknowns(&iv(&[-1, 2]), &iv(&[0, 1]), &iv(&[-1, 0])).unwrap();
    assert_eq!(s, Some((int(2), int(1))));
    let s = solve_two_unknowns(&iv(&[1, 0]), &iv(&[2, 0]), &iv(&[-2, 1])).unwrap();
    assert_eq!(s, Some((rat(1, 2), int(0))));
}
