use exact_linalg::{int, Rational};
use gkm::fixtures::projective_space;
use gkm::polytope::{graph_from_polytope, Polytope};
use gkm::{first_chern_map, isomorphic, validate};
use skeleton::fixtures::{
    k4_fundamental_system_four, k4_fundamental_system_zero, k4_skeleton, k4_zero_weight_matrix,
    prism_fundamental_system, prism_skeleton, K4_STRUCTURE,
};
use skeleton::{
    apply_weight_matrix, check_k1, check_k2, construct_weights, defect_and_fundamental_system, is_positive_and_24,
    projection_test, projection_witnesses, structure_matrix, supports, ProjectionVerdict, RuledOut, SkeletonError,
};

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

#[test]
fn k4_four_labels() {
    let s = k4_skeleton(vec![4; 6]);
    assert!(is_positive_and_24(&s));
    let a = structure_matrix(&s);
    assert_eq!(a.rows(), K4_STRUCTURE.map(|r| r.to_vec()).as_slice());
    let (delta, fs) = defect_and_fundamental_system(&s, &a);
    assert_eq!(delta, 3);
    let fs = fs.unwrap();
    let printed = k4_fundamental_system_four();
    assert!(printed.is_kernel_basis(&a, s.labels()));
    for f in [&fs, &printed] {
        assert!(check_k1(f, &a));
        assert!(check_k2(&s, &a, f).0);
    }
    let g = construct_weights(&s, &a, &fs).unwrap();
    assert_eq!(g.d(), 3);
    assert!(supports(&s, &a, &g));
    assert_eq!(first_chern_map(&g).unwrap(), vec![4; 12]);
    assert!(isomorphic(&g, &projective_space()).is_some());
    let simplex =
        Polytope::new(3, vec![ints(&[0, 0, 0]), ints(&[4, 0, 0]), ints(&[0, 4, 0]), ints(&[0, 0, 4])]).unwrap();
    assert!(isomorphic(&g, &graph_from_polytope(&simplex, None).unwrap()).is_some());
    // The printed system gives an isomorphic graph.
    let h = construct_weights(&s, &a, &printed).unwrap();
    assert!(isomorphic(&g, &h).is_some());
}

#[test]
fn k4_zero_labels() {
    let s = k4_skeleton(vec![0; 6]);
    assert!(!is_positive_and_24(&s));
    let a = structure_matrix(&s);
    let (delta, _) = defect_and_fundamental_system(&s, &a);
    assert_eq!(delta, 3);
    let fs = k4_fundamental_system_zero();
    assert!(fs.is_kernel_basis(&a, s.labels()));
    assert!(check_k1(&fs, &a));
    let (ok, report) = check_k2(&s, &a, &fs);
    assert!(!ok);
    assert!(!report.failing_edges().is_empty());
    assert!(matches!(construct_weights(&s, &a, &fs), Err(SkeletonError::Precondition(_))));
    let g = apply_weight_matrix(&s, &fs, &k4_zero_weight_matrix()).unwrap();
    assert_eq!(validate(&g), vec![]);
    assert!(supports(&s, &a, &g));
    assert_eq!(first_chern_map(&g).unwrap(), vec![0; 12]);
    assert_eq!(projection_test(&s, &a, &fs, &report).unwrap(), ProjectionVerdict::NoStatement);
}

#[test]
fn prism_is_ruled_out() {
    let s = prism_skeleton();
    assert!(is_positive_and_24(&s));
    let a = structure_matrix(&s);
    let (delta, _) = defect_and_fundamental_system(&s, &a);
    assert_eq!(delta, 3);
    let fs = prism_fundamental_system();
    assert!(fs.is_kernel_basis(&a, s.labels()));
    assert!(check_k1(&fs, &a));
    let (ok, report) = check_k2(&s, &a, &fs);
    assert!(!ok);
    assert_eq!(report.failing_edges(), vec![2, 4, 5]);
    // Along edge 3 (0-based 2) one connection fails by 1/3, the other does not fail by a rational.
    let e3 = &report.edges[2];
    assert_eq!(e3.not_failing_by_rational().len(), 1);
    assert_eq!(fs.column(2), ints(&[0, 0, 3]).as_slice());
    assert_eq!(fs.column(4), ints(&[0, 0, 3]).as_slice());
    let witnesses = projection_witnesses(&s, &a, &fs, &report);
    assert!(witnesses
        .iter()
        .any(|w| (w.j1, w.j2) == (2, 4) && w.h1 == ints(&[-1, 0, 1]) && w.h2 == ints(&[0, -1, -1])));
    assert!(matches!(
        projection_test(&s, &a, &fs, &report).unwrap(),
        ProjectionVerdict::RuledOut(RuledOut::Witness(_))
    ));
}

#[test]
fn projection_test_preconditions() {
    let s = k4_skeleton(vec![4; 6]);
    let a = structure_matrix(&s);
    let fs = k4_fundamental_system_four();
    let (_, report) = check_k2(&s, &a, &fs);
    assert!(matches!(projection_test(&s, &a, &fs, &report), Err(SkeletonError::Precondition(_))));
}
