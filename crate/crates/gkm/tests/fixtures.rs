use exact_linalg::{int, rat, Rational};
use gkm::fixtures::{cube, k33_two_torus, projective_space, projective_space_two_torus};
use gkm::polytope::{graph_from_polytope, Polytope};
use gkm::{
    abbv_integrate, betti_numbers, chern_sum, equivariant_chern_class, find_generic, first_chern_map, is_generic,
    is_positive, isomorphic, kirwan_class_test, membership_test, project, twenty_four_rule, validate, vertex_profile,
    KirwanFailure, KirwanOutcome,
};

fn ints(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
    rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
}

#[test]
fn k33_profile_table() {
    let g = k33_two_torus();
    assert!(validate(&g).is_empty());
    assert!(is_generic(&g, &[1, 1]));
    assert_eq!(find_generic(&g), vec![1, 1]);
    let p = vertex_profile(&g, &[1, 1]).unwrap();
    assert_eq!(p.index, vec![0, 1, 1, 2, 2, 3]);
    assert_eq!(p.phi, vec![vec![-1, -3], vec![-3, 1], vec![-3, 2], vec![-1, 2], vec![1, 1], vec![7, -3]]);
    assert_eq!(p.phi_xi, vec![-4, -2, -1, 1, 2, 4]);
    assert_eq!(p.stable[2], vec![2, 3, 4, 5]);
    assert_eq!(p.stable[0], vec![0, 1, 2, 3, 4, 5]);
    assert_eq!(p.stable[5], vec![5]);
    assert_eq!(betti_numbers(&g, &[1, 1]).unwrap(), vec![1, 2, 2, 1]);
}

#[test]
fn k33_chern_data() {
    let g = k33_two_torus();
    let c1 = first_chern_map(&g).unwrap();
    let at = |u, v| c1[g.graph().dart_index(u, v).unwrap()];
    assert_eq!(at(0, 1), 2);
    assert_eq!(at(0, 5), 4);
    assert!(is_positive(&g).unwrap());
    assert!(twenty_four_rule(&g).unwrap());
    assert_eq!(abbv_integrate(&g, &[1, 2]).unwrap(), int(24));
    assert_eq!(abbv_integrate(&g, &[3]).unwrap(), int(6));
}

#[test]
fn k33_fails_kirwan_test_with_one_half() {
    let g = k33_two_torus();
    let KirwanOutcome::Fail(KirwanFailure::NonIntegral { seed, vertex, a1, a2, gamma }) =
        kirwan_class_test(&g, &[1, 1]).unwrap()
    else {
        panic!("expected a non-integral coefficient");
    };
    assert_eq!((seed, vertex), (1, 4));
    assert_eq!((a1, a2), (rat(1, 2), int(0)));
    // Seed value at v₂ is its descending weight; v₄ is reached with A₁ = 2, A₂ = 1.
    assert_eq!(gamma[1], vec![1, -2]);
    assert_eq!(gamma[2], vec![1, -2]);
    assert_eq!(gamma[3], vec![0, -2]);
}

#[test]
fn two_torus_projective_space() {
    let g = projective_space_two_torus();
    assert!(validate(&g).is_empty());
    assert_eq!(first_chern_map(&g).unwrap(), vec![4; 12]);
    assert!(twenty_four_rule(&g).unwrap());
    assert_eq!(abbv_integrate(&g, &[3]).unwrap(), int(4));
    assert_eq!(abbv_integrate(&g, &[1, 1, 1]).unwrap(), int(64));
    for k in 0..=3 {
        assert!(membership_test(&g, &equivariant_chern_class(&g, k).unwrap()).unwrap());
    }
    let xi = find_generic(&g);
    assert!(kirwan_class_test(&g, &xi).unwrap().passed());
    assert_eq!(betti_numbers(&g, &xi).unwrap(), vec![1, 1, 1, 1]);
}

#[test]
fn standard_projective_space() {
    let g = projective_space();
    assert!(validate(&g).is_empty());
    assert_eq!(abbv_integrate(&g, &[1, 1, 1]).unwrap(), int(64));
    assert_eq!(abbv_integrate(&g, &[1, 2]).unwrap(), int(24));
    assert!(isomorphic(&g, &projective_space_two_torus()).is_none());
    let theta = vec![vec![-1, 1, 0], vec![2, -1, 1]];
    let h = project(&g, &theta).unwrap().expect("projection is a GKM graph");
    assert_eq!(first_chern_map(&h).unwrap(), first_chern_map(&g).unwrap());
}

#[test]
fn simplex_gives_projective_space() {
    let p = Polytope::new(3, ints(&[&[0, 0, 0], &[4, 0, 0], &[0, 4, 0], &[0, 0, 4]])).unwrap();
    assert!(p.is_smooth());
    let g = graph_from_polytope(&p, None).unwrap();
    assert!(isomorphic(&g, &projective_space()).is_some());
}

#[test]
fn reflexive_simplex() {
    let p = Polytope::new(3, ints(&[&[-1, -1, -1], &[3, -1, -1], &[-1, 3, -1], &[-1, -1, 3]])).unwrap();
    assert!(p.is_smooth());
    assert!(p.is_reflexive());
    assert_eq!(p.facets().len(), 4);
}

#[test]
fn unit_cube() {
    let p = Polytope::new(
        3,
        ints(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]),
    )
    .unwrap();
    assert_eq!(p.edges().len(), 12);
    let g = graph_from_polytope(&p, None).unwrap();
    assert_eq!(first_chern_map(&g).unwrap(), vec![2; 24]);
    assert!(isomorphic(&g, &cube()).is_some());
    assert!(!p.is_reflexive());
    assert_eq!(abbv_integrate(&g, &[1, 1, 1]).unwrap(), int(48));
}

#[test]
fn square_and_rational_rectangle_share_a_graph() {
    let b = Polytope::new(2, ints(&[&[-1, -1], &[1, -1], &[1, 1], &[-1, 1]])).unwrap();
    let c = Polytope::new(
        2,
        vec![vec![int(-1), rat(-5, 4)], vec![int(1), rat(-5, 4)], vec![int(1), rat(5, 4)], vec![int(-1), rat(5, 4)]],
    )
    .unwrap();
    assert!(b.is_smooth() && b.is_reflexive());
    assert!(c.is_smooth() && !c.is_reflexive());
    let gb = graph_from_polytope(&b, None).unwrap();
    let gc = graph_from_polytope(&c, None).unwrap();
    assert!(isomorphic(&gb, &gc).is_some());
}

#[test]
fn reflexive_triangle_is_not_smooth() {
    let d = Polytope::new(2, ints(&[&[1, 0], &[0, 1], &[-1, -1]])).unwrap();
    assert!(d.is_reflexive());
    assert!(!d.is_smooth());
}

#[test]
fn chern_sum_over_reversed_orientation() {
    let g = k33_two_torus();
    let graph = g.graph();
    let fwd: Vec<usize> = graph.edges().iter().map(|&(u, v)| graph.dart_index(u, v).unwrap()).collect();
    let back: Vec<usize> = fwd.iter().map(|&i| graph.reverse(i)).collect();
    assert_eq!(chern_sum(&g, &fwd).unwrap(), chern_sum(&g, &back).unwrap());
}
