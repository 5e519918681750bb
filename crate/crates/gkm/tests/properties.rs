use exact_linalg::int;
use gkm::fixtures::{cube, k33_two_torus, projective_space, projective_space_two_torus};
use gkm::{
    abbv_integrate, chern_sum, equivariant_chern_class, first_chern_map, is_positive, is_weak_index_increasing,
    isomorphic, membership_test, project, sample_generic, validate, vertex_profile, AbstractGkmGraph,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fixtures() -> Vec<AbstractGkmGraph> {
    vec![projective_space(), projective_space_two_torus(), k33_two_torus(), cube()]
}

fn apply(theta: &[Vec<i64>], w: &[i64]) -> Vec<i64> {
    theta.iter().map(|r| r.iter().zip(w).map(|(a, b)| a * b).sum()).collect()
}

/// A product of random elementary integer matrices.
fn unimodular(d: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = (0..d).map(|i| (0..d).map(|j| (i == j) as i64).collect()).collect();
    for _ in 0..4 {
        let (i, j) = (rng.gen_range(0..d), rng.gen_range(0..d));
        match rng.gen_range(0..3) {
            0 if i != j => {
                let c = rng.gen_range(-2..=2);
                let src = m[j].clone();
                m[i].iter_mut().zip(src).for_each(|(a, b)| *a += c * b);
            }
            1 => m.swap(i, j),
            _ => m[i].iter_mut().for_each(|a| *a = -*a),
        }
    }
    m
}

/// A random isomorphic copy of a fixture together with the vertex map and θ used.
fn disguise(g: &AbstractGkmGraph, seed: u64) -> (AbstractGkmGraph, Vec<usize>, Vec<Vec<i64>>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..g.n_vertices()).collect();
    perm.shuffle(&mut rng);
    let theta = unimodular(g.d(), &mut rng);
    let h = g.relabel(&perm).map_weights(g.d(), |w| apply(&theta, w));
    (h, perm, theta)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn chern_map_is_symmetric_and_isomorphism_invariant(k in 0usize..4, seed in any::<u64>()) {
        let g = &fixtures()[k];
        let (h, perm, _) = disguise(g, seed);
        prop_assert!(validate(&h).is_empty());
        let cg = first_chern_map(g).unwrap();
        let ch = first_chern_map(&h).unwrap();
        for i in 0..h.graph().n_darts() {
            prop_assert_eq!(ch[i], ch[h.graph().reverse(i)]);
        }
        for (i, &(u, v)) in g.graph().darts().iter().enumerate() {
            prop_assert_eq!(cg[i], ch[h.graph().dart_index(perm[u], perm[v]).unwrap()]);
        }
        let iso = isomorphic(g, &h).expect("disguised copy is isomorphic");
        prop_assert_eq!(g.relabel(&iso.vertex_map).map_weights(g.d(), |w| apply(&iso.theta, w)), h);
    }

    #[test]
    fn chern_map_is_projection_invariant(seed in any::<u64>()) {
        let g = projective_space();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // Rows of a random unimodular matrix, truncated, always give a surjection.
        let theta: Vec<Vec<i64>> = unimodular(3, &mut rng).into_iter().take(2).collect();
        if let Some(h) = project(&g, &theta).unwrap() {
            prop_assert_eq!(first_chern_map(&h).unwrap(), first_chern_map(&g).unwrap());
        }
    }

    #[test]
    fn chern_sum_ignores_orientation(k in 0usize..4, flips in prop::collection::vec(any::<bool>(), 12)) {
        let g = &fixtures()[k];
        let graph = g.graph();
        let darts: Vec<usize> = graph.edges().iter().enumerate().map(|(j, &(u, v))| {
            let d = graph.dart_index(u, v).unwrap();
            if flips[j % flips.len()] { graph.reverse(d) } else { d }
        }).collect();
        let lex: Vec<usize> = graph.edges().iter().map(|&(u, v)| graph.dart_index(u, v).unwrap()).collect();
        prop_assert_eq!(chern_sum(g, &darts).unwrap(), chern_sum(g, &lex).unwrap());
    }

    #[test]
    fn localization_identities(k in 0usize..4, seed in any::<u64>()) {
        let (h, _, _) = disguise(&fixtures()[k], seed);
        let n = h.valency();
        prop_assert_eq!(abbv_integrate(&h, &[]).unwrap(), int(0));
        prop_assert_eq!(abbv_integrate(&h, &[n]).unwrap(), int(h.n_vertices() as i64));
        let lex: Vec<usize> = h.graph().edges().iter().map(|&(u, v)| h.graph().dart_index(u, v).unwrap()).collect();
        prop_assert_eq!(abbv_integrate(&h, &[1, n - 1]).unwrap(), int(chern_sum(&h, &lex).unwrap()));
        prop_assert!(abbv_integrate(&h, &[1, 1, 1]).unwrap().is_integer());
        prop_assert_eq!(abbv_integrate(&h, &[1]).unwrap(), int(0));
    }

    #[test]
    fn positive_graphs_are_weak_index_increasing(k in 0usize..4, seed in any::<u64>()) {
        let g = &fixtures()[k];
        prop_assert!(is_positive(g).unwrap());
        let xis = sample_generic(g, seed, 8, 50);
        prop_assert_eq!(xis.len(), 8);
        for xi in xis {
            let p = vertex_profile(g, &xi).unwrap();
            prop_assert!(is_weak_index_increasing(g, &p));
            for (i, &(u, v)) in g.graph().darts().iter().enumerate() {
                let up: i64 = g.weight(i).iter().zip(&xi).map(|(a, b)| a * b).sum();
                if up > 0 {
                    prop_assert!(p.phi_xi[u] < p.phi_xi[v]);
                }
            }
        }
    }

    #[test]
    fn chern_restrictions_are_equivariant(seed in any::<u64>()) {
        // The two-torus projective space is the fixture with coprime weights and d < n.
        let (h, _, _) = disguise(&projective_space_two_torus(), seed);
        for c in 0..=3 {
            prop_assert!(membership_test(&h, &equivariant_chern_class(&h, c).unwrap()).unwrap());
        }
    }
}
