use std::path::PathBuf;

use graph_core::database::read_size;
use graph_core::{
    automorphisms, canonical_form, connections_along, index_sets, induced_index_map, DartGraph, EdgeOrdering,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sample_graphs() -> Vec<DartGraph> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/cubic");
    let mut out = Vec::new();
    for n in [4, 6, 8, 10] {
        out.extend(read_size(&dir, n).unwrap());
    }
    out.extend(read_size(&dir, 12).unwrap().into_iter().step_by(9));
    out
}

#[test]
fn canonical_form_survives_100_relabelings_per_graph() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in sample_graphs() {
        let c = canonical_form(&g);
        let n_aut = automorphisms(&g).len();
        let mut perm: Vec<usize> = (0..g.n_vertices()).collect();
        for _ in 0..100 {
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm);
            assert_eq!(canonical_form(&h), c);
            assert_eq!(automorphisms(&h).len(), n_aut);
        }
    }
}

fn random_orientation(g: &DartGraph, seed: u64) -> EdgeOrdering {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> =
        g.edges().into_iter().map(|(u, v)| if rand::Rng::gen_bool(&mut rng, 0.5) { (v, u) } else { (u, v) }).collect();
    edges.shuffle(&mut rng);
    EdgeOrdering::new(g, edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn orientation_and_connection_invariants(idx in 0usize..111, seed in any::<u64>()) {
        let graphs = sample_graphs();
        let g = &graphs[idx % graphs.len()];
        let ord = random_orientation(g, seed);
        prop_assert_eq!(ord.len(), 3 * g.n_vertices() / 2);
        for v in 0..g.n_vertices() {
            prop_assert_eq!(index_sets(g, &ord, v).len(), 3);
        }
        for d in 0..g.n_darts() {
            prop_assert_eq!(g.reverse(g.reverse(d)), d);
            prop_assert_ne!(g.reverse(d), d);
            let (u, w) = g.dart(d);
            let j = ord.index_of_dart(d).0;
            let iu = index_sets(g, &ord, u);
            let iw = index_sets(g, &ord, w);
            let common: Vec<_> = iu.iter().filter(|k| iw.contains(k)).collect();
            prop_assert_eq!(common, vec![&j]);
            let conns = connections_along(g, d);
            prop_assert_eq!(conns.len(), 2);
            for c in &conns {
                let m = induced_index_map(&ord, c);
                prop_assert!(m.contains(&(j, j)));
                let mut src: Vec<_> = m.iter().map(|p| p.0).collect();
                let mut dst: Vec<_> = m.iter().map(|p| p.1).collect();
                src.sort_unstable();
                dst.sort_unstable();
                prop_assert_eq!(src, iu.clone());
                prop_assert_eq!(dst, iw.clone());
            }
        }
    }
}
