use std::collections::BTreeSet;
use std::path::PathBuf;

use graph_core::database::{read_size, EXPECTED_COUNTS, SIZES};
use graph_core::graph6::{encode_graph6, parse_graph6};
use graph_core::{canonical_form, generate_cubic};

fn db_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/cubic")
}

#[test]
fn shipped_database_has_known_counts() {
    for (&n, &expected) in SIZES.iter().zip(&EXPECTED_COUNTS) {
        let graphs = read_size(&db_dir(), n).unwrap();
        assert_eq!(graphs.len(), expected, "size {n}");
        let forms: BTreeSet<_> = graphs.iter().map(canonical_form).collect();
        assert_eq!(forms.len(), expected, "size {n} has isomorphic duplicates");
    }
}

#[test]
fn brute_force_agrees_with_database() {
    for n in [4, 6, 8, 10] {
        let brute: BTreeSet<_> = generate_cubic(n).unwrap().iter().map(canonical_form).collect();
        let db: BTreeSet<_> = read_size(&db_dir(), n).unwrap().iter().map(canonical_form).collect();
        assert_eq!(brute, db, "size {n}");
    }
}

#[test]
fn graph6_round_trips_database() {
    for n in [12, 14] {
        for g in read_size(&db_dir(), n).unwrap() {
            assert_eq!(parse_graph6(&encode_graph6(&g)).unwrap(), g);
        }
    }
}
