use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use gkm::{first_chern_map, validate, AbstractGkmGraph};
use gkm_forge::{
    analyze_labels, cache_path, classify_full, prepare, render_records, render_report, stage2, Bucket, Exec,
    PipelineConfig, XiPolicy,
};
use graph_core::database::read_size;
use skeleton::{canonical_labels, edge_permutations};

fn db() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/cubic")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gkm-forge-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    dir
}

fn small_config(out: Option<PathBuf>) -> PipelineConfig {
    let mut cfg = PipelineConfig::new(db());
    cfg.sizes = vec![4, 6];
    cfg.out = out;
    cfg
}

#[test]
fn output_is_identical_across_worker_counts_and_modes() {
    let mut outputs = Vec::new();
    for (workers, exec) in [(Some(1), Exec::Parallel), (Some(3), Exec::Parallel), (None, Exec::Sequential)] {
        let mut cfg = small_config(None);
        cfg.workers = workers;
        cfg.exec = exec;
        let c = classify_full(&cfg).unwrap();
        outputs.push((render_report(&c.report), render_records(&c.records)));
    }
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn interrupted_cache_resumes_to_the_same_report() {
    let fresh_dir = scratch("fresh");
    let fresh = classify_full(&small_config(Some(fresh_dir.clone()))).unwrap();
    let fresh_report = fs::read_to_string(fresh_dir.join("report.json")).unwrap();
    let fresh_records = fs::read_to_string(fresh_dir.join("records.jsonl")).unwrap();

    // Simulate an interruption: one graph finished, one lost, one half-written temporary file.
    let partial_dir = scratch("partial");
    let graphs = prepare(6, &read_size(&db(), 6).unwrap()).unwrap();
    let keep = cache_path(&fresh_dir, 6, &graphs[0].key);
    let lost = cache_path(&fresh_dir, 6, &graphs[1].key);
    let keep_to = cache_path(&partial_dir, 6, &graphs[0].key);
    fs::create_dir_all(keep_to.parent().unwrap()).unwrap();
    fs::copy(&keep, &keep_to).unwrap();
    let lost_to = cache_path(&partial_dir, 6, &graphs[1].key);
    let half = fs::read_to_string(&lost).unwrap();
    fs::write(lost_to.with_extension("jsonl.tmp"), &half[..half.len() / 2]).unwrap();

    let resumed = classify_full(&small_config(Some(partial_dir.clone()))).unwrap();
    assert_eq!(resumed.report, fresh.report);
    assert_eq!(fs::read_to_string(partial_dir.join("report.json")).unwrap(), fresh_report);
    assert_eq!(fs::read_to_string(partial_dir.join("records.jsonl")).unwrap(), fresh_records);

    // A second run reads everything from the cache.
    let again = classify_full(&small_config(Some(partial_dir.clone()))).unwrap();
    assert_eq!(again.records, fresh.records);
    let _ = fs::remove_dir_all(fresh_dir);
    let _ = fs::remove_dir_all(partial_dir);
}

#[test]
fn canonical_enumeration_agrees_with_naive_enumeration() {
    let xi = XiPolicy::default();
    for x in [4, 6] {
        for g in prepare(x, &read_size(&db(), x).unwrap()).unwrap() {
            let canonical: BTreeMap<Vec<i64>, Bucket> =
                stage2(&g, xi, Exec::Sequential).into_iter().map(|r| (r.labels, r.bucket)).collect();
            let perms = edge_permutations(&g.skeleton);
            let mut naive: BTreeMap<Vec<i64>, Bucket> = BTreeMap::new();
            for d in g.search().candidates() {
                let Some(r) = analyze_labels(&g, &d, xi) else { continue };
                let rep = canonical_labels(&perms, &d);
                // Every member of an orbit lands in the same bucket.
                if let Some(prev) = naive.insert(rep.clone(), r.bucket) {
                    assert_eq!(prev, r.bucket, "{} orbit of {rep:?}", g.source);
                }
            }
            assert_eq!(canonical, naive, "{}", g.source);
        }
    }
}

#[test]
fn constructed_graphs_validate_and_carry_their_labels() {
    let c = classify_full(&small_config(None)).unwrap();
    for r in &c.records {
        assert!(r.is_consistent(), "{} {:?}", r.source, r.labels);
        if matches!(r.bucket, Bucket::Delta2Pass | Bucket::Delta3Supported) {
            let g = AbstractGkmGraph::from_json(r.constructed.as_ref().unwrap()).unwrap();
            assert!(validate(&g).is_empty());
            let c1 = first_chern_map(&g).unwrap();
            let graph = g.graph();
            let labels: Vec<i64> = graph.edges().iter().map(|&(u, v)| c1[graph.dart_index(u, v).unwrap()]).collect();
            assert_eq!(labels, r.labels);
        }
    }
}

#[test]
fn worked_examples_land_in_their_buckets() {
    let xi = XiPolicy::default();
    let k4 = &prepare(4, &read_size(&db(), 4).unwrap()).unwrap()[0];
    let four = analyze_labels(k4, &[4; 6], xi).unwrap();
    assert_eq!((four.defect, four.bucket), (3, Bucket::Delta3Supported));

    // The prism with labels that pass K1 but fail the projection test.
    let prism = skeleton::fixtures::prism_skeleton();
    let g6 = graph_core::graph6::encode_graph6(prism.graph());
    let prepared =
        gkm_forge::PreparedGraph::new("prism".into(), &graph_core::graph6::parse_graph6(&g6).unwrap()).unwrap();
    let perm = graph_core::isomorphic_graphs(prism.graph(), prepared.skeleton.graph()).unwrap();
    let labels = relabel_edges(&prism, prepared.skeleton.graph(), &perm);
    let r = analyze_labels(&prepared, &labels, xi).unwrap();
    assert_eq!(r.bucket, Bucket::RuledOut);
    assert!(r.projection.unwrap().starts_with("ruled-out"));

    // The K33 labels give a defect-2 graph that fails the Kirwan test.
    let k33 = gkm::fixtures::k33_two_torus();
    let c1 = first_chern_map(&k33).unwrap();
    let prepared = gkm_forge::PreparedGraph::new("k33".into(), k33.graph()).unwrap();
    let perm = graph_core::isomorphic_graphs(k33.graph(), prepared.skeleton.graph()).unwrap();
    let labels: Vec<i64> = prepared
        .skeleton
        .ordering()
        .edges()
        .iter()
        .map(|&(u, v)| {
            let inv = |w| perm.iter().position(|&p| p == w).unwrap();
            c1[k33.graph().dart_index(inv(u), inv(v)).unwrap()]
        })
        .collect();
    let r = analyze_labels(&prepared, &labels, xi).unwrap();
    assert_eq!((r.defect, r.bucket), (2, Bucket::Delta2FailKirwan));
}

/// Labels of `s` carried to the edges of `target` along the vertex map `perm`.
fn relabel_edges(s: &skeleton::GkmSkeleton, target: &graph_core::DartGraph, perm: &[usize]) -> Vec<i64> {
    let ordering = graph_core::EdgeOrdering::lexicographic(target);
    let mut out = vec![0; ordering.len()];
    for (j, &(u, v)) in s.ordering().edges().iter().enumerate() {
        let dart = target.dart_index(perm[u], perm[v]).unwrap();
        out[ordering.index_of_dart(dart).0] = s.labels()[j];
    }
    out
}

#[test]
fn rejects_unknown_sizes() {
    let mut cfg = small_config(None);
    cfg.sizes = vec![5];
    assert!(classify_full(&cfg).is_err());
}
