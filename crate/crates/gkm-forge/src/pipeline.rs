//! The full run: database ingestion, both stages, a resumable per-graph cache and the report.
//!
//! Each database graph gets one JSON-lines file under `cache/xNN/`, named by the hex encoding
//! of its canonical graph6 string. The first line records the stage-1 outcome and the rest are
//! the stage-2 records. Files are written to a temporary name and renamed, so an interrupted
//! run leaves only complete files behind and a rerun picks up where it stopped.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use gkm::{isomorphic, AbstractGkmGraph};
use graph_core::database::{read_size, SIZES};
use serde::{Deserialize, Serialize};

use crate::record::{Bucket, ClassificationRecord};
use crate::stage1::{prepare, stage1_witness, PreparedGraph};
use crate::stage2::{stage2, XiPolicy};
use crate::{Exec, ForgeError};

#[derive(Clone, Debug)]
pub struct PipelineConfig {
    pub db: PathBuf,
    pub sizes: Vec<usize>,
    /// Cache and report directory; `None` keeps everything in memory.
    pub out: Option<PathBuf>,
    pub workers: Option<usize>,
    pub xi: XiPolicy,
    pub exec: Exec,
}

impl PipelineConfig {
    pub fn new(db: impl Into<PathBuf>) -> Self {
        Self {
            db: db.into(),
            sizes: SIZES.to_vec(),
            out: None,
            workers: None,
            xi: XiPolicy::default(),
            exec: Exec::default(),
        }
    }

    fn check(&self) -> Result<(), ForgeError> {
        if let Some(x) = self.sizes.iter().find(|x| !SIZES.contains(x)) {
            return Err(ForgeError::Config(format!("size {x} is not one of {SIZES:?}")));
        }
        Ok(())
    }
}

/// A stage-1 survivor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRef {
    pub source: String,
    pub graph: String,
    /// The lexicographically first labels with defect ≥ 2 and K1.
    pub witness: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordRef {
    pub source: String,
    pub graph: String,
    pub labels: Vec<i64>,
}

impl From<&ClassificationRecord> for RecordRef {
    fn from(r: &ClassificationRecord) -> Self {
        Self { source: r.source.clone(), graph: r.graph.clone(), labels: r.labels.clone() }
    }
}

/// One isomorphism class of defect-2 graphs passing every Kirwan test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub vertices: usize,
    pub b2: usize,
    pub betti: Vec<usize>,
    pub c1_cubed: String,
    pub c1_c2: String,
    pub euler: String,
    pub representative: RecordRef,
    pub members: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub sizes: Vec<usize>,
    pub database_counts: BTreeMap<usize, usize>,
    pub stage1: BTreeMap<usize, Vec<GraphRef>>,
    pub bucket_counts: BTreeMap<Bucket, usize>,
    pub delta2_classes: Vec<ClassSummary>,
    pub delta3_supported: Vec<RecordRef>,
    pub needs_manual: Vec<RecordRef>,
    /// Conditions a reader must not miss, such as a nonempty needs-manual bucket.
    pub flags: Vec<String>,
    pub xi_policy: String,
    pub notes: Vec<String>,
}

impl Report {
    pub fn stage1_counts(&self) -> Vec<usize> {
        self.sizes.iter().map(|x| self.stage1.get(x).map_or(0, Vec::len)).collect()
    }

    pub fn bucket(&self, b: Bucket) -> usize {
        self.bucket_counts.get(&b).copied().unwrap_or(0)
    }
}

pub struct Classification {
    pub report: Report,
    /// Every record, sorted.
    pub records: Vec<ClassificationRecord>,
}

#[derive(Serialize, Deserialize)]
struct CacheHeader {
    graph: String,
    stage1: Option<Vec<i64>>,
}

struct GraphOutcome {
    witness: Option<Vec<i64>>,
    records: Vec<ClassificationRecord>,
}

/// Stage 1 over one database size: the graphs with labels of defect ≥ 2 satisfying K1.
pub fn stage1(graphs: &[PreparedGraph], exec: Exec) -> Vec<GraphRef> {
    exec.map(graphs, |g| {
        stage1_witness(g).map(|witness| GraphRef { source: g.source.clone(), graph: g.key.clone(), witness })
    })
    .into_iter()
    .flatten()
    .collect()
}

pub fn cache_path(out: &Path, x: usize, key: &str) -> PathBuf {
    let hex: String = key.bytes().map(|b| format!("{b:02x}")).collect();
    out.join("cache").join(format!("x{x:02}")).join(format!("{hex}.jsonl"))
}

fn load_cached(path: &Path, g: &PreparedGraph) -> Result<Option<GraphOutcome>, ForgeError> {
    let Ok(text) = fs::read_to_string(path) else { return Ok(None) };
    let bad = |msg: String| ForgeError::Cache { path: path.to_path_buf(), msg };
    let mut lines = text.lines();
    let header: CacheHeader =
        serde_json::from_str(lines.next().unwrap_or_default()).map_err(|e| bad(format!("header: {e}")))?;
    if header.graph != g.key {
        return Err(bad(format!("holds {} instead of {}", header.graph, g.key)));
    }
    let mut records = Vec::new();
    for line in lines {
        let mut r: ClassificationRecord = serde_json::from_str(line).map_err(|e| bad(e.to_string()))?;
        r.source.clone_from(&g.source);
        records.push(r);
    }
    Ok(Some(GraphOutcome { witness: header.stage1, records }))
}

fn store(path: &Path, g: &PreparedGraph, outcome: &GraphOutcome) -> Result<(), ForgeError> {
    let dir = path.parent().expect("cache file has a parent");
    fs::create_dir_all(dir).map_err(ForgeError::io(dir))?;
    let mut text = serde_json::to_string(&CacheHeader { graph: g.key.clone(), stage1: outcome.witness.clone() })
        .expect("header serializes");
    text.push('\n');
    for r in &outcome.records {
        text.push_str(&serde_json::to_string(r).expect("record serializes"));
        text.push('\n');
    }
    let tmp = path.with_extension("jsonl.tmp");
    fs::write(&tmp, text).map_err(ForgeError::io(&tmp))?;
    fs::rename(&tmp, path).map_err(ForgeError::io(path))
}

fn run_graph(g: &PreparedGraph, x: usize, cfg: &PipelineConfig) -> Result<GraphOutcome, ForgeError> {
    let path = cfg.out.as_ref().map(|out| cache_path(out, x, &g.key));
    if let Some(p) = &path {
        if let Some(hit) = load_cached(p, g)? {
            return Ok(hit);
        }
    }
    let witness = stage1_witness(g);
    let records = if witness.is_some() { stage2(g, cfg.xi, cfg.exec) } else { Vec::new() };
    let outcome = GraphOutcome { witness, records };
    if let Some(p) = &path {
        store(p, g, &outcome)?;
    }
    Ok(outcome)
}

/// Runs both stages over every configured size and summarizes the result.
pub fn classify_full(cfg: &PipelineConfig) -> Result<Classification, ForgeError> {
    cfg.check()?;
    cfg.exec.with_workers(cfg.workers, || classify_inner(cfg))
}

fn classify_inner(cfg: &PipelineConfig) -> Result<Classification, ForgeError> {
    let mut database_counts = BTreeMap::new();
    let mut stage1_lists = BTreeMap::new();
    let mut records = Vec::new();
    for &x in &cfg.sizes {
        let graphs = prepare(x, &read_size(&cfg.db, x)?)?;
        database_counts.insert(x, graphs.len());
        let outcomes = cfg.exec.map(&graphs, |g| run_graph(g, x, cfg));
        let mut survivors = Vec::new();
        for (g, outcome) in graphs.iter().zip(outcomes) {
            let outcome = outcome?;
            if let Some(witness) = outcome.witness {
                survivors.push(GraphRef { source: g.source.clone(), graph: g.key.clone(), witness });
            }
            records.extend(outcome.records);
        }
        stage1_lists.insert(x, survivors);
    }
    records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));

    let mut bucket_counts: BTreeMap<Bucket, usize> = Bucket::ALL.iter().map(|&b| (b, 0)).collect();
    for r in &records {
        *bucket_counts.entry(r.bucket).or_default() += 1;
    }
    let pick = |b: Bucket| records.iter().filter(|r| r.bucket == b).map(RecordRef::from).collect::<Vec<_>>();
    let needs_manual = pick(Bucket::NeedsManual);
    let mut flags = Vec::new();
    if !needs_manual.is_empty() {
        flags.push(format!("{} label vectors need manual analysis", needs_manual.len()));
    }
    if let Some(r) = records.iter().find(|r| !r.is_consistent()) {
        flags.push(format!("record {} {:?} has a bucket inconsistent with its verdicts", r.source, r.labels));
    }
    if let Some(r) = records.iter().find(|r| r.betti_xi_dependent) {
        flags.push(format!("Betti numbers of {} {:?} depend on the generic vector", r.source, r.labels));
    }
    let report = Report {
        sizes: cfg.sizes.clone(),
        database_counts,
        stage1: stage1_lists,
        bucket_counts,
        delta2_classes: delta2_classes(&records)?,
        delta3_supported: pick(Bucket::Delta3Supported),
        needs_manual,
        flags,
        xi_policy: format!(
            "first generic vector of the fixed shell enumeration, plus {} vectors sampled with seed {:#x} from [-{b}, {b}]",
            cfg.xi.samples,
            cfg.xi.seed,
            b = cfg.xi.bound
        ),
        notes: vec![
            "delta3-supported graphs come from smooth reflexive polytopes or their projections; \
             check a candidate polytope with `gkm-forge polytope check`"
                .into(),
            "sources are positions in the database files; cache keys are canonical graph6 strings".into(),
        ],
    };
    if let Some(out) = &cfg.out {
        write_outputs(out, &report, &records)?;
    }
    Ok(Classification { report, records })
}

fn delta2_classes(records: &[ClassificationRecord]) -> Result<Vec<ClassSummary>, ForgeError> {
    let mut classes: Vec<(AbstractGkmGraph, ClassSummary)> = Vec::new();
    for r in records.iter().filter(|r| r.bucket == Bucket::Delta2Pass) {
        let json = r.constructed.as_ref().expect("delta2-pass records carry a graph");
        let g = AbstractGkmGraph::from_json(json).map_err(|e| ForgeError::Config(e.to_string()))?;
        let inv = r.invariants.clone().expect("delta2-pass records carry invariants");
        let existing = classes
            .iter_mut()
            .find(|(h, c)| c.vertices == r.vertices && c.c1_cubed == inv.c1_cubed && isomorphic(h, &g).is_some());
        match existing {
            Some((_, c)) => c.members += 1,
            None => {
                let betti = r.betti.clone().unwrap_or_default();
                let summary = ClassSummary {
                    vertices: r.vertices,
                    b2: betti.get(1).copied().unwrap_or(0),
                    betti,
                    c1_cubed: inv.c1_cubed,
                    c1_c2: inv.c1_c2,
                    euler: inv.euler,
                    representative: RecordRef::from(r),
                    members: 1,
                };
                classes.push((g, summary));
            }
        }
    }
    let mut out: Vec<ClassSummary> = classes.into_iter().map(|(_, c)| c).collect();
    out.sort_by_key(|c| {
        (c.b2, c.c1_cubed.parse::<i64>().unwrap_or(i64::MAX), c.vertices, c.representative.graph.clone())
    });
    Ok(out)
}

pub fn render_records(records: &[ClassificationRecord]) -> String {
    let mut text = String::new();
    for r in records {
        text.push_str(&serde_json::to_string(r).expect("record serializes"));
        text.push('\n');
    }
    text
}

pub fn render_report(report: &Report) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    text
}

fn write_outputs(out: &Path, report: &Report, records: &[ClassificationRecord]) -> Result<(), ForgeError> {
    fs::create_dir_all(out).map_err(ForgeError::io(out))?;
    let records_path = out.join("records.jsonl");
    fs::write(&records_path, render_records(records)).map_err(ForgeError::io(&records_path))?;
    let report_path = out.join("report.json");
    fs::write(&report_path, render_report(report)).map_err(ForgeError::io(&report_path))
}
