//! The classification pipeline for positive six-dimensional GKM graphs with a two-torus
//! action, built over the database of cubic graphs.

mod compositions;
mod error;
mod exec;
mod pipeline;
mod record;
mod render;
pub mod search;
mod stage1;
mod stage2;
pub mod verify;

pub use compositions::{binomial, enumerate_compositions, Compositions};
pub use error::ForgeError;
pub use exec::Exec;
pub use pipeline::{
    cache_path, classify_full, render_records, render_report, stage1, ClassSummary, Classification, GraphRef,
    PipelineConfig, RecordRef, Report,
};
pub use record::{Bucket, ClassificationRecord, Invariants, KirwanRecord, XiVerdict};
pub use render::{render_gkm_dot, render_graph_dot};
pub use stage1::{prepare, stage1_witness, PreparedGraph, LABEL_SUM};
pub use stage2::{analyze_labels, canonical_candidates, describe_kirwan, stage2, XiPolicy};
pub use verify::{verify_fixtures, FixtureResult};
