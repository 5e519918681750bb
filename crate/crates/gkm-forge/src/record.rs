use std::fmt;

use gkm::GkmJson;
use serde::{Deserialize, Serialize};

/// Where a label vector ends up after stage 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Bucket {
    /// Defect 2, both kernel conditions, and the constructed graph passes every Kirwan test.
    Delta2Pass,
    Delta2FailKirwan,
    /// Defect 3 with both kernel conditions: a (3,3)-graph exists.
    Delta3Supported,
    RuledOut,
    /// No verdict could be reached automatically. Reported as a hard flag.
    NeedsManual,
}

impl Bucket {
    pub const ALL: [Bucket; 5] =
        [Bucket::Delta2Pass, Bucket::Delta2FailKirwan, Bucket::Delta3Supported, Bucket::RuledOut, Bucket::NeedsManual];

    pub fn name(self) -> &'static str {
        match self {
            Bucket::Delta2Pass => "delta2-pass",
            Bucket::Delta2FailKirwan => "delta2-fail-kirwan",
            Bucket::Delta3Supported => "delta3-supported",
            Bucket::RuledOut => "ruled-out",
            Bucket::NeedsManual => "needs-manual",
        }
    }
}

impl fmt::Display for Bucket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiVerdict {
    pub xi: Vec<i64>,
    pub passed: bool,
    pub betti: Vec<usize>,
}

/// Kirwan verdicts at the fixed generic vector and at the sampled ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KirwanRecord {
    pub xi: Vec<i64>,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
    pub sampled: Vec<XiVerdict>,
}

impl KirwanRecord {
    pub fn all_passed(&self) -> bool {
        self.passed && self.sampled.iter().all(|s| s.passed)
    }
}

/// Localization integrals of the constructed graph, as exact rationals in text form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub c1_cubed: String,
    pub c1_c2: String,
    pub euler: String,
}

/// One canonical label vector on one graph, with every verdict reached for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub vertices: usize,
    /// graph6 of the canonically labeled graph.
    pub graph: String,
    pub source: String,
    pub labels: Vec<i64>,
    pub defect: usize,
    pub k1: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k2: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub projection: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constructed: Option<GkmJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kirwan: Option<KirwanRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants: Option<Invariants>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<usize>>,
    /// Set when Betti numbers differ between the sampled generic vectors.
    #[serde(default)]
    pub betti_xi_dependent: bool,
    pub bucket: Bucket,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub const PROJECTION_NO_STATEMENT: &str = "no-statement";
pub const PROJECTION_RULED_OUT: &str = "ruled-out";

impl ClassificationRecord {
    /// Sort key for deterministic output.
    pub fn sort_key(&self) -> (usize, &str, &[i64]) {
        (self.vertices, &self.graph, &self.labels)
    }

    /// Whether the bucket is the one the stored verdicts lead to.
    pub fn is_consistent(&self) -> bool {
        let kirwan_all = self.kirwan.as_ref().map(KirwanRecord::all_passed);
        let ruled_by_projection = self.projection.as_deref().is_some_and(|p| p.starts_with(PROJECTION_RULED_OUT));
        match self.bucket {
            Bucket::Delta2Pass => {
                self.defect == 2
                    && self.k1
                    && self.k2 == Some(true)
                    && self.constructed.is_some()
                    && kirwan_all == Some(true)
            }
            Bucket::Delta2FailKirwan => {
                self.defect == 2
                    && self.k1
                    && self.k2 == Some(true)
                    && self.constructed.is_some()
                    && kirwan_all == Some(false)
            }
            Bucket::Delta3Supported => {
                self.defect == 3 && self.k1 && self.k2 == Some(true) && self.constructed.is_some()
            }
            Bucket::RuledOut => {
                !self.k1 || (self.defect == 2 && self.k2 == Some(false)) || (self.defect == 3 && ruled_by_projection)
            }
            Bucket::NeedsManual => {
                self.k1
                    && (self.defect >= 4
                        || self.projection.as_deref() == Some(PROJECTION_NO_STATEMENT)
                        || self.note.is_some())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ruled_out() -> ClassificationRecord {
        ClassificationRecord {
            vertices: 4,
            graph: "C~".into(),
            source: "C4.1".into(),
            labels: vec![1, 1, 1, 1, 1, 19],
            defect: 2,
            k1: false,
            k2: None,
            projection: None,
            constructed: None,
            kirwan: None,
            invariants: None,
            betti: None,
            betti_xi_dependent: false,
            bucket: Bucket::RuledOut,
            note: None,
        }
    }

    #[test]
    fn bucket_names_match_serde() {
        for b in Bucket::ALL {
            assert_eq!(serde_json::to_string(&b).unwrap(), format!("\"{b}\""));
        }
    }

    #[test]
    fn consistency_follows_verdicts() {
        let r = ruled_out();
        assert!(r.is_consistent());
        let mut wrong = r.clone();
        wrong.bucket = Bucket::Delta2Pass;
        assert!(!wrong.is_consistent());
        let mut manual = r;
        manual.k1 = true;
        manual.defect = 4;
        manual.bucket = Bucket::NeedsManual;
        assert!(manual.is_consistent());
    }

    #[test]
    fn records_round_trip_through_json() {
        let r = ruled_out();
        let text = serde_json::to_string(&r).unwrap();
        assert!(!text.contains("kirwan"));
        assert_eq!(serde_json::from_str::<ClassificationRecord>(&text).unwrap(), r);
    }
}
