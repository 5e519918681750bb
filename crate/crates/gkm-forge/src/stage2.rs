use exact_linalg::Rational;
use gkm::{
    abbv_integrate, betti_numbers, find_generic, kirwan_class_test, sample_generic, AbstractGkmGraph, KirwanFailure,
    KirwanOutcome,
};
use skeleton::{
    canonical_labels, check_k1, check_k2, construct_weights, defect_and_fundamental_system, edge_permutations,
    projection_test, ProjectionVerdict, RuledOut,
};

use crate::record::{
    Bucket, ClassificationRecord, Invariants, KirwanRecord, XiVerdict, PROJECTION_NO_STATEMENT, PROJECTION_RULED_OUT,
};
use crate::{Exec, PreparedGraph};

/// How generic vectors are chosen for the Kirwan test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct XiPolicy {
    /// Extra generic vectors drawn per graph, besides the fixed one.
    pub samples: usize,
    pub seed: u64,
    /// Sampled entries lie in `[-bound, bound]`.
    pub bound: i64,
}

impl Default for XiPolicy {
    fn default() -> Self {
        Self { samples: 8, seed: 0x6b69_7277, bound: 12 }
    }
}

/// Canonical representatives, under the automorphism group, of the labels with defect ≥ 2.
pub fn canonical_candidates(g: &PreparedGraph) -> Vec<Vec<i64>> {
    let perms = edge_permutations(&g.skeleton);
    g.search().candidates().into_iter().filter(|d| canonical_labels(&perms, d) == *d).collect()
}

/// Every canonical label vector of defect ≥ 2, analyzed. Output is sorted by labels.
pub fn stage2(g: &PreparedGraph, xi: XiPolicy, exec: Exec) -> Vec<ClassificationRecord> {
    let candidates = canonical_candidates(g);
    exec.map(&candidates, |d| analyze_labels(g, d, xi)).into_iter().flatten().collect()
}

/// The verdicts for one label vector; `None` when the exact defect is below 2.
pub fn analyze_labels(g: &PreparedGraph, d: &[i64], xi: XiPolicy) -> Option<ClassificationRecord> {
    let s = g.with_labels(d);
    let a = &g.structure;
    let (defect, fs) = defect_and_fundamental_system(&s, a);
    if defect < 2 {
        return None;
    }
    let fs = fs.expect("positive defect has a fundamental system");
    let mut r = ClassificationRecord {
        vertices: g.n_vertices(),
        graph: g.key.clone(),
        source: g.source.clone(),
        labels: d.to_vec(),
        defect,
        k1: check_k1(&fs, a),
        k2: None,
        projection: None,
        constructed: None,
        kirwan: None,
        invariants: None,
        betti: None,
        betti_xi_dependent: false,
        bucket: Bucket::RuledOut,
        note: None,
    };
    if !r.k1 {
        return Some(r);
    }
    let (k2, report) = check_k2(&s, a, &fs);
    r.k2 = Some(k2);
    if defect >= 4 {
        r.bucket = Bucket::NeedsManual;
        return Some(r);
    }
    if !k2 {
        if defect == 3 {
            match projection_test(&s, a, &fs, &report) {
                Ok(ProjectionVerdict::RuledOut(why)) => r.projection = Some(describe_ruled_out(&why)),
                Ok(ProjectionVerdict::NoStatement) => {
                    r.projection = Some(PROJECTION_NO_STATEMENT.into());
                    r.bucket = Bucket::NeedsManual;
                }
                Err(e) => {
                    r.note = Some(format!("projection test: {e}"));
                    r.bucket = Bucket::NeedsManual;
                }
            }
        }
        return Some(r);
    }
    let graph = match construct_weights(&s, a, &fs) {
        Ok(graph) => graph,
        Err(e) => {
            r.note = Some(format!("construction: {e}"));
            r.bucket = Bucket::NeedsManual;
            return Some(r);
        }
    };
    r.invariants = invariants(&graph);
    r.constructed = Some(graph.to_json());
    if defect == 3 {
        r.bucket = Bucket::Delta3Supported;
        r.betti = betti_numbers(&graph, &find_generic(&graph)).ok();
        return Some(r);
    }
    let kirwan = kirwan_record(&graph, xi);
    r.betti = betti_numbers(&graph, &kirwan.xi).ok();
    r.betti_xi_dependent = kirwan.sampled.iter().any(|s| Some(&s.betti) != r.betti.as_ref());
    r.bucket = if kirwan.all_passed() { Bucket::Delta2Pass } else { Bucket::Delta2FailKirwan };
    r.kirwan = Some(kirwan);
    Some(r)
}

fn kirwan_record(g: &AbstractGkmGraph, policy: XiPolicy) -> KirwanRecord {
    let fixed = find_generic(g);
    let (passed, failure) = match kirwan_class_test(g, &fixed) {
        Ok(KirwanOutcome::Pass(_)) => (true, None),
        Ok(KirwanOutcome::Fail(f)) => (false, Some(describe_kirwan(&f))),
        Err(e) => (false, Some(e.to_string())),
    };
    let sampled = sample_generic(g, policy.seed, policy.samples, policy.bound)
        .into_iter()
        .map(|xi| XiVerdict {
            passed: kirwan_class_test(g, &xi).is_ok_and(|o| o.passed()),
            betti: betti_numbers(g, &xi).unwrap_or_default(),
            xi,
        })
        .collect();
    KirwanRecord { xi: fixed, passed, failure, sampled }
}

fn invariants(g: &AbstractGkmGraph) -> Option<Invariants> {
    let int = |m: &[usize]| abbv_integrate(g, m).map(|q: Rational| q.to_string());
    Some(Invariants { c1_cubed: int(&[1, 1, 1]).ok()?, c1_c2: int(&[1, 2]).ok()?, euler: int(&[3]).ok()? })
}

/// One-line account of a Kirwan test failure.
pub fn describe_kirwan(f: &KirwanFailure) -> String {
    match f {
        KirwanFailure::NonIntegral { seed, vertex, a1, a2, .. } => {
            format!("seed {seed}: non-integral coefficients ({a1}, {a2}) at vertex {vertex}")
        }
        KirwanFailure::Inconsistent { seed, vertex } => format!("seed {seed}: no solution at vertex {vertex}"),
        KirwanFailure::NotDivisible { seed, dart } => format!("seed {seed}: not divisible along dart {dart}"),
    }
}

fn describe_ruled_out(why: &RuledOut) -> String {
    let vec = |v: &[Rational]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    match why {
        RuledOut::AllConnectionsFail { edge } => {
            format!("{PROJECTION_RULED_OUT}: every connection along edge {edge} fails by a rational")
        }
        RuledOut::Witness(w) => format!(
            "{PROJECTION_RULED_OUT}: edges {} and {} via {} and {}, h1=({}), h2=({})",
            w.j1,
            w.j2,
            w.k1,
            w.k2,
            vec(&w.h1),
            vec(&w.h2)
        ),
    }
}
