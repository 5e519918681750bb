use exact_linalg::{rank_of_vectors, Rational};
use graph_core::index_sets;
use num_traits::Zero;

use crate::kernel::{check_k1, combination, ConnectionCheck};
use crate::SkeletonError;
use crate::{FundamentalSystem, GkmSkeleton, K2Report, StructureMatrix};

/// Data certifying that no weight matrix of rank 2 can exist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionWitness {
    pub j1: usize,
    pub j2: usize,
    pub k1: usize,
    pub k2: usize,
    pub h1: Vec<Rational>,
    pub h2: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuledOut {
    /// Every connection along this edge fails by a rational number.
    AllConnectionsFail {
        edge: usize,
    },
    Witness(ProjectionWitness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProjectionVerdict {
    RuledOut(RuledOut),
    NoStatement,
}

fn dependent(a: &[Rational], b: &[Rational]) -> bool {
    rank_of_vectors(&[a.to_vec(), b.to_vec()]) < 2
}

/// All witnesses `(j₁, j₂, k₁, k₂)` of the four-vector criterion, `j₁ < j₂`.
pub fn projection_witnesses(
    s: &GkmSkeleton,
    a: &StructureMatrix,
    fs: &FundamentalSystem,
    k2: &K2Report,
) -> Vec<ProjectionWitness> {
    // Edges with exactly one connection not failing by a rational number, and that connection.
    let singles: Vec<(usize, &ConnectionCheck)> = k2
        .edges
        .iter()
        .filter_map(|e| match e.not_failing_by_rational().as_slice() {
            [c] => Some((e.edge, *c)),
            _ => None,
        })
        .collect();
    let h = |j: usize, c: &ConnectionCheck, k: usize| combination(a, fs, j, k, c.image(k));
    let sources = |j: usize| -> Vec<usize> {
        let (u, _) = s.ordering().edge(j);
        index_sets(s.graph(), s.ordering(), u).into_iter().filter(|&k| k != j).collect()
    };
    let mut out = Vec::new();
    for (x, &(j1, c1)) in singles.iter().enumerate() {
        for &(j2, c2) in &singles[x + 1..] {
            let (f1, f2) = (fs.column(j1), fs.column(j2));
            for k1 in sources(j1) {
                let h1 = h(j1, c1, k1);
                if h1.iter().all(Zero::is_zero) {
                    continue;
                }
                for k2 in sources(j2) {
                    let h2 = h(j2, c2, k2);
                    if h2.iter().all(Zero::is_zero) {
                        continue;
                    }
                    let pair = dependent(f1, &h2) || dependent(f1, f2) || dependent(&h1, f2) || dependent(&h1, &h2);
                    if pair && rank_of_vectors(&[f1.to_vec(), f2.to_vec(), h1.clone(), h2.clone()]) == 3 {
                        out.push(ProjectionWitness { j1, j2, k1, k2, h1: h1.clone(), h2 });
                    }
                }
            }
        }
    }
    out
}

/// Rules out `(3, 2)`-graphs on a valency-3, defect-3 skeleton satisfying K1 but not K2.
pub fn projection_test(
    s: &GkmSkeleton,
    a: &StructureMatrix,
    fs: &FundamentalSystem,
    k2: &K2Report,
) -> Result<ProjectionVerdict, SkeletonError> {
    if s.valency() != 3 || fs.delta() != 3 {
        return Err(SkeletonError::Precondition("projection test needs valency 3 and defect 3".into()));
    }
    if !check_k1(fs, a) {
        return Err(SkeletonError::Precondition("K1 does not hold".into()));
    }
    if k2.satisfied() {
        return Err(SkeletonError::Precondition("K2 holds".into()));
    }
    if let Some(e) = k2.edges.iter().find(|e| e.connections.iter().all(ConnectionCheck::fails_by_rational)) {
        return Ok(ProjectionVerdict::RuledOut(RuledOut::AllConnectionsFail { edge: e.edge }));
    }
    Ok(match projection_witnesses(s, a, fs, k2).into_iter().next() {
        Some(w) => ProjectionVerdict::RuledOut(RuledOut::Witness(w)),
        None => ProjectionVerdict::NoStatement,
    })
}
