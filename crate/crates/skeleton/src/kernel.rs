use exact_linalg::{int, is_integer, multiple_of, rank_of_vectors, Rational};
use graph_core::{connections_along, induced_index_map, Connection};
use num_traits::Zero;

use crate::{FundamentalSystem, GkmSkeleton, StructureMatrix};

/// `f_j` and `f_k` are linearly independent whenever `a_jk = ±1`.
pub fn check_k1(fs: &FundamentalSystem, a: &StructureMatrix) -> bool {
    let m = a.size();
    (0..m).all(|j| {
        (j + 1..m).all(|k| a.get(j, k) == 0 || rank_of_vectors(&[fs.column(j).to_vec(), fs.column(k).to_vec()]) == 2)
    })
}

/// How `a_{j,k} f_k + a_{j,∇̃k} f_{∇̃k}` relates to `f_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    IntegerMultiple(Rational),
    /// A multiple `ν ∈ ℚ ∖ ℤ`.
    RationalMultiple(Rational),
    NotCollinear,
}

/// The check of one connection along `e_j`, one term per `k ∈ IND_{i(e_j)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionCheck {
    pub connection: Connection,
    /// The induced bijection `IND_{i(e_j)} → IND_{t(e_j)}` as sorted pairs.
    pub index_map: Vec<(usize, usize)>,
    pub terms: Vec<(usize, Term)>,
}

impl ConnectionCheck {
    pub fn satisfies(&self) -> bool {
        self.terms.iter().all(|(_, t)| matches!(t, Term::IntegerMultiple(_)))
    }

    pub fn fails_by_rational(&self) -> bool {
        self.terms.iter().any(|(_, t)| matches!(t, Term::RationalMultiple(_)))
    }

    pub fn image(&self, k: usize) -> usize {
        self.index_map.iter().find(|&&(a, _)| a == k).map(|&(_, b)| b).expect("k in the index set")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeK2 {
    pub edge: usize,
    pub connections: Vec<ConnectionCheck>,
}

impl EdgeK2 {
    pub fn satisfied(&self) -> bool {
        self.connections.iter().any(ConnectionCheck::satisfies)
    }

    /// Connections that do not fail by a rational number.
    pub fn not_failing_by_rational(&self) -> Vec<&ConnectionCheck> {
        self.connections.iter().filter(|c| !c.fails_by_rational()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K2Report {
    pub edges: Vec<EdgeK2>,
}

impl K2Report {
    pub fn satisfied(&self) -> bool {
        self.edges.iter().all(EdgeK2::satisfied)
    }

    /// Indices of edges with no connection satisfying the condition.
    pub fn failing_edges(&self) -> Vec<usize> {
        self.edges.iter().filter(|e| !e.satisfied()).map(|e| e.edge).collect()
    }
}

/// `a_{j,k} f_k + a_{j,k'} f_{k'}`.
pub(crate) fn combination(a: &StructureMatrix, fs: &FundamentalSystem, j: usize, k: usize, k2: usize) -> Vec<Rational> {
    let (c1, c2) = (int(a.get(j, k)), int(a.get(j, k2)));
    fs.column(k).iter().zip(fs.column(k2)).map(|(x, y)| &c1 * x + &c2 * y).collect()
}

fn classify(v: &[Rational], f: &[Rational]) -> Term {
    if f.iter().all(Zero::is_zero) {
        return if v.iter().all(Zero::is_zero) { Term::IntegerMultiple(int(0)) } else { Term::NotCollinear };
    }
    match multiple_of(v, f) {
        Some(nu) if is_integer(&nu) => Term::IntegerMultiple(nu),
        Some(nu) => Term::RationalMultiple(nu),
        None => Term::NotCollinear,
    }
}

/// Checks every connection along every oriented edge.
pub fn check_k2(s: &GkmSkeleton, a: &StructureMatrix, fs: &FundamentalSystem) -> (bool, K2Report) {
    let g = s.graph();
    let ord = s.ordering();
    let edges = (0..ord.len())
        .map(|j| {
            let (u, w) = ord.edge(j);
            let dart = g.dart_index(u, w).expect("ordered edge");
            let connections = connections_along(g, dart)
                .into_iter()
                .map(|connection| {
                    let index_map = induced_index_map(ord, &connection);
                    let terms = index_map
                        .iter()
                        .map(|&(k, k2)| (k, classify(&combination(a, fs, j, k, k2), fs.column(j))))
                        .collect();
                    ConnectionCheck { connection, index_map, terms }
                })
                .collect();
            EdgeK2 { edge: j, connections }
        })
        .collect();
    let report = K2Report { edges };
    (report.satisfied(), report)
}
