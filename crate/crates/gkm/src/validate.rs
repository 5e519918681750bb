use std::fmt;

use exact_linalg::spans_full_lattice;
use graph_core::{connections_along, Connection};

use crate::vecops::{independent, integer_multiple, is_zero, sub};
use crate::AbstractGkmGraph;

/// One failed axiom together with the data that witnesses it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NotConnected,
    NotRegular,
    /// `2 ≤ d` is required once the valency is at least 2.
    TorusRank {
        d: usize,
        n: usize,
    },
    NotAntisymmetric {
        dart: usize,
    },
    ZeroWeight {
        dart: usize,
    },
    SpanDeficient {
        vertex: usize,
    },
    Dependent {
        vertex: usize,
        darts: (usize, usize),
    },
    NoCompatibleConnection {
        dart: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotConnected => write!(f, "graph is not connected"),
            Self::NotRegular => write!(f, "graph is not regular"),
            Self::TorusRank { d, n } => write!(f, "torus rank {d} is below 2 for valency {n}"),
            Self::NotAntisymmetric { dart } => write!(f, "dart {dart}: w(ē) ≠ −w(e)"),
            Self::ZeroWeight { dart } => write!(f, "dart {dart} has zero weight"),
            Self::SpanDeficient { vertex } => write!(f, "weights at vertex {vertex} do not span the lattice"),
            Self::Dependent { vertex, darts: (a, b) } => {
                write!(f, "weights of darts {a} and {b} at vertex {vertex} are dependent")
            }
            Self::NoCompatibleConnection { dart } => write!(f, "dart {dart} admits no compatible connection"),
        }
    }
}

/// Connections along `dart = (u, w)` with `w(e′) − w(∇e′) ∈ ℤ·w(dart)` for every `e′` at `u`.
pub fn compatible_connections(g: &AbstractGkmGraph, dart: usize) -> Vec<Connection> {
    let w = g.weight(dart);
    if is_zero(w) {
        return Vec::new();
    }
    connections_along(g.graph(), dart)
        .into_iter()
        .filter(|c| c.map.iter().all(|&(a, b)| integer_multiple(&sub(g.weight(a), g.weight(b)), w).is_some()))
        .collect()
}

/// Every violated axiom; an empty list means `g` is an abstract GKM graph.
pub fn validate(g: &AbstractGkmGraph) -> Vec<Violation> {
    let graph = g.graph();
    let mut out = Vec::new();
    if !graph.is_connected() {
        out.push(Violation::NotConnected);
    }
    let Some(n) = graph.valency() else {
        out.push(Violation::NotRegular);
        return out;
    };
    if n >= 2 && g.d() < 2 {
        out.push(Violation::TorusRank { d: g.d(), n });
    }
    for i in 0..graph.n_darts() {
        let r = graph.reverse(i);
        if g.weight(i).iter().zip(g.weight(r)).any(|(a, b)| *a != -b) {
            out.push(Violation::NotAntisymmetric { dart: i });
        }
        if is_zero(g.weight(i)) {
            out.push(Violation::ZeroWeight { dart: i });
        }
    }
    for v in 0..graph.n_vertices() {
        let darts = graph.out_darts(v);
        let ws: Vec<Vec<i64>> = darts.iter().map(|&i| g.weight(i).to_vec()).collect();
        if !spans_full_lattice(&ws, g.d()) {
            out.push(Violation::SpanDeficient { vertex: v });
        }
        for a in 0..darts.len() {
            for b in a + 1..darts.len() {
                if !independent(&ws[a], &ws[b]) {
                    out.push(Violation::Dependent { vertex: v, darts: (darts[a], darts[b]) });
                }
            }
        }
    }
    for i in 0..graph.n_darts() {
        if compatible_connections(g, i).is_empty() {
            out.push(Violation::NoCompatibleConnection { dart: i });
        }
    }
    out
}

impl AbstractGkmGraph {
    pub fn is_valid(&self) -> bool {
        validate(self).is_empty()
    }
}
