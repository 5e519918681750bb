//! The database of connected simple cubic graphs on 4 to 16 vertices.
//!
//! Generation works on connected cubic multigraphs (loops and parallel edges allowed).
//! Every such multigraph on `N ≥ 4` vertices either reduces to one on `N − 2` vertices by
//! deleting a non-loop, non-bridge edge and suppressing its two endpoints, or is a
//! "loop tree" (all non-loop edges are bridges). Running both reductions backwards from the
//! two multigraphs on two vertices reaches every graph. Each insertion removes at most two
//! defects (loops or surplus parallel copies), which bounds the defects worth keeping per level.

use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::graph6::{encode_graph6, parse_graph6_file};
use crate::{canonize, DartGraph, GraphError};

/// Vertex counts covered by the database.
pub const SIZES: [usize; 7] = [4, 6, 8, 10, 12, 14, 16];

/// Known sizes of the connected cubic graph classes for [`SIZES`].
pub const EXPECTED_COUNTS: [usize; 7] = [1, 2, 5, 19, 85, 509, 4060];

#[derive(Debug, Error)]
pub enum DatabaseError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Graph { path: String, source: GraphError },
    #[error("{path}: graph {index} is not connected and cubic")]
    NotCubic { path: String, index: usize },
}

pub fn file_name(n: usize) -> String {
    format!("cub{n:02}.g6")
}

/// The two edges an insertion subdivides, and whether they are the same slot.
type InsertionKey = ((u8, u8), (u8, u8), bool);

#[derive(Clone, Debug)]
struct Multi {
    n: usize,
    edges: Vec<(u8, u8)>,
}

impl Multi {
    fn matrix(&self) -> Vec<Vec<u8>> {
        let mut m = vec![vec![0u8; self.n]; self.n];
        for &(a, b) in &self.edges {
            let (a, b) = (a as usize, b as usize);
            m[a][b] += 1;
            if a != b {
                m[b][a] += 1;
            }
        }
        m
    }

    fn defect(&self) -> usize {
        let mut e = self.edges.clone();
        e.sort_unstable();
        let loops = e.iter().filter(|(a, b)| a == b).count();
        let repeats = e.windows(2).filter(|w| w[0] == w[1] && w[0].0 != w[0].1).count();
        loops + repeats
    }

    fn insert(&self, i: usize, j: usize) -> Multi {
        let (x, y) = (self.n as u8, self.n as u8 + 1);
        let mut edges: Vec<(u8, u8)> =
            self.edges.iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, &e)| e).collect();
        let (a, b) = self.edges[i];
        if i == j {
            edges.extend([(a, x), (x, y), (x, y), (y.min(b), y.max(b))]);
        } else {
            let (c, d) = self.edges[j];
            edges.extend([(a, x), (b.min(x), b.max(x)), (c, y), (d.min(y), d.max(y)), (x, y)]);
        }
        for e in edges.iter_mut() {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        Multi { n: self.n + 2, edges }
    }

    fn is_loop_tree(&self) -> bool {
        self.edges.iter().filter(|(a, b)| a != b).count() + 1 == self.n
    }

    fn expand_loop(&self, k: usize) -> Multi {
        let (u, _) = self.edges[k];
        let (x, y) = (self.n as u8, self.n as u8 + 1);
        let mut edges: Vec<(u8, u8)> =
            self.edges.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &e)| e).collect();
        edges.extend([(u, x), (u, y), (x, x), (y, y)]);
        Multi { n: self.n + 2, edges }
    }

    fn to_simple(&self) -> DartGraph {
        let e: Vec<_> = self.edges.iter().map(|&(a, b)| (a as usize, b as usize)).collect();
        DartGraph::new(self.n, &e).expect("defect-free multigraph is simple")
    }
}

/// All connected simple cubic graphs with `4 ≤ n ≤ max_n` vertices, keyed by `n`.
///
/// Graphs are canonically labeled and sorted by their graph6 string.
pub fn generate_database(max_n: usize) -> BTreeMap<usize, Vec<DartGraph>> {
    let theta = Multi { n: 2, edges: vec![(0, 1), (0, 1), (0, 1)] };
    let dumbbell = Multi { n: 2, edges: vec![(0, 0), (0, 1), (1, 1)] };
    let mut level = vec![theta, dumbbell];
    let mut out = BTreeMap::new();
    let mut n = 4;
    while n <= max_n {
        let allowance = max_n - n;
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut next = Vec::new();
        let mut keep = |m: Multi, next: &mut Vec<Multi>| {
            if m.defect() <= allowance {
                let c = canonize(&m.matrix());
                if seen.insert(c.code) {
                    let mut pos = vec![0u8; m.n];
                    for (i, &v) in c.order.iter().enumerate() {
                        pos[v] = i as u8;
                    }
                    let edges = m
                        .edges
                        .iter()
                        .map(|&(a, b)| {
                            let (a, b) = (pos[a as usize], pos[b as usize]);
                            (a.min(b), a.max(b))
                        })
                        .collect();
                    next.push(Multi { n: m.n, edges });
                }
            }
        };
        for g in &level {
            let mut done: HashSet<InsertionKey> = HashSet::new();
            for i in 0..g.edges.len() {
                for j in i..g.edges.len() {
                    if !done.insert((g.edges[i], g.edges[j], i == j)) {
                        continue;
                    }
                    keep(g.insert(i, j), &mut next);
                }
            }
            if g.is_loop_tree() {
                for k in 0..g.edges.len() {
                    if g.edges[k].0 == g.edges[k].1 {
                        keep(g.expand_loop(k), &mut next);
                    }
                }
            }
        }
        let mut simple: Vec<DartGraph> = next.iter().filter(|m| m.defect() == 0).map(Multi::to_simple).collect();
        simple.sort_by_cached_key(encode_graph6);
        out.insert(n, simple);
        level = next;
        n += 2;
    }
    out
}

pub fn write_database(dir: &Path, db: &BTreeMap<usize, Vec<DartGraph>>) -> Result<(), DatabaseError> {
    let io = |path: &Path, source| DatabaseError::Io { path: path.display().to_string(), source };
    fs::create_dir_all(dir).map_err(|e| io(dir, e))?;
    for (&n, graphs) in db {
        let path = dir.join(file_name(n));
        let mut text = String::new();
        for g in graphs {
            text.push_str(&encode_graph6(g));
            text.push('\n');
        }
        fs::write(&path, text).map_err(|e| io(&path, e))?;
    }
    Ok(())
}

/// Reads `cubNN.g6` and checks every entry is connected and cubic on `n` vertices.
pub fn read_size(dir: &Path, n: usize) -> Result<Vec<DartGraph>, DatabaseError> {
    let path = dir.join(file_name(n));
    let shown = path.display().to_string();
    let text = fs::read_to_string(&path).map_err(|source| DatabaseError::Io { path: shown.clone(), source })?;
    let graphs = parse_graph6_file(&text).map_err(|source| DatabaseError::Graph { path: shown.clone(), source })?;
    if let Some(index) = graphs.iter().position(|g| g.n_vertices() != n || !g.is_cubic_connected()) {
        return Err(DatabaseError::NotCubic { path: shown, index });
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_up_to_ten() {
        let db = generate_database(10);
        let counts: Vec<usize> = db.values().map(Vec::len).collect();
        assert_eq!(counts, EXPECTED_COUNTS[..4]);
    }

    #[test]
    fn defect_counts_loops_and_repeats() {
        let m = Multi { n: 2, edges: vec![(0, 0), (0, 1), (1, 1)] };
        assert_eq!(m.defect(), 2);
        let t = Multi { n: 2, edges: vec![(0, 1), (0, 1), (0, 1)] };
        assert_eq!(t.defect(), 2);
    }
}
