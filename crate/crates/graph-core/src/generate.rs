use std::collections::BTreeMap;

use crate::{canonize, DartGraph, GraphError};

/// All connected simple cubic graphs on `v` vertices up to isomorphism (`v` even, 4..=10).
///
/// Brute force: edges are added to the lowest unsaturated vertex in every possible way,
/// trying only the first untouched vertex among interchangeable ones, and finished graphs
/// are deduplicated by canonical form. Intended as an independent cross-check of the
/// database, so it shares nothing with it beyond `canonize`.
pub fn generate_cubic(v: usize) -> Result<Vec<DartGraph>, GraphError> {
    if v % 2 == 1 || !(4..=10).contains(&v) {
        return Err(GraphError::UnsupportedSize(v));
    }
    let mut st = State { n: v, deg: vec![0; v], adj: vec![vec![0u8; v]; v], found: BTreeMap::new() };
    st.extend();
    Ok(st.found.into_values().collect())
}

struct State {
    n: usize,
    deg: Vec<u8>,
    adj: Vec<Vec<u8>>,
    found: BTreeMap<Vec<u8>, DartGraph>,
}

impl State {
    fn extend(&mut self) {
        let Some(u) = (0..self.n).find(|&u| self.deg[u] < 3) else {
            self.record();
            return;
        };
        let mut tried_untouched = false;
        for w in u + 1..self.n {
            if self.deg[w] == 3 || self.adj[u][w] == 1 {
                continue;
            }
            if self.deg[w] == 0 {
                if tried_untouched {
                    continue;
                }
                tried_untouched = true;
            }
            self.set(u, w, 1);
            self.extend();
            self.set(u, w, 0);
        }
    }

    fn set(&mut self, u: usize, w: usize, x: u8) {
        self.adj[u][w] = x;
        self.adj[w][u] = x;
        if x == 1 {
            self.deg[u] += 1;
            self.deg[w] += 1;
        } else {
            self.deg[u] -= 1;
            self.deg[w] -= 1;
        }
    }

    fn record(&mut self) {
        let edges: Vec<_> = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |w| (u, w)))
            .filter(|&(u, w)| self.adj[u][w] == 1)
            .collect();
        let g = DartGraph::new(self.n, &edges).expect("simple by construction");
        if !g.is_connected() {
            return;
        }
        let c = canonize(&self.adj);
        self.found.entry(c.code).or_insert_with(|| {
            let mut pos = vec![0; self.n];
            for (i, &v) in c.order.iter().enumerate() {
                pos[v] = i;
            }
            g.relabel(&pos)
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(generate_cubic(4).unwrap().len(), 1);
        assert_eq!(generate_cubic(6).unwrap().len(), 2);
        assert_eq!(generate_cubic(8).unwrap().len(), 5);
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(generate_cubic(5).is_err());
        assert!(generate_cubic(12).is_err());
    }
}
