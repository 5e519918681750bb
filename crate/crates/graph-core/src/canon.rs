//! Canonical labeling by equitable refinement and exhaustive individualization.
//!
//! The search tree is explored completely (no automorphism pruning). At the sizes used here
//! (at most 16 vertices, valency 3) the tree stays small, and visiting every leaf yields the
//! full automorphism group for free: the leaves whose relabeled matrix equals the canonical
//! one are exactly the images of the canonical leaf under automorphisms.

use crate::DartGraph;

/// Result of canonizing a symmetric matrix of edge multiplicities.
#[derive(Clone, Debug)]
pub struct Canon {
    /// `n` followed by the upper triangle (diagonal included) of the relabeled matrix.
    pub code: Vec<u8>,
    /// `order[i]` is the original vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    /// Automorphisms as vertex maps `v ↦ σ[v]`, identity first.
    pub automorphisms: Vec<Vec<usize>>,
}

type Cells = Vec<Vec<usize>>;

/// Canonizes a symmetric multiplicity matrix. Diagonal entries count loops.
pub fn canonize(m: &[Vec<u8>]) -> Canon {
    let n = m.len();
    let mut init: Vec<(u8, u32, usize)> = (0..n).map(|v| (m[v][v], m[v].iter().map(|&x| x as u32).sum(), v)).collect();
    init.sort_unstable();
    let mut cells: Cells = Vec::new();
    for (i, &(l, d, v)) in init.iter().enumerate() {
        if i > 0 && (init[i - 1].0, init[i - 1].1) == (l, d) {
            cells.last_mut().expect("open cell").push(v);
        } else {
            cells.push(vec![v]);
        }
    }
    let mut best: Option<Vec<u8>> = None;
    let mut leaves: Vec<Vec<usize>> = Vec::new();
    search(m, cells, &mut best, &mut leaves);
    let code = best.unwrap_or_else(|| vec![0]);
    let order = leaves[0].clone();
    let mut inv_best = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        inv_best[v] = i;
    }
    let mut automorphisms: Vec<Vec<usize>> =
        leaves.iter().map(|leaf| (0..n).map(|v| leaf[inv_best[v]]).collect()).collect();
    automorphisms.sort_unstable();
    automorphisms.dedup();
    let id: Vec<usize> = (0..n).collect();
    if let Some(p) = automorphisms.iter().position(|a| *a == id) {
        automorphisms.swap(0, p);
    }
    Canon { code, order, automorphisms }
}

fn search(m: &[Vec<u8>], mut cells: Cells, best: &mut Option<Vec<u8>>, leaves: &mut Vec<Vec<usize>>) {
    refine(m, &mut cells);
    if cells.iter().all(|c| c.len() == 1) {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = encode(m, &order);
        match best.as_ref().map(|b| code.cmp(b)) {
            None | Some(std::cmp::Ordering::Less) => {
                *best = Some(code);
                leaves.clear();
                leaves.push(order);
            }
            Some(std::cmp::Ordering::Equal) => leaves.push(order),
            Some(std::cmp::Ordering::Greater) => {}
        }
        return;
    }
    // Target: the first smallest non-singleton cell, an isomorphism-invariant choice.
    let size = cells.iter().map(Vec::len).filter(|&s| s > 1).min().expect("non-discrete");
    let t = cells.iter().position(|c| c.len() == size).expect("target cell");
    for &v in &cells[t] {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend(cells[..t].iter().cloned());
        next.push(vec![v]);
        next.push(cells[t].iter().copied().filter(|&w| w != v).collect());
        next.extend(cells[t + 1..].iter().cloned());
        search(m, next, best, leaves);
    }
}

/// Splits cells by the multiset of multiplicities into each cell until the partition is equitable.
fn refine(m: &[Vec<u8>], cells: &mut Cells) {
    let n = m.len();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let k = cells.len();
        let mut next: Cells = Vec::with_capacity(n);
        let mut split = false;
        for c in cells.iter() {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut sig: Vec<(Vec<u32>, usize)> = c
                .iter()
                .map(|&v| {
                    let mut s = vec![0u32; k];
                    for (w, &x) in m[v].iter().enumerate() {
                        s[cell_of[w]] += x as u32;
                    }
                    (s, v)
                })
                .collect();
            sig.sort_unstable();
            let start = next.len();
            for (i, (s, v)) in sig.iter().enumerate() {
                if i > 0 && sig[i - 1].0 == *s {
                    next.last_mut().expect("open cell").push(*v);
                } else {
                    next.push(vec![*v]);
                }
            }
            split |= next.len() - start > 1;
        }
        *cells = next;
        if !split {
            return;
        }
    }
}

fn encode(m: &[Vec<u8>], order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut code = Vec::with_capacity(1 + n * (n + 1) / 2);
    code.push(n as u8);
    for i in 0..n {
        for j in i..n {
            code.push(m[order[i]][order[j]]);
        }
    }
    code
}

/// Byte string equal for two graphs exactly when they are isomorphic.
pub fn canonical_form(g: &DartGraph) -> Vec<u8> {
    canonize(&g.adjacency()).code
}

/// The full automorphism group as vertex maps, identity first.
pub fn automorphisms(g: &DartGraph) -> Vec<Vec<usize>> {
    canonize(&g.adjacency()).automorphisms
}

/// A vertex bijection `f` with `f(g)` = `h`, if the graphs are isomorphic.
pub fn isomorphic_graphs(g: &DartGraph, h: &DartGraph) -> Option<Vec<usize>> {
    let cg = canonize(&g.adjacency());
    let ch = canonize(&h.adjacency());
    if cg.code != ch.code {
        return None;
    }
    let n = g.n_vertices();
    let mut f = vec![0; n];
    for i in 0..n {
        f[cg.order[i]] = ch.order[i];
    }
    Some(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::parse_graph6;

    fn cycle(n: usize) -> DartGraph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        DartGraph::new(n, &e).unwrap()
    }

    #[test]
    fn k4_has_24_automorphisms() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!(automorphisms(&g).len(), 24);
    }

    #[test]
    fn six_cycle_has_12_automorphisms() {
        assert_eq!(automorphisms(&cycle(6)).len(), 12);
    }

    #[test]
    fn automorphisms_preserve_edges() {
        let g = cycle(7);
        for a in automorphisms(&g) {
            assert_eq!(g.relabel(&a), g);
        }
    }

    #[test]
    fn k33_differs_from_prism() {
        let k33 = DartGraph::new(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
        let prism =
            DartGraph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert_ne!(canonical_form(&k33), canonical_form(&prism));
        assert_eq!(automorphisms(&k33).len(), 72);
        assert_eq!(automorphisms(&prism).len(), 12);
    }

    #[test]
    fn isomorphism_is_witnessed() {
        let g = cycle(5);
        let h = g.relabel(&[3, 0, 4, 1, 2]);
        let f = isomorphic_graphs(&g, &h).unwrap();
        assert_eq!(g.relabel(&f), h);
    }

    #[test]
    fn loops_and_multiplicities_matter() {
        let a = vec![vec![0, 3], vec![3, 0]];
        let b = vec![vec![2, 1], vec![1, 2]];
        assert_ne!(canonize(&a).code, canonize(&b).code);
        assert_eq!(canonize(&b).automorphisms.len(), 2);
    }
}
