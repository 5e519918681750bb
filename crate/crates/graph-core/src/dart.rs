use std::collections::VecDeque;

use crate::GraphError;

/// A simple graph on vertices `0..n` stored as darts.
///
/// Darts are kept in lexicographic `(src, dst)` order, so dart indices are deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DartGraph {
    n: usize,
    darts: Vec<(usize, usize)>,
    rev: Vec<usize>,
    out: Vec<Vec<usize>>,
}

impl DartGraph {
    /// Builds a graph from undirected edges given once each (either direction).
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut darts = Vec::with_capacity(2 * edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            darts.push((u, v));
            darts.push((v, u));
        }
        darts.sort_unstable();
        if let Some(w) = darts.windows(2).find(|w| w[0] == w[1]) {
            let (a, b) = w[0];
            return Err(GraphError::RepeatedEdge(a.min(b), a.max(b)));
        }
        let mut out = vec![Vec::new(); n];
        for (i, &(u, _)) in darts.iter().enumerate() {
            out[u].push(i);
        }
        let rev = darts.iter().map(|&(u, v)| darts.binary_search(&(v, u)).expect("reverse dart present")).collect();
        Ok(Self { n, darts, rev, out })
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn n_darts(&self) -> usize {
        self.darts.len()
    }

    pub fn darts(&self) -> &[(usize, usize)] {
        &self.darts
    }

    pub fn dart(&self, i: usize) -> (usize, usize) {
        self.darts[i]
    }

    pub fn dart_index(&self, u: usize, v: usize) -> Option<usize> {
        self.darts.binary_search(&(u, v)).ok()
    }

    /// The involution `e ↦ ē`.
    pub fn reverse(&self, i: usize) -> usize {
        self.rev[i]
    }

    /// Indices of darts leaving `v`, ordered by target.
    pub fn out_darts(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[v].iter().map(move |&i| self.darts[i].1)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.dart_index(u, v).is_some()
    }

    /// Common degree when the graph is regular.
    pub fn valency(&self) -> Option<usize> {
        let d = self.out.first().map_or(0, Vec::len);
        self.out.iter().all(|o| o.len() == d).then_some(d)
    }

    /// Undirected edges as `(u, v)` with `u < v`, lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.darts.iter().copied().filter(|&(u, v)| u < v).collect()
    }

    pub fn n_edges(&self) -> usize {
        self.darts.len() / 2
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_cubic_connected(&self) -> bool {
        self.n > 0 && self.out.iter().all(|o| o.len() == 3) && self.is_connected()
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Self::new(self.n, &edges).expect("relabeling a simple graph")
    }

    pub fn adjacency(&self) -> Vec<Vec<u8>> {
        let mut m = vec![vec![0u8; self.n]; self.n];
        for &(u, v) in &self.darts {
            m[u][v] = 1;
        }
        m
    }
}

/// An orientation (one dart per edge) together with a total order on it.
///
/// Entry `j` is the oriented edge `e_{j+1}`; indices are 0-based throughout the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeOrdering {
    edges: Vec<(usize, usize)>,
    // index[dart] = (edge index, dart agrees with the orientation)
    index: Vec<(usize, bool)>,
}

impl EdgeOrdering {
    /// Darts `(u, v)` with `u < v` in lexicographic order.
    pub fn lexicographic(g: &DartGraph) -> Self {
        Self::new(g, g.edges()).expect("lexicographic ordering is valid")
    }

    pub fn new(g: &DartGraph, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut index = vec![(usize::MAX, false); g.n_darts()];
        for (j, &(u, v)) in edges.iter().enumerate() {
            let d =
                g.dart_index(u, v).ok_or_else(|| GraphError::InvalidOrdering(format!("({u}, {v}) is not an edge")))?;
            let r = g.reverse(d);
            if index[d].0 != usize::MAX || index[r].0 != usize::MAX {
                return Err(GraphError::InvalidOrdering(format!("edge ({u}, {v}) listed twice")));
            }
            index[d] = (j, true);
            index[r] = (j, false);
        }
        if index.iter().any(|&(j, _)| j == usize::MAX) {
            return Err(GraphError::InvalidOrdering("some edge is missing".into()));
        }
        Ok(Self { edges, index })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, j: usize) -> (usize, usize) {
        self.edges[j]
    }

    /// Edge index of a dart and whether the dart is the oriented one.
    pub fn index_of_dart(&self, dart: usize) -> (usize, bool) {
        self.index[dart]
    }

    /// The orientation E^σ as dart indices of `g`, in edge order.
    pub fn orientation(&self, g: &DartGraph) -> Vec<usize> {
        self.edges.iter().map(|&(u, v)| g.dart_index(u, v).expect("edge of g")).collect()
    }
}
