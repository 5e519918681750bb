use itertools::Itertools;

use crate::{DartGraph, EdgeOrdering};

/// A connection along a dart `e = (u, w)`: a bijection from the darts leaving `u` to the
/// darts leaving `w` that sends `e` to its reverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Connection {
    pub dart: usize,
    /// Pairs `(dart out of u, dart out of w)`, ordered by the first component.
    pub map: Vec<(usize, usize)>,
}

impl Connection {
    pub fn image(&self, d: usize) -> Option<usize> {
        self.map.iter().find(|&&(a, _)| a == d).map(|&(_, b)| b)
    }
}

/// All `(n−1)!` connections along `dart`, in a fixed order.
pub fn connections_along(g: &DartGraph, dart: usize) -> Vec<Connection> {
    let (u, w) = g.dart(dart);
    let rev = g.reverse(dart);
    let src: Vec<usize> = g.out_darts(u).iter().copied().filter(|&d| d != dart).collect();
    let dst: Vec<usize> = g.out_darts(w).iter().copied().filter(|&d| d != rev).collect();
    if src.len() != dst.len() {
        return Vec::new();
    }
    dst.iter()
        .copied()
        .permutations(dst.len())
        .map(|perm| {
            let mut map: Vec<(usize, usize)> = src.iter().copied().zip(perm).collect();
            map.push((dart, rev));
            map.sort_unstable();
            Connection { dart, map }
        })
        .collect()
}

/// IND_v: indices of the oriented edges that start or end at `v`, ascending.
pub fn index_sets(g: &DartGraph, ord: &EdgeOrdering, v: usize) -> Vec<usize> {
    let mut ind: Vec<usize> = g.out_darts(v).iter().map(|&d| ord.index_of_dart(d).0).collect();
    ind.sort_unstable();
    ind
}

/// The bijection IND_{i(e)} → IND_{t(e)} induced by a connection, as sorted pairs.
pub fn induced_index_map(ord: &EdgeOrdering, conn: &Connection) -> Vec<(usize, usize)> {
    let mut m: Vec<(usize, usize)> =
        conn.map.iter().map(|&(a, b)| (ord.index_of_dart(a).0, ord.index_of_dart(b).0)).collect();
    m.sort_unstable();
    m
}
