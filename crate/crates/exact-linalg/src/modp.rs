//! Row echelon forms over 𝔽_p for fast rank screening.
//!
//! Reduction modulo p can only lose rank, so `rank_p(m) ≤ rank_ℚ(m)` for an integer matrix
//! `m`. A nullity bound that fails modulo p therefore fails over ℚ as well.

/// The Mersenne prime 2³¹ − 1; products of two residues fit in a `u64`.
pub const P: u64 = 2_147_483_647;

pub fn residue(x: i64) -> u64 {
    x.rem_euclid(P as i64) as u64
}

pub fn inv(a: u64) -> u64 {
    debug_assert!(a != 0);
    pow(a, P - 2)
}

fn pow(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    acc
}

/// Incrementally built echelon basis. Rows can be pushed and popped, which suits a
/// depth-first search that fixes one matrix row per level.
#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Self { width, rows: Vec::with_capacity(width) }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Reduces `v` in place against the stored rows.
    pub fn reduce(&self, v: &mut [u64]) {
        for (piv, row) in &self.rows {
            let f = v[*piv];
            if f == 0 {
                continue;
            }
            let g = P - f;
            for (x, r) in v.iter_mut().zip(row).skip(*piv) {
                if *r != 0 {
                    *x = (*x + g * r) % P;
                }
            }
        }
    }

    /// Adds an already reduced vector; returns false (and stores nothing) if it is zero.
    pub fn push_reduced(&mut self, mut v: Vec<u64>) -> bool {
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let s = inv(v[piv]);
        for x in v.iter_mut().skip(piv) {
            *x = *x * s % P;
        }
        self.rows.push((piv, v));
        true
    }

    pub fn push(&mut self, mut v: Vec<u64>) -> bool {
        self.reduce(&mut v);
        self.push_reduced(v)
    }

    pub fn truncate(&mut self, rank: usize) {
        self.rows.truncate(rank);
    }
}

pub fn rank_mod_p(rows: &[Vec<i64>]) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut e = Echelon::new(width);
    for r in rows {
        e.push(r.iter().map(|&x| residue(x)).collect());
    }
    e.rank()
}
