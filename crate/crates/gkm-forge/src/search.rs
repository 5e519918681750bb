//! Screening of label vectors by the nullity of `A − diag(d)` modulo a prime.
//!
//! The search fixes one label per level. Row `j` of `A − diag(d)` only involves `d_j`, so
//! after reducing `A_j` and the unit vector `e_j` against the rows already fixed, every
//! choice of `d_j` costs one vector combination. Nullity over 𝔽_p bounds nullity over ℚ
//! from above, so no label vector with rational defect `≥ k` is ever skipped.

use std::ops::ControlFlow;

use exact_linalg::modp::{residue, Echelon, P};

pub struct NullitySearch {
    rows: Vec<Vec<u64>>,
    total: i64,
    min_nullity: usize,
}

impl NullitySearch {
    /// Searches compositions of `total` with `A − diag(d)` of nullity at least `min_nullity`.
    pub fn new(a: &[Vec<i64>], total: i64, min_nullity: usize) -> Self {
        let rows = a.iter().map(|r| r.iter().map(|&x| residue(x)).collect()).collect();
        Self { rows, total, min_nullity }
    }

    /// Calls `visit` on every candidate in lexicographic order until it breaks.
    pub fn run<F: FnMut(&[i64]) -> ControlFlow<()>>(&self, mut visit: F) -> ControlFlow<()> {
        let m = self.rows.len();
        if m == 0 || self.total < m as i64 {
            return ControlFlow::Continue(());
        }
        let mut ech = Echelon::new(m);
        let mut d = Vec::with_capacity(m);
        self.level(0, self.total, &mut d, &mut ech, &mut visit)
    }

    /// Every candidate, collected.
    pub fn candidates(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let _ = self.run(|d| {
            out.push(d.to_vec());
            ControlFlow::Continue(())
        });
        out
    }

    fn level<F: FnMut(&[i64]) -> ControlFlow<()>>(
        &self,
        j: usize,
        rem: i64,
        d: &mut Vec<i64>,
        ech: &mut Echelon,
        visit: &mut F,
    ) -> ControlFlow<()> {
        let m = self.rows.len();
        let after = m - 1 - j;
        let mut ra = self.rows[j].clone();
        ech.reduce(&mut ra);
        let mut re = vec![0u64; m];
        re[j] = 1;
        ech.reduce(&mut re);
        let rank = ech.rank();
        let (lo, hi) = if after == 0 { (rem, rem) } else { (1, rem - after as i64) };
        for v in lo..=hi {
            let c = P - residue(v);
            let row: Vec<u64> = ra.iter().zip(&re).map(|(&x, &y)| (x + c * y) % P).collect();
            let pushed = ech.push_reduced(row);
            // Each remaining row can raise the nullity by at most one.
            let nullity_so_far = j + 1 - ech.rank();
            if nullity_so_far + after >= self.min_nullity {
                d.push(v);
                let flow = if after == 0 { visit(d) } else { self.level(j + 1, rem - v, d, ech, visit) };
                d.pop();
                if flow.is_break() {
                    ech.truncate(rank);
                    return flow;
                }
            }
            if pushed {
                ech.truncate(rank);
            }
        }
        ControlFlow::Continue(())
    }
}
