use exact_linalg::{int, kernel_basis, Rational, RationalMatrix};
use num_traits::Zero;

use crate::{GkmSkeleton, SkeletonError};

/// The symmetric edge-incidence matrix with entries in `{2, 1, −1, 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureMatrix {
    entries: Vec<Vec<i64>>,
}

impl StructureMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, j: usize, k: usize) -> i64 {
        self.entries[j][k]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// `A − diag(labels)` over ℚ.
    pub fn minus_diagonal(&self, labels: &[i64]) -> RationalMatrix {
        let mut rows = self.entries.clone();
        for (j, row) in rows.iter_mut().enumerate() {
            row[j] -= labels[j];
        }
        RationalMatrix::from_i64_rows(&rows)
    }
}

/// `a_jj = 2`; `1` when the edges share their initial or their terminal vertex; `−1` when one
/// starts where the other ends; `0` otherwise.
pub fn structure_matrix(s: &GkmSkeleton) -> StructureMatrix {
    let edges = s.ordering().edges();
    let m = edges.len();
    let mut entries = vec![vec![0i64; m]; m];
    for (j, &(ij, tj)) in edges.iter().enumerate() {
        for (k, &(ik, tk)) in edges.iter().enumerate() {
            entries[j][k] = if j == k {
                2
            } else if ij == ik || tj == tk {
                1
            } else if ij == tk || tj == ik {
                -1
            } else {
                0
            };
        }
    }
    StructureMatrix { entries }
}

/// A basis of `ker(A − D)` stored as the rows of a `δ × m` matrix; column `j` is `f_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalSystem {
    columns: Vec<Vec<Rational>>,
    delta: usize,
}

impl FundamentalSystem {
    /// From `δ` row vectors of length `m`.
    pub fn from_rows(rows: &[Vec<Rational>]) -> Result<Self, SkeletonError> {
        let delta = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if delta == 0 || rows.iter().any(|r| r.len() != m) {
            return Err(SkeletonError::Malformed("fundamental system needs equal nonempty rows".into()));
        }
        let columns = (0..m).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
        Ok(Self { columns, delta })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, SkeletonError> {
        let rows: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        Self::from_rows(&rows)
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// `f_j ∈ ℚ^δ`.
    pub fn column(&self, j: usize) -> &[Rational] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Vec<Rational>] {
        &self.columns
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        (0..self.delta).map(|i| self.columns.iter().map(|c| c[i].clone()).collect()).collect()
    }

    /// `g·F` for an invertible `δ × δ` matrix `g`.
    pub fn transform(&self, g: &RationalMatrix) -> Result<Self, SkeletonError> {
        let columns = self.columns.iter().map(|c| g.mul_vec(c)).collect::<Result<Vec<_>, _>>()?;
        Ok(Self { columns, delta: self.delta })
    }

    /// Flips the sign of the columns whose edge orientation was reversed.
    pub fn negate_columns(&self, flipped: &[bool]) -> Self {
        let columns = self
            .columns
            .iter()
            .zip(flipped)
            .map(|(c, &f)| if f { c.iter().map(|x| -x).collect() } else { c.clone() })
            .collect();
        Self { columns, delta: self.delta }
    }

    /// Whether the rows span `ker(A − D)` for the given skeleton data.
    pub fn is_kernel_basis(&self, a: &StructureMatrix, labels: &[i64]) -> bool {
        let m = a.minus_diagonal(labels);
        let rows = self.rows();
        exact_linalg::rank_of_vectors(&rows) == self.delta
            && kernel_basis(&m).len() == self.delta
            && rows.iter().all(|r| m.mul_vec(r).map(|v| v.iter().all(Zero::is_zero)).unwrap_or(false))
    }
}

/// The defect `δ = dim ker(A − D)` and, when `δ > 0`, the fundamental system in reduced row
/// echelon form.
pub fn defect_and_fundamental_system(s: &GkmSkeleton, a: &StructureMatrix) -> (usize, Option<FundamentalSystem>) {
    let kernel = kernel_basis(&a.minus_diagonal(s.labels()));
    let delta = kernel.len();
    let fs = (delta > 0).then(|| FundamentalSystem::from_rows(&kernel).expect("kernel rows have equal length"));
    (delta, fs)
}
