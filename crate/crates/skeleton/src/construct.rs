use exact_linalg::{int, invert, lattice_span_basis, to_i64, Rational, RationalMatrix};
use gkm::{first_chern_map, validate, AbstractGkmGraph};
use graph_core::index_sets;
use num_traits::Zero;

use crate::kernel::{check_k1, check_k2};
use crate::{FundamentalSystem, GkmSkeleton, SkeletonError, StructureMatrix};

/// The `δ`-dimensional lattice generated by `{f_k : k ∈ IND_v}`, as its Hermite basis.
fn vertex_lattice(s: &GkmSkeleton, fs: &FundamentalSystem, v: usize) -> Result<Vec<Vec<Rational>>, SkeletonError> {
    let vectors: Vec<Vec<Rational>> =
        index_sets(s.graph(), s.ordering(), v).into_iter().map(|k| fs.column(k).to_vec()).collect();
    Ok(lattice_span_basis(&vectors)?)
}

/// The abstract `(n, δ)`-GKM graph supported by a skeleton satisfying K1 and K2.
///
/// With `B` the lattice basis at vertex 0 as columns, `w(e_i) = B⁻¹·f_i`. The lattice is checked
/// to be the same at every vertex, and the result is checked against `A·Wᵀ = D·Wᵀ`, the GKM
/// axioms and `C₁(e_i) = d_i`.
pub fn construct_weights(
    s: &GkmSkeleton,
    a: &StructureMatrix,
    fs: &FundamentalSystem,
) -> Result<AbstractGkmGraph, SkeletonError> {
    if !check_k1(fs, a) {
        return Err(SkeletonError::Precondition("K1 does not hold".into()));
    }
    if !check_k2(s, a, fs).0 {
        return Err(SkeletonError::Precondition("K2 does not hold".into()));
    }
    let delta = fs.delta();
    let basis = vertex_lattice(s, fs, 0)?;
    for v in 1..s.graph().n_vertices() {
        if vertex_lattice(s, fs, v)? != basis {
            return Err(SkeletonError::Axiom(format!("lattice at vertex {v} differs from vertex 0")));
        }
    }
    let m = invert(&RationalMatrix::from_columns(&basis, delta)?)?;
    let weights: Vec<Vec<i64>> = fs
        .columns()
        .iter()
        .enumerate()
        .map(|(i, f)| {
            m.mul_vec(f)?
                .iter()
                .map(to_i64)
                .collect::<Option<Vec<i64>>>()
                .ok_or_else(|| SkeletonError::Axiom(format!("weight of edge {i} is not integral")))
        })
        .collect::<Result<_, _>>()?;

    for (j, row) in a.rows().iter().enumerate() {
        for c in 0..delta {
            let lhs: i64 = row.iter().zip(&weights).map(|(x, w)| x * w[c]).sum();
            if lhs != s.labels()[j] * weights[j][c] {
                return Err(SkeletonError::Axiom(format!("A·Wᵀ ≠ D·Wᵀ in row {j}")));
            }
        }
    }
    let oriented: Vec<_> = s.ordering().edges().iter().copied().zip(weights).collect();
    let g = AbstractGkmGraph::from_oriented(s.graph().clone(), delta, &oriented)?;
    if let Some(v) = validate(&g).first() {
        return Err(SkeletonError::Axiom(v.to_string()));
    }
    let c1 = first_chern_map(&g)?;
    for (j, &(u, v)) in s.ordering().edges().iter().enumerate() {
        if c1[g.graph().dart_index(u, v).expect("edge")] != s.labels()[j] {
            return Err(SkeletonError::Axiom(format!("C₁ of edge {j} differs from its label")));
        }
    }
    Ok(g)
}

/// Weights `M·f_i` for an arbitrary integer matrix `M`, as an abstract graph (not validated).
pub fn apply_weight_matrix(
    s: &GkmSkeleton,
    fs: &FundamentalSystem,
    m: &[Vec<i64>],
) -> Result<AbstractGkmGraph, SkeletonError> {
    let mm = RationalMatrix::from_i64_rows(m);
    let weights = fs
        .columns()
        .iter()
        .map(|f| {
            let w = mm.mul_vec(f)?;
            w.iter()
                .map(to_i64)
                .collect::<Option<Vec<i64>>>()
                .ok_or_else(|| SkeletonError::Malformed("weight matrix gives non-integral weights".into()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let oriented: Vec<_> = s.ordering().edges().iter().copied().zip(weights).collect();
    Ok(AbstractGkmGraph::from_oriented(s.graph().clone(), m.len(), &oriented)?)
}

/// `A·Wᵀ = D·Wᵀ` for the weights of `g` along the skeleton's oriented edges.
pub fn supports(s: &GkmSkeleton, a: &StructureMatrix, g: &AbstractGkmGraph) -> bool {
    let w: Vec<&[i64]> = s.ordering().edges().iter().map(|&(u, v)| g.weight_of(u, v).expect("edge")).collect();
    a.rows().iter().enumerate().all(|(j, row)| {
        (0..g.d()).all(|c| {
            let lhs: Rational = row.iter().zip(&w).map(|(&x, wk)| int(x * wk[c])).sum();
            (lhs - int(s.labels()[j] * w[j][c])).is_zero()
        })
    })
}
