//! Convex polytopes given by their vertices, with facets found by exhaustive search over
//! vertex subsets. Intended for small dimensions and vertex counts.

use std::collections::BTreeSet;

use exact_linalg::{int, invert, kernel_basis, parse_rational, to_i64, Rational, RationalMatrix};
use graph_core::DartGraph;
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Deserialize;
use serde_json::Value;

use crate::validate::validate;
use crate::{AbstractGkmGraph, GkmError};

/// Vertex pairs of a polytope skeleton.
pub type EdgeList = Vec<(usize, usize)>;

fn err(msg: impl Into<String>) -> GkmError {
    GkmError::Polytope(msg.into())
}

/// A facet `{x : ⟨normal, x⟩ = level}` with `⟨normal, x⟩ ≤ level` on the polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    /// Primitive outward normal.
    pub normal: Vec<i64>,
    pub level: Rational,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Vec<Rational>>,
    facets: Vec<Facet>,
}

/// The primitive integer vector on the ray through a nonzero rational vector.
pub fn primitive_direction(v: &[Rational]) -> Result<Vec<i64>, GkmError> {
    let lcm = v.iter().fold(BigInt::from(1), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return Err(err("zero direction"));
    }
    ints.iter().map(|x| to_i64(&Rational::from_integer(x / &g)).ok_or_else(|| err("coordinate overflow"))).collect()
}

fn dot(a: &[i64], x: &[Rational]) -> Rational {
    a.iter().zip(x).map(|(&c, y)| y * BigInt::from(c)).sum()
}

fn unimodular(rows: &[Vec<i64>]) -> bool {
    let m = RationalMatrix::from_i64_rows(rows);
    match invert(&m) {
        Ok(inv) => (0..rows.len()).all(|r| inv.row(r).iter().all(|x| x.is_integer())),
        Err(_) => false,
    }
}

impl Polytope {
    /// The convex hull of `vertices`; every point must be a vertex and the hull full-dimensional.
    pub fn new(dim: usize, vertices: Vec<Vec<Rational>>) -> Result<Self, GkmError> {
        if dim == 0 {
            return Err(err("dimension must be positive"));
        }
        if let Some(v) = vertices.iter().find(|v| v.len() != dim) {
            return Err(err(format!("vertex {v:?} does not have {dim} coordinates")));
        }
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(err("repeated vertex"));
        }
        let facets = facets_of(dim, &vertices);
        for i in 0..vertices.len() {
            let normals: Vec<Vec<Rational>> = facets
                .iter()
                .filter(|f| f.vertices.contains(&i))
                .map(|f| f.normal.iter().map(|&c| int(c)).collect())
                .collect();
            if exact_linalg::rank_of_vectors(&normals) < dim {
                return Err(err(format!("point {i} is not a vertex of a full-dimensional hull")));
            }
        }
        Ok(Self { dim, vertices, facets })
    }

    /// `{"dim": d, "vertices": [["p/q", ...], ...]}`; plain JSON numbers are accepted too.
    pub fn parse_json(text: &str) -> Result<(Self, Option<EdgeList>), GkmError> {
        #[derive(Deserialize)]
        struct Raw {
            dim: usize,
            vertices: Vec<Vec<Value>>,
            #[serde(default)]
            edges: Option<Vec<[usize; 2]>>,
        }
        let raw: Raw = serde_json::from_str(text).map_err(|e| GkmError::Malformed(e.to_string()))?;
        let coord = |v: &Value| -> Result<Rational, GkmError> {
            let s = match v {
                Value::String(s) => s.clone(),
                Value::Number(n) if n.is_i64() => n.to_string(),
                other => return Err(GkmError::Malformed(format!("coordinate {other} is not a rational"))),
            };
            Ok(parse_rational(&s)?)
        };
        let vertices = raw
            .vertices
            .iter()
            .map(|v| v.iter().map(coord).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let edges = raw.edges.map(|e| e.into_iter().map(|[a, b]| (a, b)).collect());
        Ok((Self::new(raw.dim, vertices)?, edges))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Vertex pairs spanning an edge: the smallest face containing both has no other vertex.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut common: BTreeSet<usize> = (0..n).collect();
                for f in self.facets.iter().filter(|f| f.vertices.contains(&i) && f.vertices.contains(&j)) {
                    common.retain(|v| f.vertices.contains(v));
                }
                if common.len() == 2 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Primitive direction from vertex `p` towards vertex `q`.
    pub fn direction(&self, p: usize, q: usize) -> Result<Vec<i64>, GkmError> {
        let diff: Vec<Rational> = self.vertices[q].iter().zip(&self.vertices[p]).map(|(a, b)| a - b).collect();
        primitive_direction(&diff)
    }

    /// Every vertex meets exactly `d` edges whose primitive directions form a basis of ℤᵈ.
    pub fn is_smooth(&self) -> bool {
        let edges = self.edges();
        (0..self.vertices.len()).all(|p| {
            let dirs: Result<Vec<Vec<i64>>, _> = edges
                .iter()
                .filter_map(|&(a, b)| match (a == p, b == p) {
                    (true, _) => Some(self.direction(p, b)),
                    (_, true) => Some(self.direction(p, a)),
                    _ => None,
                })
                .collect();
            matches!(dirs, Ok(d) if d.len() == self.dim && unimodular(&d))
        })
    }

    /// Integral vertices and every facet at level 1 for its primitive outward normal.
    pub fn is_reflexive(&self) -> bool {
        self.vertices.iter().flatten().all(|x| x.is_integer()) && self.facets.iter().all(|f| f.level == int(1))
    }
}

fn facets_of(dim: usize, vertices: &[Vec<Rational>]) -> Vec<Facet> {
    let mut out: Vec<Facet> = Vec::new();
    for subset in (0..vertices.len()).combinations(dim) {
        let base = &vertices[subset[0]];
        let rows: Vec<Vec<Rational>> =
            subset[1..].iter().map(|&s| vertices[s].iter().zip(base).map(|(a, b)| a - b).collect()).collect();
        let Ok(m) = RationalMatrix::from_rows(rows, dim) else { continue };
        let kernel = kernel_basis(&m);
        if kernel.len() != 1 {
            continue;
        }
        let Ok(mut normal) = primitive_direction(&kernel[0]) else { continue };
        let mut level = dot(&normal, base);
        let sides: Vec<Rational> = vertices.iter().map(|v| dot(&normal, v) - &level).collect();
        if sides.iter().all(|s| !s.is_positive()) {
        } else if sides.iter().all(|s| !s.is_negative()) {
            normal.iter_mut().for_each(|c| *c = -*c);
            level = -level;
        } else {
            continue;
        }
        if out.iter().any(|f| f.normal == normal) {
            continue;
        }
        let on: Vec<usize> = (0..vertices.len()).filter(|&i| sides[i].is_zero()).collect();
        out.push(Facet { normal, level, vertices: on });
    }
    out.sort_by(|a, b| a.normal.cmp(&b.normal));
    out
}

/// The GKM graph of a smooth polytope: `w(p, q)` is the primitive vector along `q − p`.
///
/// When `edges` is given it must match the edges of the hull.
pub fn graph_from_polytope(p: &Polytope, edges: Option<&[(usize, usize)]>) -> Result<AbstractGkmGraph, GkmError> {
    let derived = p.edges();
    if let Some(given) = edges {
        let norm = |e: &[(usize, usize)]| e.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect::<BTreeSet<_>>();
        if norm(given) != norm(&derived) {
            return Err(err("given edges differ from the edges of the hull"));
        }
    }
    if !p.is_smooth() {
        return Err(err("polytope is not smooth"));
    }
    let graph = DartGraph::new(p.vertices.len(), &derived)?;
    let oriented =
        derived.iter().map(|&(a, b)| Ok(((a, b), p.direction(a, b)?))).collect::<Result<Vec<_>, GkmError>>()?;
    let g = AbstractGkmGraph::from_oriented(graph, p.dim, &oriented)?;
    if let Some(v) = validate(&g).first() {
        return Err(err(format!("graph is not an abstract GKM graph: {v}")));
    }
    Ok(g)
}
