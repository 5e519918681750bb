//! Polynomials in ℤ[x₁,…,x_d] with the few operations localization needs: elementary
//! symmetric functions of linear forms, exact division by a linear form, and evaluation.
//!
//! The variable count is part of each value; mixing counts is a contract violation and
//! panics at the operation entry.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use exact_linalg::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A nonzero linear form `Σ cᵢ xᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm(Vec<i64>);

impl LinearForm {
    pub fn new(coeffs: Vec<i64>) -> Option<Self> {
        coeffs.iter().any(|&c| c != 0).then_some(Self(coeffs))
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    /// gcd of the coefficients.
    pub fn content(&self) -> i64 {
        self.0.iter().fold(0i64, |g, &c| g.gcd(&c))
    }
}

/// Sparse polynomial: exponent vector ↦ nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl IntPolynomial {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c.into());
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, BigInt::one());
        p
    }

    pub fn from_linear(l: &LinearForm) -> Self {
        let d = l.nvars();
        let mut p = Self::zero(d);
        for (i, &c) in l.coeffs().iter().enumerate() {
            let mut e = vec![0; d];
            e[i] = 1;
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[u32]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn homogeneous_component(&self, k: u32) -> Self {
        let terms = self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == k).map(|(e, c)| (e.clone(), c.clone()));
        Self { nvars: self.nvars, terms: terms.collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    /// Exact value at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars, "evaluation point dimension");
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = Rational::from_integer(c.clone());
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            total += t;
        }
        total
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "polynomials in different variable counts");
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.check(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)] // exponents add under multiplication
impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.check(rhs);
        let mut out = IntPolynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
                .collect();
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            let body = match (mono.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => mono.join("*"),
                (false, false) => format!("{mag}*{}", mono.join("*")),
            };
            write!(f, "{}{sign}{body}", if first { "" } else { " " })?;
            first = false;
        }
        Ok(())
    }
}

/// σ_k(α₁,…,α_n): the k-th elementary symmetric polynomial of the given linear forms.
pub fn sym_poly_in_weights(weights: &[LinearForm], k: usize) -> IntPolynomial {
    let d = weights.first().map_or(0, LinearForm::nvars);
    assert!(weights.iter().all(|w| w.nvars() == d), "weights in different variable counts");
    assert!(k <= weights.len(), "degree {k} exceeds {} weights", weights.len());
    // e[j] after processing a prefix holds σ_j of that prefix.
    let mut e = vec![IntPolynomial::zero(d); k + 1];
    e[0] = IntPolynomial::one(d);
    for w in weights {
        let l = IntPolynomial::from_linear(w);
        for j in (1..=k).rev() {
            e[j] = &e[j] + &(&e[j - 1] * &l);
        }
    }
    e.swap_remove(k)
}

/// `q` with `p = ℓ·q` and `q ∈ ℤ[x]`, if it exists.
///
/// Divides in the last variable `x_m` with nonzero coefficient over the fraction field,
/// then requires a zero remainder and an integral quotient.
pub fn divisible_by_linear(p: &IntPolynomial, l: &LinearForm) -> Option<IntPolynomial> {
    assert_eq!(p.nvars(), l.nvars(), "polynomial and linear form in different variable counts");
    let d = p.nvars();
    let m = l.coeffs().iter().rposition(|&c| c != 0).expect("nonzero linear form");
    let cm = Rational::from_integer(BigInt::from(l.coeffs()[m]));
    let mut rem: BTreeMap<Vec<u32>, Rational> =
        p.terms.iter().map(|(e, c)| (e.clone(), Rational::from_integer(c.clone()))).collect();
    let mut quot: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    // Repeatedly cancel the term with the highest power of x_m.
    while let Some((e, c)) =
        rem.iter().filter(|(e, _)| e[m] > 0).max_by_key(|(e, _)| e[m]).map(|(e, c)| (e.clone(), c.clone()))
    {
        let mut qe = e;
        qe[m] -= 1;
        let t = c / &cm;
        for (i, &ci) in l.coeffs().iter().enumerate() {
            if ci == 0 {
                continue;
            }
            let mut ee = qe.clone();
            ee[i] += 1;
            let slot = rem.entry(ee.clone()).or_insert_with(Rational::zero);
            *slot -= &t * Rational::from_integer(BigInt::from(ci));
            if slot.is_zero() {
                rem.remove(&ee);
            }
        }
        let slot = quot.entry(qe.clone()).or_insert_with(Rational::zero);
        *slot += t;
        if slot.is_zero() {
            quot.remove(&qe);
        }
    }
    if !rem.is_empty() {
        return None;
    }
    let mut q = IntPolynomial::zero(d);
    for (e, c) in quot {
        q.add_term(e, exact_linalg::to_bigint(&c)?);
    }
    Some(q)
}

/// No integer other than ±1 divides two distinct weights: contents are pairwise coprime.
pub fn pairwise_coprime(weights: &[LinearForm]) -> bool {
    let contents: Vec<i64> = weights.iter().map(LinearForm::content).collect();
    (0..contents.len()).all(|i| (i + 1..contents.len()).all(|j| contents[i].gcd(&contents[j]) == 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_linalg::int;

    fn lf(c: &[i64]) -> LinearForm {
        LinearForm::new(c.to_vec()).unwrap()
    }

    fn x(i: usize) -> IntPolynomial {
        IntPolynomial::var(2, i)
    }

    #[test]
    fn sigma_one_of_appendix_vertex() {
        let w = [lf(&[1, 0]), lf(&[0, 2]), lf(&[3, 3])];
        let s1 = sym_poly_in_weights(&w, 1);
        assert_eq!(s1, &x(0).scale(&4.into()) + &x(1).scale(&5.into()));
        assert_eq!(sym_poly_in_weights(&w, 0), IntPolynomial::one(2));
        assert_eq!(sym_poly_in_weights(&w, 3).evaluate(&[int(1), int(1)]), int(12));
    }

    #[test]
    fn sigma_two_of_coordinates() {
        let w = [lf(&[1, 0]), lf(&[0, 1])];
        assert_eq!(sym_poly_in_weights(&w, 2), &x(0) * &x(1));
    }

    #[test]
    fn division_examples() {
        let p = &(&x(0) * &x(0)) - &(&x(1) * &x(1));
        assert_eq!(divisible_by_linear(&p, &lf(&[1, -1])), Some(&x(0) + &x(1)));
        assert_eq!(divisible_by_linear(&x(0), &lf(&[2, 0])), None);
        let a = IntPolynomial::from_linear(&lf(&[3, 1]));
        let b = IntPolynomial::from_linear(&lf(&[1, -2]));
        assert_eq!(divisible_by_linear(&(&a * &b), &lf(&[3, 1])), Some(b.clone()));
        assert_eq!(divisible_by_linear(&(&a + &IntPolynomial::one(2)), &lf(&[3, 1])), None);
        assert_eq!(divisible_by_linear(&IntPolynomial::zero(2), &lf(&[3, 1])), Some(IntPolynomial::zero(2)));
    }

    #[test]
    fn coprimality() {
        assert!(pairwise_coprime(&[lf(&[1, 0]), lf(&[0, 2]), lf(&[3, 3])]));
        assert!(!pairwise_coprime(&[lf(&[2, 0]), lf(&[0, 2])]));
        assert!(pairwise_coprime(&[lf(&[-2, -3]), lf(&[-3, -1]), lf(&[-3, -3])]));
    }

    #[test]
    fn evaluation() {
        assert_eq!(IntPolynomial::one(2).evaluate(&[int(5), int(7)]), int(1));
        assert_eq!((&x(0) + &x(1)).evaluate(&[int(1), int(1)]), int(2));
    }

    #[test]
    fn display_is_readable() {
        let p = &(&x(0).scale(&4.into()) - &x(1)) + &IntPolynomial::one(2);
        assert_eq!(p.to_string(), "4*x1 -x2 +1");
        assert_eq!(IntPolynomial::zero(2).to_string(), "0");
    }

    #[test]
    #[should_panic(expected = "different variable counts")]
    fn mixing_dimensions_panics() {
        let _ = &IntPolynomial::var(2, 0) + &IntPolynomial::var(3, 0);
    }
}
