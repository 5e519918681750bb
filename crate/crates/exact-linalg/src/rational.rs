use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::LinalgError;

/// Reduced fraction with positive denominator; zero is stored as 0/1.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Integer value of `q`, or `None` when `q` has a nontrivial denominator.
pub fn to_bigint(q: &Rational) -> Option<BigInt> {
    is_integer(q).then(|| q.numer().clone())
}

pub fn to_i64(q: &Rational) -> Option<i64> {
    to_bigint(q).and_then(|n| n.to_i64())
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational, LinalgError> {
    let bad = || LinalgError::Malformed(s.to_string());
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_zero_and_sign() {
        let z = rat(0, -7);
        assert_eq!(z.numer(), &BigInt::from(0));
        assert_eq!(z.denom(), &BigInt::from(1));
        let q = rat(2, -4);
        assert_eq!(q.numer(), &BigInt::from(-1));
        assert_eq!(q.denom(), &BigInt::from(2));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("-5/4").unwrap(), rat(-5, 4));
        assert_eq!(parse_rational(" 3 ").unwrap(), int(3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn integrality() {
        assert_eq!(to_i64(&rat(6, 3)), Some(2));
        assert_eq!(to_i64(&rat(1, 2)), None);
    }
}
