//! Exact rational helpers shared by both series families.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p` or `p/q` (optionally signed). Rejects a zero denominator.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// The generalised binomial coefficients `C(c, 0), C(c, 1), ..., C(c, n)`.
pub fn binomials(c: &Rational, n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    let mut current = Rational::one();
    out.push(current.clone());
    for m in 1..=n {
        current = current * (c - int(m as i64 - 1)) / int(m as i64);
        out.push(current.clone());
    }
    out
}

pub fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * int(k as i64))
}

/// Returns `Some(n)` when `r` is a non-negative integer that fits a `usize`.
pub fn as_natural(r: &Rational) -> Option<usize> {
    if r.is_integer() && !r.is_negative() {
        r.to_integer().to_usize()
    } else {
        None
    }
}

fn exact_nth_root(n: &BigInt, q: u32) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let root = n.nth_root(q);
    (num_traits::pow(root.clone(), q as usize) == *n).then_some(root)
}

/// `base^exponent` when it is a rational number: integer exponents always,
/// fractional exponents `p/q` only when `base > 0` is a perfect `q`-th power.
pub fn rational_pow(base: &Rational, exponent: &Rational) -> Option<Rational> {
    if exponent.is_zero() {
        return Some(Rational::one());
    }
    if base.is_zero() {
        return exponent.is_positive().then(Rational::zero);
    }
    let q = exponent.denom().to_u32()?;
    let root = if q == 1 {
        base.clone()
    } else {
        if base.is_negative() {
            return None;
        }
        Rational::new(exact_nth_root(base.numer(), q)?, exact_nth_root(base.denom(), q)?)
    };
    let p = exponent.numer().to_i32()?;
    Some(if p >= 0 {
        num_traits::pow(root, p as usize)
    } else {
        num_traits::pow(root.recip(), p.unsigned_abs() as usize)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_of_half() {
        let b = binomials(&rat(1, 2), 3);
        assert_eq!(b, vec![int(1), rat(1, 2), rat(-1, 8), rat(1, 16)]);
    }

    #[test]
    fn binomials_terminate_for_naturals() {
        let b = binomials(&int(2), 4);
        assert_eq!(b, vec![int(1), int(2), int(1), int(0), int(0)]);
    }

    #[test]
    fn powers() {
        assert_eq!(rational_pow(&rat(9, 4), &rat(1, 2)), Some(rat(3, 2)));
        assert_eq!(rational_pow(&rat(9, 4), &rat(-3, 2)), Some(rat(8, 27)));
        assert_eq!(rational_pow(&int(2), &rat(1, 2)), None);
        assert_eq!(rational_pow(&int(-8), &rat(1, 3)), None);
        assert_eq!(rational_pow(&int(-2), &int(3)), Some(int(-8)));
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("-3/6"), Some(rat(-1, 2)));
        assert_eq!(parse_rational("7"), Some(int(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }
}
