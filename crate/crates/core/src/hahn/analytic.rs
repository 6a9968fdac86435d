//! Operations given by infinite sums, evaluated above a working floor.

use num_traits::{One, Signed, Zero};

use super::HahnSeries;
use crate::rational::{as_natural, int, rational_pow, Rational};
use crate::{Error, Result};

/// Coefficient sequences for `Σ c_m ε^m`.
#[derive(Debug, Clone)]
enum Coefficients {
    /// `(-1)^m`
    Geometric,
    /// `C(e, m)`
    Binomial(Rational),
}

/// `Σ c_m ε^m` for `ε ≺ 1`, every partial power cut at `limit`. Exact when
/// the coefficients terminate or `ε` is exactly zero.
fn power_sum(eps: &HahnSeries, coefs: Coefficients, limit: &Rational) -> HahnSeries {
    let last = match &coefs {
        Coefficients::Binomial(e) => as_natural(e),
        Coefficients::Geometric => None,
    };

    let mut sum = HahnSeries::zero();
    let mut power = HahnSeries::one();
    let mut coef = Rational::one();
    let mut m = 0usize;
    loop {
        sum = &sum + &power.scale(&coef);
        if last == Some(m) {
            return sum;
        }
        power = if last.is_some() { &power * eps } else { power.mul_above(eps, limit) };
        if power.is_zero() {
            return sum;
        }
        m += 1;
        coef = match &coefs {
            Coefficients::Geometric => -coef,
            Coefficients::Binomial(e) => coef * (e - int(m as i64 - 1)) / int(m as i64),
        };
        if power.terms().is_empty() {
            // Only the floor is left: every further power lies below it.
            return &sum + &power;
        }
    }
}

impl HahnSeries {
    /// Splits `self = l·x^v·(1 + ε)` with `ε ≺ 1`.
    fn normalize(&self) -> Result<(Rational, Rational, HahnSeries)> {
        let (v, l) = self.leading().map(|(v, l)| (v.clone(), l.clone()))?;
        let eps = &self.shift(&-&v).scale(&l.recip()) - &HahnSeries::one();
        Ok((v, l, eps))
    }

    /// `1/self`, exact strictly above `max(work_floor, floor - 2v)`.
    pub fn field_inverse(&self, work_floor: &Rational) -> Result<HahnSeries> {
        let (v, l, eps) = self.normalize()?;
        let sum = power_sum(&eps, Coefficients::Geometric, &(work_floor + &v));
        Ok(sum.shift(&-&v).scale(&l.recip()))
    }

    /// `self^e = l^e·x^(e·v)·Σ C(e, m) ε^m`.
    ///
    /// Exact for natural `e` on exact input; otherwise kept above
    /// `max(work_floor, floor + (e-1)·v)`. Fractional `e` needs a positive
    /// leading coefficient with a rational `e`-th power.
    pub fn power(&self, e: &Rational, work_floor: &Rational) -> Result<HahnSeries> {
        if e.is_zero() {
            return Ok(HahnSeries::one());
        }
        let (v, l, eps) = self.normalize()?;
        if !e.is_integer() && l.is_negative() {
            return Err(Error::NotPositive);
        }
        let lead = rational_pow(&l, e).ok_or(Error::NonRepresentablePower)?;
        let shift = e * &v;
        let sum = power_sum(&eps, Coefficients::Binomial(e.clone()), &(work_floor - &shift));
        Ok(sum.shift(&shift).scale(&lead))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn s(text: &str) -> HahnSeries {
        text.parse().unwrap()
    }

    #[test]
    fn inverse_of_monomial_is_exact() {
        let inv = HahnSeries::x().field_inverse(&int(-10)).unwrap();
        assert_eq!(inv, HahnSeries::monomial(int(-1)));
        assert_eq!(s("3*x^(1/2)").field_inverse(&int(0)).unwrap(), s("1/3*x^(-1/2)"));
    }

    #[test]
    fn geometric_inverse() {
        let inv = s("1 + x^(-1)").field_inverse(&int(-3)).unwrap();
        assert_eq!(inv, s("1 - x^(-1) + x^(-2) + O(x^(-3))"));
        let product = &s("1 + x^(-1)") * &inv;
        assert_eq!(product, s("1 + O(x^(-3))"));
    }

    #[test]
    fn inverse_of_floored_input() {
        let a = s("x + 1 + O(x^(-2))");
        let inv = a.field_inverse(&int(-10)).unwrap();
        assert_eq!(inv.floor(), Some(&int(-4)));
        assert!((&a * &inv).agrees_above(&HahnSeries::one(), &int(-3)));
        assert_eq!(HahnSeries::zero().field_inverse(&int(0)), Err(Error::ZeroOrIndeterminate));
        assert_eq!(HahnSeries::unknown_below(int(0)).field_inverse(&int(-1)), Err(Error::Indeterminate));
    }

    #[test]
    fn powers() {
        assert_eq!(s("x + 1").power(&int(2), &int(-100)).unwrap(), s("x^(2) + 2*x + 1"));
        let root = s("x + x^(1/2)").power(&rat(1, 2), &int(-2)).unwrap();
        assert_eq!(root, s("x^(1/2) + 1/2 - 1/8*x^(-1/2) + 1/16*x^(-1) - 5/128*x^(-3/2) + O(x^(-2))"));
        assert_eq!(s("4*x").power(&rat(1, 2), &int(-5)).unwrap(), s("2*x^(1/2)"));
        assert_eq!(s("2*x").power(&rat(1, 2), &int(-5)), Err(Error::NonRepresentablePower));
        assert_eq!(s("-4*x").power(&rat(1, 2), &int(-5)), Err(Error::NotPositive));
        assert_eq!(s("-1*x + 1").power(&int(-1), &int(-3)).unwrap(), s("-1*x + 1").field_inverse(&int(-3)).unwrap());
    }

    #[test]
    fn power_then_square() {
        let a = s("x + x^(1/2)");
        let root = a.power(&rat(1, 2), &int(-4)).unwrap();
        assert!((&root * &root).agrees_above(&a, &int(-3)));
    }
}
