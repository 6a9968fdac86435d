//! Finitely supported series `Σ c_e x^e` with rational exponents and
//! coefficients, optionally known only above a precision floor.
//!
//! A series with floor `f` stands for every true series that agrees with the
//! stored terms at all exponents `> f`. Exponents grow towards infinity:
//! `x ≻ 1 ≻ x^(-1)`, and the dominant term is the one with the largest
//! exponent.

mod analytic;
mod text;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{int, parse_rational, Rational};
use crate::{Error, Result};

pub use text::parse_series;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HahnSeries {
    /// `(exponent, coefficient)`, exponents strictly descending, no zero
    /// coefficients, every exponent above `floor`.
    terms: Vec<(Rational, Rational)>,
    floor: Option<Rational>,
}

/// Comparison of dominant exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dominance {
    /// `a ≺ b`
    Below,
    /// `a ≍ b`
    Same,
    /// `a ≻ b`
    Above,
}

impl fmt::Display for Dominance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dominance::Below => "≺",
            Dominance::Same => "≍",
            Dominance::Above => "≻",
        })
    }
}

fn floor_max(a: Option<&Rational>, b: Option<&Rational>) -> Option<Rational> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.max(b).clone()),
        (Some(a), None) | (None, Some(a)) => Some(a.clone()),
        (None, None) => None,
    }
}

impl HahnSeries {
    pub fn zero() -> HahnSeries {
        HahnSeries { terms: Vec::new(), floor: None }
    }

    pub fn one() -> HahnSeries {
        HahnSeries::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> HahnSeries {
        HahnSeries::term(c, Rational::zero())
    }

    /// `x^e`
    pub fn monomial(e: Rational) -> HahnSeries {
        HahnSeries::term(Rational::one(), e)
    }

    /// `c·x^e`
    pub fn term(c: Rational, e: Rational) -> HahnSeries {
        if c.is_zero() {
            HahnSeries::zero()
        } else {
            HahnSeries { terms: vec![(e, c)], floor: None }
        }
    }

    /// The series `x`.
    pub fn x() -> HahnSeries {
        HahnSeries::monomial(Rational::one())
    }

    /// Sums repeated exponents, drops zeros and everything at or below
    /// `floor`.
    pub fn from_terms(terms: impl IntoIterator<Item = (Rational, Rational)>, floor: Option<Rational>) -> HahnSeries {
        let mut map: BTreeMap<Rational, Rational> = BTreeMap::new();
        for (e, c) in terms {
            if floor.as_ref().is_some_and(|f| &e <= f) {
                continue;
            }
            *map.entry(e).or_insert_with(Rational::zero) += c;
        }
        let terms = map.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        HahnSeries { terms, floor }
    }

    /// An unknown series: nothing is known above `floor`'s complement.
    pub fn unknown_below(floor: Rational) -> HahnSeries {
        HahnSeries { terms: Vec::new(), floor: Some(floor) }
    }

    /// Terms in descending exponent order.
    pub fn terms(&self) -> &[(Rational, Rational)] {
        &self.terms
    }

    pub fn floor(&self) -> Option<&Rational> {
        self.floor.as_ref()
    }

    pub fn is_exact(&self) -> bool {
        self.floor.is_none()
    }

    /// Exactly zero; a floored series with no terms is not.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.floor.is_none()
    }

    /// Coefficient at `e`; meaningful only above the floor.
    pub fn coeff(&self, e: &Rational) -> Rational {
        self.terms.iter().find(|(x, _)| x == e).map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    /// The dominant term `(exponent, coefficient)`.
    pub fn leading(&self) -> Result<(&Rational, &Rational)> {
        match self.terms.first() {
            Some((e, c)) => Ok((e, c)),
            None if self.floor.is_some() => Err(Error::Indeterminate),
            None => Err(Error::ZeroOrIndeterminate),
        }
    }

    /// The dominant exponent.
    pub fn valuation(&self) -> Result<Rational> {
        self.leading().map(|(e, _)| e.clone())
    }

    pub fn leading_coefficient(&self) -> Result<Rational> {
        self.leading().map(|(_, c)| c.clone())
    }

    /// Largest exponent that can carry a non-zero coefficient in some
    /// compatible true series; `None` for the exact zero.
    pub fn top(&self) -> Option<&Rational> {
        self.terms.first().map(|(e, _)| e).or(self.floor.as_ref())
    }

    pub fn is_positive(&self) -> Result<bool> {
        Ok(self.leading()?.1.is_positive())
    }

    pub fn dominance(&self, other: &HahnSeries) -> Result<Dominance> {
        let (a, b) = (self.valuation()?, other.valuation()?);
        Ok(match a.cmp(&b) {
            Ordering::Less => Dominance::Below,
            Ordering::Equal => Dominance::Same,
            Ordering::Greater => Dominance::Above,
        })
    }

    /// Sign comparison `self < other` in the ordered field.
    pub fn compare(&self, other: &HahnSeries) -> Result<Ordering> {
        let diff = self - other;
        if diff.is_zero() {
            return Ok(Ordering::Equal);
        }
        Ok(if diff.is_positive()? { Ordering::Greater } else { Ordering::Less })
    }

    /// Drops every term at or below `f` and records the floor.
    pub fn with_floor(&self, f: &Rational) -> HahnSeries {
        let floor = floor_max(self.floor.as_ref(), Some(f));
        let cut = floor.clone().expect("floor set");
        HahnSeries { terms: self.terms.iter().filter(|(e, _)| *e > cut).cloned().collect(), floor }
    }

    /// Same terms, floor removed: the series is declared exact.
    pub fn into_exact(self) -> HahnSeries {
        HahnSeries { terms: self.terms, floor: None }
    }

    pub fn scale(&self, c: &Rational) -> HahnSeries {
        if c.is_zero() {
            return HahnSeries::zero();
        }
        HahnSeries { terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(), floor: self.floor.clone() }
    }

    /// Multiplication by `x^s`.
    pub fn shift(&self, s: &Rational) -> HahnSeries {
        HahnSeries {
            terms: self.terms.iter().map(|(e, c)| (e + s, c.clone())).collect(),
            floor: self.floor.as_ref().map(|f| f + s),
        }
    }

    /// `Σ e·c·x^(e-1)`; the floor drops by one.
    pub fn derivative(&self) -> HahnSeries {
        HahnSeries {
            terms: self.terms.iter().filter(|(e, _)| !e.is_zero()).map(|(e, c)| (e - int(1), e * c)).collect(),
            floor: self.floor.as_ref().map(|f| f - int(1)),
        }
    }

    /// Whether both agree on every exponent strictly above `f`.
    pub fn agrees_above(&self, other: &HahnSeries, f: &Rational) -> bool {
        let a = self.terms.iter().take_while(|(e, _)| e > f);
        let b = other.terms.iter().take_while(|(e, _)| e > f);
        a.eq(b)
    }

    /// `self` with precision up to its own floor, `other` the same quantity
    /// at a finer floor: true iff `other` is at least as precise and both
    /// agree above `self`'s floor.
    pub fn refines_to(&self, other: &HahnSeries) -> bool {
        match (&self.floor, &other.floor) {
            (None, None) => self == other,
            (None, Some(_)) => false,
            (Some(f), g) => g.as_ref().is_none_or(|g| g <= f) && self.agrees_above(other, f),
        }
    }

    /// Remainder `self - x`, used throughout the composition group.
    pub fn minus_x(&self) -> HahnSeries {
        self - &HahnSeries::x()
    }

    /// `(self·other).with_floor(f)`, skipping products at or below `f`.
    /// An exact zero factor gives an exact zero.
    pub fn mul_above(&self, other: &HahnSeries, f: &Rational) -> HahnSeries {
        if self.is_zero() || other.is_zero() {
            return HahnSeries::zero();
        }
        self.mul_impl(other, Some(f)).with_floor(f)
    }

    fn mul_impl(&self, other: &HahnSeries, limit: Option<&Rational>) -> HahnSeries {
        if self.is_zero() || other.is_zero() {
            return HahnSeries::zero();
        }
        let mut floor: Option<Rational> = limit.cloned();
        if let Some(fb) = &other.floor {
            floor = floor_max(floor.as_ref(), Some(&(fb + self.top().expect("non-zero"))));
        }
        if let Some(fa) = &self.floor {
            floor = floor_max(floor.as_ref(), Some(&(fa + other.top().expect("non-zero"))));
        }
        let mut map: BTreeMap<Rational, Rational> = BTreeMap::new();
        // Both term lists descend, so each inner loop stops at the floor.
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea + eb;
                if floor.as_ref().is_some_and(|f| &e <= f) {
                    break;
                }
                *map.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        HahnSeries { terms: map.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect(), floor }
    }

    fn add_impl(&self, other: &HahnSeries) -> HahnSeries {
        let floor = floor_max(self.floor.as_ref(), other.floor.as_ref());
        HahnSeries::from_terms(self.terms.iter().chain(&other.terms).cloned(), floor)
    }

    /// `self^n` for natural `n` by repeated squaring.
    pub fn powi(&self, mut n: u32) -> HahnSeries {
        let mut base = self.clone();
        let mut acc = HahnSeries::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Add for &HahnSeries {
    type Output = HahnSeries;
    fn add(self, rhs: &HahnSeries) -> HahnSeries {
        self.add_impl(rhs)
    }
}

impl Sub for &HahnSeries {
    type Output = HahnSeries;
    fn sub(self, rhs: &HahnSeries) -> HahnSeries {
        self.add_impl(&-rhs)
    }
}

impl Mul for &HahnSeries {
    type Output = HahnSeries;
    fn mul(self, rhs: &HahnSeries) -> HahnSeries {
        self.mul_impl(rhs, None)
    }
}

impl Neg for &HahnSeries {
    type Output = HahnSeries;
    fn neg(self) -> HahnSeries {
        HahnSeries { terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(), floor: self.floor.clone() }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for HahnSeries {
            type Output = HahnSeries;
            fn $method(self, rhs: HahnSeries) -> HahnSeries {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for HahnSeries {
    type Output = HahnSeries;
    fn neg(self) -> HahnSeries {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exp: String,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct JsonSeries {
    terms: Vec<JsonTerm>,
    floor: Option<String>,
}

impl Serialize for HahnSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonSeries {
            terms: self.terms.iter().map(|(e, c)| JsonTerm { exp: e.to_string(), coef: c.to_string() }).collect(),
            floor: self.floor.as_ref().map(|f| f.to_string()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HahnSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<HahnSeries, D::Error> {
        use serde::de::Error as _;
        let raw = JsonSeries::deserialize(d)?;
        let parse = |s: &str| parse_rational(s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}")));
        let floor = raw.floor.as_deref().map(parse).transpose()?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in &raw.terms {
            terms.push((parse(&t.exp)?, parse(&t.coef)?));
        }
        Ok(HahnSeries::from_terms(terms, floor))
    }
}
