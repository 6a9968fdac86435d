//! The group `T = {x + δ : δ ≺ x}` under composition.
//!
//! `a ∘ b` is `a` evaluated at `b`, computed with the Taylor formula
//! `Σ_p ∂^p(a)/p!·(b - x)^p`. Every infinite operation takes a working floor
//! and returns a series that is exact strictly above its recorded floor.

mod product;
mod scale;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::hahn::HahnSeries;
use crate::rational::{as_natural, int, Rational};
use crate::{Error, Result};

pub use product::{
    centralizer_check, chain_rule_check, chain_rule_holds, homogeneity_check, ordered_product_linear,
    ordered_product_t, product_chain_multiplier, product_via_operator_expansion,
};
pub use scale::{
    decompose, decompose_with_cap, recompose, scale_validity, Decomposition, Scale, ScaleFn, ScaleReport, SignStream,
    DEFAULT_ITERATION_CAP,
};

/// An element `x + δ` with `δ ≺ x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TElement {
    series: HahnSeries,
}

impl TElement {
    /// Checks that the coefficient of `x` is 1, no larger exponent occurs and
    /// the floor lies below 1.
    pub fn new(series: HahnSeries) -> Result<TElement> {
        let one = Rational::one();
        let bad = series.floor().is_some_and(|f| f >= &one)
            || series.terms().iter().any(|(e, _)| e > &one)
            || series.coeff(&one) != one;
        if bad {
            return Err(Error::NotInT(series.to_string()));
        }
        Ok(TElement { series })
    }

    /// The identity `x`.
    pub fn x() -> TElement {
        TElement { series: HahnSeries::x() }
    }

    /// `x + c·x^e`.
    pub fn shift_term(c: Rational, e: Rational) -> Result<TElement> {
        TElement::new(&HahnSeries::x() + &HahnSeries::term(c, e))
    }

    pub fn series(&self) -> &HahnSeries {
        &self.series
    }

    pub fn into_series(self) -> HahnSeries {
        self.series
    }

    /// `self - x`.
    pub fn delta(&self) -> HahnSeries {
        self.series.minus_x()
    }

    pub fn floor(&self) -> Option<&Rational> {
        self.series.floor()
    }

    pub fn with_floor(&self, f: &Rational) -> TElement {
        TElement::new(self.series.with_floor(f)).expect("cutting below x keeps the element in T")
    }

    /// Whether both agree above the coarser of their floors.
    pub fn agrees_with(&self, other: &TElement) -> bool {
        agree(&self.series, &other.series)
    }
}

impl fmt::Display for TElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.series.fmt(f)
    }
}

impl FromStr for TElement {
    type Err = Error;
    fn from_str(s: &str) -> Result<TElement> {
        TElement::new(s.parse()?)
    }
}

/// Agreement above the coarser floor; exact equality when both are exact.
pub fn agree(a: &HahnSeries, b: &HahnSeries) -> bool {
    match coarser_floor(a, b) {
        Some(f) => a.agrees_above(b, &f),
        None => a == b,
    }
}

fn coarser_floor(a: &HahnSeries, b: &HahnSeries) -> Option<Rational> {
    match (a.floor(), b.floor()) {
        (Some(x), Some(y)) => Some(x.max(y).clone()),
        (Some(x), None) | (None, Some(x)) => Some(x.clone()),
        (None, None) => None,
    }
}

fn raise(floor: &mut Option<Rational>, candidate: Rational) {
    if floor.as_ref().is_none_or(|f| &candidate > f) {
        *floor = Some(candidate);
    }
}

/// `a ∘ b = Σ_p ∂^p(a)/p!·δ^p` with `δ = b - x`.
///
/// Term `p` lies at or below `top(a) - p·(1 - top(δ))`, so only finitely many
/// reach above the floor `max(work_floor, floor(a), floor(δ) + top(a) - 1)`.
/// When `a` is an exact polynomial in `x` the sum is finite and the work
/// floor is not applied.
pub fn compose(a: &HahnSeries, b: &TElement, work_floor: &Rational) -> HahnSeries {
    let delta = b.delta();
    if delta.is_zero() {
        return a.clone();
    }
    let Some(top_a) = a.top().cloned() else {
        return HahnSeries::zero();
    };
    let polynomial = a.is_exact() && a.terms().iter().all(|(e, _)| as_natural(e).is_some());
    let mut floor = if polynomial { None } else { Some(work_floor.clone()) };
    if let Some(fa) = a.floor() {
        raise(&mut floor, fa.clone());
    }
    if let Some(fd) = delta.floor() {
        raise(&mut floor, fd + &top_a - int(1));
    }
    let top_delta = delta.top().expect("non-zero").clone();
    let gap = int(1) - &top_delta;
    let mul = |a: &HahnSeries, b: &HahnSeries, f: &Option<Rational>| match f {
        Some(f) => a.mul_above(b, f),
        None => a * b,
    };
    let power_floor = floor.as_ref().map(|f| f - &top_a);
    let mut out = HahnSeries::zero();
    let mut deriv = a.clone();
    let mut delta_power = HahnSeries::one();
    let mut p: i64 = 0;
    loop {
        out = &out + &mul(&deriv, &delta_power, &floor);
        p += 1;
        if floor.as_ref().is_some_and(|f| &top_a - &gap * int(p) <= *f) {
            break;
        }
        deriv = deriv.derivative().scale(&Rational::new(1.into(), p.into()));
        if deriv.is_zero() {
            break;
        }
        delta_power = mul(&delta_power, &delta, &power_floor);
    }
    match &floor {
        Some(f) => out.with_floor(f),
        None => out,
    }
}

/// `a ∘ b` inside `T`.
pub fn group_compose(a: &TElement, b: &TElement, work_floor: &Rational) -> Result<TElement> {
    TElement::new(compose(&a.series, b, work_floor))
}

/// The compositional inverse, from the fixed point of `g ↦ x - δ∘g`.
///
/// Each step fixes at least `gap = 1 - top(δ)` more of the exponent range:
/// after `k` steps the iterate is exact above `top(δ) - k·gap`, so step `k`
/// only needs that much precision. The iteration stops once the error lies
/// below `max(work_floor, floor(b))`. Reaching an exact fixed point returns
/// an exact result.
pub fn invert(b: &TElement, work_floor: &Rational) -> Result<TElement> {
    let delta = b.delta();
    if delta.is_zero() {
        return Ok(TElement::x());
    }
    let mut floor = work_floor.clone();
    if let Some(fb) = b.floor() {
        floor = floor.max(fb.clone());
    }
    let top_delta = delta.top().expect("non-zero").clone();
    let gap = int(1) - &top_delta;
    let steps = ((&top_delta - &floor) / &gap).ceil().to_integer();
    let steps: i64 = steps.try_into().unwrap_or(i64::MAX).max(0) + 1;
    let x = HahnSeries::x();
    let mut g = TElement::x();
    for k in 1..=steps {
        let step_floor = (&top_delta - &gap * int(k)).max(floor.clone());
        let next = TElement::new(&x - &compose(&delta, &g, &step_floor))?;
        if next == g {
            return Ok(g);
        }
        g = next;
    }
    Ok(g.with_floor(&floor))
}

/// The fractional iterate `a^[e] = Σ_p C(e, p)·u_p` with `u_0 = x` and
/// `u_{p+1} = u_p ∘ a - u_p`.
pub fn iterate(a: &TElement, e: &Rational, work_floor: &Rational) -> Result<TElement> {
    let delta = a.delta();
    if e.is_zero() || delta.is_zero() {
        return Ok(TElement::x());
    }
    if e.is_one() {
        return Ok(a.clone());
    }
    let mut floor = work_floor.clone();
    if let Some(fa) = a.floor() {
        floor = floor.max(fa.clone());
    }
    let gap = int(1) - delta.top().expect("non-zero");
    let last = as_natural(e);
    let mut coef = e.clone();
    let mut u = delta;
    let mut sum = &HahnSeries::x() + &u.scale(&coef);
    let mut p: i64 = 1;
    loop {
        if last == Some(p as usize) {
            break;
        }
        let Some(top_u) = u.top() else { break };
        if top_u - &gap <= floor {
            sum = sum.with_floor(&floor);
            break;
        }
        u = &compose(&u, a, &floor) - &u;
        p += 1;
        coef = coef * (e - int(p - 1)) / int(p);
        sum = &sum + &u.scale(&coef);
    }
    TElement::new(sum)
}

/// Leading term `c·x^e` of `a - x`, or zero for `a = x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GrowthOrder {
    Zero,
    Term { coef: Rational, exp: Rational },
}

impl GrowthOrder {
    pub fn as_series(&self) -> HahnSeries {
        match self {
            GrowthOrder::Zero => HahnSeries::zero(),
            GrowthOrder::Term { coef, exp } => HahnSeries::term(coef.clone(), exp.clone()),
        }
    }

    pub fn scaled(&self, c: &Rational) -> GrowthOrder {
        match self {
            GrowthOrder::Term { coef, exp } if !c.is_zero() => GrowthOrder::Term { coef: coef * c, exp: exp.clone() },
            _ => GrowthOrder::Zero,
        }
    }
}

impl fmt::Display for GrowthOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.as_series().fmt(f)
    }
}

/// `go(a)`; errors when the floor hides whether `a - x` vanishes.
pub fn growth_order(a: &TElement) -> Result<GrowthOrder> {
    match a.delta().leading() {
        Ok((e, c)) => Ok(GrowthOrder::Term { coef: c.clone(), exp: e.clone() }),
        Err(Error::ZeroOrIndeterminate) => Ok(GrowthOrder::Zero),
        Err(e) => Err(e),
    }
}
