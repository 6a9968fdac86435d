//! Scales on `T` and the decomposition of an element into scale factors.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::order::{Sign, TreeOrder};
use crate::rational::{parse_rational, Rational};
use crate::{Error, Result};

use super::{compose, growth_order, invert, iterate, ordered_product_t, GrowthOrder, TElement};

pub const DEFAULT_ITERATION_CAP: usize = 10_000;

/// A family `S(e, c)` of elements of `T` indexed by exponents `e < 1` and
/// coefficients `c`.
pub trait ScaleFn {
    fn name(&self) -> String;
    fn eval(&self, e: &Rational, c: &Rational, work_floor: &Rational) -> Result<TElement>;

    /// `S(e, c)^[-1]`.
    fn eval_inverse(&self, e: &Rational, c: &Rational, work_floor: &Rational) -> Result<TElement> {
        invert(&self.eval(e, c, work_floor)?, work_floor)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Scale {
    /// `S0(e, c) = x + c·x^e`
    S0,
    /// `S1(e, c) = (x + x^e)^[c]`
    S1,
}

impl ScaleFn for Scale {
    fn name(&self) -> String {
        self.to_string()
    }

    fn eval(&self, e: &Rational, c: &Rational, work_floor: &Rational) -> Result<TElement> {
        if e >= &Rational::one() {
            return Err(Error::ExponentTooLarge(e.to_string()));
        }
        if c.is_zero() {
            return Ok(TElement::x());
        }
        match self {
            Scale::S0 => TElement::shift_term(c.clone(), e.clone()),
            Scale::S1 => iterate(&TElement::shift_term(Rational::one(), e.clone())?, c, work_floor),
        }
    }

    fn eval_inverse(&self, e: &Rational, c: &Rational, work_floor: &Rational) -> Result<TElement> {
        match self {
            Scale::S0 => invert(&self.eval(e, c, work_floor)?, work_floor),
            Scale::S1 => self.eval(e, &-c, work_floor),
        }
    }
}

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scale::S0 => "S0",
            Scale::S1 => "S1",
        })
    }
}

impl FromStr for Scale {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Scale, String> {
        match s {
            "S0" | "s0" => Ok(Scale::S0),
            "S1" | "s1" => Ok(Scale::S1),
            other => Err(format!("unknown scale {other:?}; expected S0 or S1")),
        }
    }
}

/// Outcome of sampling the scale conditions.
#[derive(Debug, Clone, Default, Serialize)]
pub struct ScaleReport {
    /// `(description, passed)` per sampled condition.
    pub checks: Vec<(String, bool)>,
}

impl ScaleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    fn record(&mut self, what: String, ok: bool) {
        self.checks.push((what, ok));
    }
}

/// Checks `S(e, 0) = x` and `go(S(e, c)) = c·x^e` on every sample, and that
/// over strictly decreasing `e` the leading exponents of `S(e, c) - x`
/// strictly decrease.
pub fn scale_validity(scale: &dyn ScaleFn, samples: &[(Rational, Rational)], work_floor: &Rational) -> ScaleReport {
    let mut report = ScaleReport::default();
    let mut leading: Vec<(Rational, Option<Rational>)> = Vec::new();
    for (e, c) in samples {
        let zero = scale.eval(e, &Rational::zero(), work_floor);
        report.record(format!("S({e}, 0) = x"), zero.is_ok_and(|s| s == TElement::x()));
        let value = scale.eval(e, c, work_floor);
        let go = value.as_ref().ok().and_then(|s| growth_order(s).ok());
        let expected =
            if c.is_zero() { GrowthOrder::Zero } else { GrowthOrder::Term { coef: c.clone(), exp: e.clone() } };
        report.record(format!("go(S({e}, {c})) = {}", expected), go.as_ref() == Some(&expected));
        if !c.is_zero() {
            let exp = match go {
                Some(GrowthOrder::Term { exp, .. }) => Some(exp),
                _ => None,
            };
            leading.push((e.clone(), exp));
        }
    }
    leading.sort_by(|a, b| b.0.cmp(&a.0));
    leading.dedup_by(|a, b| a.0 == b.0);
    let decreasing = leading.windows(2).all(|w| match (&w[0].1, &w[1].1) {
        (Some(a), Some(b)) => a > b,
        _ => false,
    });
    report.record("leading exponents decrease with e".into(), decreasing);
    report
}

/// The signs used at successive peeling steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignStream {
    /// Always `+1`: peel on the left.
    Left,
    /// Always `-1`: peel on the right.
    Right,
    /// `+1, -1, +1, ...`
    Alternating,
    /// The given signs, repeated cyclically.
    Explicit(Vec<Sign>),
}

impl SignStream {
    pub fn get(&self, step: usize) -> Sign {
        match self {
            SignStream::Left => Sign::Plus,
            SignStream::Right => Sign::Minus,
            SignStream::Alternating if step.is_multiple_of(2) => Sign::Plus,
            SignStream::Alternating => Sign::Minus,
            SignStream::Explicit(signs) if signs.is_empty() => Sign::Plus,
            SignStream::Explicit(signs) => signs[step % signs.len()],
        }
    }
}

/// `a = N_S(e, c)`: the ordered product of `S(e_γ, c_γ)` along the tree
/// order of `signs`, exact above `floor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub scale: Scale,
    pub signs: TreeOrder,
    /// `(e_γ, c_γ)` for `γ = 0, 1, ...`; `e` strictly decreasing.
    pub steps: Vec<(Rational, Rational)>,
    pub floor: Rational,
}

impl Decomposition {
    pub fn new(
        scale: Scale,
        signs: TreeOrder,
        steps: Vec<(Rational, Rational)>,
        floor: Rational,
    ) -> Result<Decomposition> {
        let d = Decomposition { scale, signs, steps, floor };
        d.validate()?;
        Ok(d)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::MalformedDecomposition(m.into()));
        if self.signs.len() != self.steps.len() {
            return bad("sign order and steps differ in length");
        }
        if self.steps.iter().any(|(e, c)| e >= &Rational::one() || c.is_zero()) {
            return bad("every step needs e < 1 and c != 0");
        }
        if self.steps.windows(2).any(|w| w[0].0 <= w[1].0) {
            return bad("exponents must strictly decrease");
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct JsonStep {
    e: String,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct JsonDecomposition {
    scale: Scale,
    floor: String,
    signs: Vec<Sign>,
    steps: Vec<JsonStep>,
}

impl Serialize for Decomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonDecomposition {
            scale: self.scale,
            floor: self.floor.to_string(),
            signs: self.signs.signs().to_vec(),
            steps: self.steps.iter().map(|(e, c)| JsonStep { e: e.to_string(), c: c.to_string() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Decomposition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Decomposition, D::Error> {
        use serde::de::Error as _;
        let raw = JsonDecomposition::deserialize(d)?;
        let parse = |s: &str| parse_rational(s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}")));
        let floor = parse(&raw.floor)?;
        let steps = raw
            .steps
            .iter()
            .map(|st| Ok((parse(&st.e)?, parse(&st.c)?)))
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        let signs = TreeOrder::with_len(steps.len(), &raw.signs).map_err(D::Error::custom)?;
        Decomposition::new(raw.scale, signs, steps, floor).map_err(D::Error::custom)
    }
}

/// Peels scale factors off `a` until nothing of `a - x` is left above the
/// floor. At step `γ` with `(c, e) = go(r)`, sign `+1` takes
/// `r ← S(e, c)^[-1] ∘ r` and sign `-1` takes `r ← r ∘ S(e, c)^[-1]`.
pub fn decompose(a: &TElement, scale: Scale, signs: &SignStream, work_floor: &Rational) -> Result<Decomposition> {
    decompose_with_cap(a, scale, signs, work_floor, DEFAULT_ITERATION_CAP)
}

pub fn decompose_with_cap(
    a: &TElement,
    scale: Scale,
    signs: &SignStream,
    work_floor: &Rational,
    iteration_cap: usize,
) -> Result<Decomposition> {
    let mut floor = work_floor.clone();
    if let Some(fa) = a.floor() {
        floor = floor.max(fa.clone());
    }
    let mut r = a.with_floor(&floor);
    let mut steps: Vec<(Rational, Rational)> = Vec::new();
    let mut used = Vec::new();
    while let Ok((e, c)) = r.delta().leading().map(|(e, c)| (e.clone(), c.clone())) {
        if steps.len() == iteration_cap {
            return Err(Error::IterationCap(iteration_cap));
        }
        if steps.last().is_some_and(|(prev, _)| &e >= prev) {
            return Err(Error::NotDecreasing(steps.len()));
        }
        let factor_inv = scale.eval_inverse(&e, &c, &floor)?;
        let sign = signs.get(steps.len());
        let next = match sign {
            Sign::Plus => compose(factor_inv.series(), &r, &floor),
            Sign::Minus => compose(r.series(), &factor_inv, &floor),
        };
        r = TElement::new(next.with_floor(&floor))?;
        steps.push((e, c));
        used.push(sign);
    }
    let order = TreeOrder::with_len(steps.len(), &used)?;
    Decomposition::new(scale, order, steps, floor)
}

/// The ordered product of the scale factors along the decomposition's signs.
pub fn recompose(d: &Decomposition, work_floor: &Rational) -> Result<TElement> {
    let factors = d.steps.iter().map(|(e, c)| d.scale.eval(e, c, work_floor)).collect::<Result<Vec<_>>>()?;
    ordered_product_t(&factors, &d.signs, work_floor)
}
