//! Truncated formal power series in non-commuting variables over the
//! rationals.
//!
//! A [`FreeSeries`] stores the coefficients of all words of length at most
//! its `cap`; everything longer is discarded. Products, evaluations and the
//! transcendental functions are all computed modulo words longer than the
//! cap, which is an algebra morphism, so every identity of the untruncated
//! algebra holds exactly in the truncation.

mod ops;
mod span;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use smallvec::SmallVec;

use crate::rational::Rational;
use crate::{Error, Result};

pub use ops::{binom_power, evaluate, exp_series, inverse_unit, lie_bracket, log_series, restrict};
pub use span::{ideal_span_contains, lie_span_contains, truncated_ideal, SparseBasis};

/// A variable of the free algebra.
///
/// `Plain(i)` are ordinary variables `X_i`; `Sigma` and `Paired(i)` are the
/// extra variables `X_ς` and `X_(i,ς)` of the chain-rule alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Plain(u32),
    Sigma,
    Paired(u32),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Plain(i) => write!(f, "X{i}"),
            Var::Sigma => write!(f, "Xs"),
            Var::Paired(i) => write!(f, "X{i}s"),
        }
    }
}

/// A finite word over [`Var`]. Ordered by length first, then
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(SmallVec<[Var; 6]>);

impl Word {
    pub fn empty() -> Word {
        Word(SmallVec::new())
    }

    pub fn letter(var: Var) -> Word {
        Word(SmallVec::from_slice(&[var]))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Var] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }
}

impl From<Vec<Var>> for Word {
    fn from(letters: Vec<Var>) -> Word {
        Word(SmallVec::from_vec(letters))
    }
}

impl From<&[Var]> for Word {
    fn from(letters: &[Var]) -> Word {
        Word(SmallVec::from_slice(letters))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for (k, var) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ".")?;
            }
            write!(f, "{var}")?;
        }
        Ok(())
    }
}

/// A linearly ordered finite set of variables; the declared sequence is the
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedAlphabet {
    vars: Vec<Var>,
}

impl OrderedAlphabet {
    pub fn new(vars: Vec<Var>) -> Result<OrderedAlphabet> {
        let mut seen = BTreeSet::new();
        for v in &vars {
            if !seen.insert(*v) {
                return Err(Error::DuplicateVariable(v.to_string()));
            }
        }
        Ok(OrderedAlphabet { vars })
    }

    /// `X_0 < X_1 < ... < X_{n-1}`.
    pub fn range(n: usize) -> OrderedAlphabet {
        OrderedAlphabet { vars: (0..n as u32).map(Var::Plain).collect() }
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    /// The same set with the opposite order.
    pub fn reversed(&self) -> OrderedAlphabet {
        OrderedAlphabet { vars: self.vars.iter().rev().copied().collect() }
    }

    /// Variables strictly before the one at `position`.
    pub fn before(&self, position: usize) -> OrderedAlphabet {
        OrderedAlphabet { vars: self.vars[..position].to_vec() }
    }

    /// Variables strictly after the one at `position`.
    pub fn after(&self, position: usize) -> OrderedAlphabet {
        OrderedAlphabet { vars: self.vars[position + 1..].to_vec() }
    }

    pub fn position(&self, var: Var) -> Option<usize> {
        self.vars.iter().position(|v| *v == var)
    }

    /// All strictly increasing words of length at most `max_len`.
    pub fn increasing_words(&self, max_len: usize) -> Vec<Word> {
        fn extend(vars: &[Var], start: usize, max_len: usize, current: &mut Vec<Var>, out: &mut Vec<Word>) {
            out.push(Word::from(current.as_slice()));
            if current.len() == max_len {
                return;
            }
            for k in start..vars.len() {
                current.push(vars[k]);
                extend(vars, k + 1, max_len, current, out);
                current.pop();
            }
        }
        let mut out = Vec::new();
        extend(&self.vars, 0, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// The formal ordered product `OP_J`: coefficient 1 on every strictly
    /// increasing word, truncated at `cap`.
    pub fn op_series(&self, cap: usize) -> FreeSeries {
        let terms = self.increasing_words(cap).into_iter().map(|w| (w, Rational::one())).collect();
        FreeSeries { cap, terms }
    }
}

/// A formal series truncated at words of length `cap`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeSeries {
    cap: usize,
    terms: BTreeMap<Word, Rational>,
}

impl FreeSeries {
    pub fn zero(cap: usize) -> FreeSeries {
        FreeSeries { cap, terms: BTreeMap::new() }
    }

    pub fn constant(c: Rational, cap: usize) -> FreeSeries {
        FreeSeries::monomial(Word::empty(), c, cap)
    }

    pub fn one(cap: usize) -> FreeSeries {
        FreeSeries::constant(Rational::one(), cap)
    }

    pub fn var(var: Var, cap: usize) -> FreeSeries {
        FreeSeries::monomial(Word::letter(var), Rational::one(), cap)
    }

    /// `1 + X_var`.
    pub fn one_plus_var(var: Var, cap: usize) -> FreeSeries {
        &FreeSeries::one(cap) + &FreeSeries::var(var, cap)
    }

    pub fn monomial(word: Word, coef: Rational, cap: usize) -> FreeSeries {
        let mut s = FreeSeries::zero(cap);
        s.add_term(word, coef);
        s
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Rational)>, cap: usize) -> FreeSeries {
        let mut s = FreeSeries::zero(cap);
        for (w, c) in terms {
            s.add_term(w, c);
        }
        s
    }

    /// Adds `coef * word`, ignoring words beyond the cap.
    pub fn add_term(&mut self, word: Word, coef: Rational) {
        if word.len() > self.cap || coef.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coef;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, word: &Word) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Word::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Length of the shortest word in the support, `None` for zero.
    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().next().map(Word::len)
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|w| w.letters().iter().copied()).collect()
    }

    /// Drops words longer than `cap` and lowers the cap.
    pub fn truncated(&self, cap: usize) -> FreeSeries {
        FreeSeries {
            cap: cap.min(self.cap),
            terms: self.terms.iter().filter(|(w, _)| w.len() <= cap).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> FreeSeries {
        if c.is_zero() {
            return FreeSeries::zero(self.cap);
        }
        FreeSeries { cap: self.cap, terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect() }
    }

    /// `self - c` where `c` is the constant term; lands in the ideal of
    /// series without constant term.
    pub fn without_constant(&self) -> FreeSeries {
        let mut s = self.clone();
        s.terms.remove(&Word::empty());
        s
    }

    fn check_cap(&self, other: &FreeSeries) -> Result<()> {
        if self.cap == other.cap {
            Ok(())
        } else {
            Err(Error::CapMismatch { left: self.cap, right: other.cap })
        }
    }

    pub fn try_add(&self, other: &FreeSeries) -> Result<FreeSeries> {
        self.check_cap(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    /// The Cauchy product, truncated at the shared cap.
    pub fn cauchy_mul(&self, other: &FreeSeries) -> Result<FreeSeries> {
        self.check_cap(other)?;
        let cap = self.cap;
        let mut acc: HashMap<Word, Rational> = HashMap::new();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                if u.len() + v.len() > cap {
                    // `other` is sorted by length, so all later words are too long.
                    break;
                }
                let w = u.concat(v);
                let p = a * b;
                match acc.get_mut(&w) {
                    Some(c) => *c += p,
                    None => {
                        acc.insert(w, p);
                    }
                }
            }
        }
        Ok(FreeSeries { cap, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    /// `self^n` by repeated multiplication.
    pub fn pow(&self, n: usize) -> FreeSeries {
        let mut out = FreeSeries::one(self.cap);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }
}

impl fmt::Display for FreeSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (word, coef)) in self.terms.iter().enumerate() {
            let magnitude = coef.abs();
            if k == 0 {
                if coef.is_negative() {
                    write!(f, "-")?;
                }
            } else if coef.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if word.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{word}")?;
            } else {
                write!(f, "{magnitude}*{word}")?;
            }
        }
        Ok(())
    }
}

/// `{"cap": D, "terms": [{"word": "X0.X1", "coef": "p/q"}]}` in
/// length-then-lexicographic word order.
impl Serialize for FreeSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            word: String,
            coef: String,
        }
        #[derive(Serialize)]
        struct Json {
            cap: usize,
            terms: Vec<Term>,
        }
        Json {
            cap: self.cap,
            terms: self.terms.iter().map(|(w, c)| Term { word: w.to_string(), coef: c.to_string() }).collect(),
        }
        .serialize(s)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a> $trait<&'a FreeSeries> for &'a FreeSeries {
            type Output = FreeSeries;

            /// Panics when the caps differ; use the `try_*`/`cauchy_mul`
            /// methods for a fallible variant.
            fn $method(self, rhs: &'a FreeSeries) -> FreeSeries {
                let f: fn(&FreeSeries, &FreeSeries) -> Result<FreeSeries> = $body;
                f(self, rhs).expect("operands must share a truncation cap")
            }
        }

        impl $trait<FreeSeries> for FreeSeries {
            type Output = FreeSeries;

            fn $method(self, rhs: FreeSeries) -> FreeSeries {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.try_add(b));
forward_binop!(Sub, sub, |a, b| a.try_add(&-b));
forward_binop!(Mul, mul, |a, b| a.cauchy_mul(b));

impl Neg for &FreeSeries {
    type Output = FreeSeries;

    fn neg(self) -> FreeSeries {
        FreeSeries { cap: self.cap, terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Neg for FreeSeries {
    type Output = FreeSeries;

    fn neg(self) -> FreeSeries {
        -&self
    }
}
