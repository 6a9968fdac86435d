//! Seeded random generators for the verification suites.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::free::{FreeSeries, Var, Word};
use crate::hahn::HahnSeries;
use crate::order::{Sign, TreeOrder};
use crate::rational::{int, Rational};
use crate::tgroup::TElement;

/// Size of the ambient alphabet random free series are drawn over.
pub const AMBIENT_VARS: u32 = 3;

/// A series without constant term: at most `max_terms` terms with non-zero
/// integer coefficients in `[-3, 3]`, word lengths in `1..=cap`.
pub fn free_series_no_constant<R: Rng>(rng: &mut R, max_terms: usize, cap: usize) -> FreeSeries {
    let mut out = FreeSeries::zero(cap);
    if cap == 0 {
        return out;
    }
    for _ in 0..rng.gen_range(0..=max_terms) {
        let len = rng.gen_range(1..=cap);
        let word: Word = (0..len).map(|_| Var::Plain(rng.gen_range(0..AMBIENT_VARS))).collect::<Vec<_>>().into();
        out.add_term(word, nonzero_small(rng));
    }
    out
}

/// `1 + ε` with `ε` from [`free_series_no_constant`] (at most 3 terms).
pub fn free_unit<R: Rng>(rng: &mut R, cap: usize) -> FreeSeries {
    &FreeSeries::one(cap) + &free_series_no_constant(rng, 3, cap)
}

/// A non-zero integer in `[-3, 3]`.
pub fn nonzero_small<R: Rng>(rng: &mut R) -> Rational {
    let v = rng.gen_range(1..=3);
    int(if rng.gen_bool(0.5) { v } else { -v })
}

/// `n` distinct index labels, disjoint from the ambient alphabet, in random
/// order.
pub fn labels<R: Rng>(rng: &mut R, n: usize) -> Vec<Var> {
    let mut pool: Vec<u32> = (100..100 + 4 * n as u32 + 4).collect();
    pool.shuffle(rng);
    pool.truncate(n);
    pool.into_iter().map(Var::Plain).collect()
}

/// A random rational `p/q` with `|p| ≤ num_bound`, `1 ≤ q ≤ den_bound`.
pub fn small_rational<R: Rng>(rng: &mut R, num_bound: i64, den_bound: i64) -> Rational {
    Rational::new(rng.gen_range(-num_bound..=num_bound).into(), rng.gen_range(1..=den_bound).into())
}

/// A rational in `[lo, hi)` on the grid `(1/d)·Z` with `d ∈ {1, 2, 3, 4}`.
pub fn grid_exponent<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> Rational {
    let d = rng.gen_range(1..=4);
    Rational::new(rng.gen_range(lo * d..hi * d).into(), d.into())
}

/// A non-zero exact series with at most `max_terms` terms, exponents from
/// [`grid_exponent`] in `[lo, hi)` and coefficients in `[-3, 3]`.
pub fn hahn_series<R: Rng>(rng: &mut R, max_terms: usize, lo: i64, hi: i64) -> HahnSeries {
    loop {
        let terms: Vec<_> =
            (0..rng.gen_range(1..=max_terms)).map(|_| (grid_exponent(rng, lo, hi), nonzero_small(rng))).collect();
        let s = HahnSeries::from_terms(terms, None);
        if !s.is_zero() {
            return s;
        }
    }
}

/// An exact `x + δ` with at most `max_terms` terms in `δ`, exponents in
/// `[lo, top]`. May be `x` itself when terms cancel.
pub fn t_element<R: Rng>(rng: &mut R, max_terms: usize, lo: i64, top: &Rational) -> TElement {
    let mut delta = HahnSeries::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let e = grid_exponent(rng, lo, 1);
        if &e <= top {
            delta = &delta + &HahnSeries::term(nonzero_small(rng), e);
        }
    }
    TElement::new(&HahnSeries::x() + &delta).expect("exponents below 1")
}

/// Like [`t_element`] but never `x`.
pub fn t_element_nontrivial<R: Rng>(rng: &mut R, max_terms: usize, lo: i64, top: &Rational) -> TElement {
    loop {
        let a = t_element(rng, max_terms, lo, top);
        if !a.delta().is_zero() {
            return a;
        }
    }
}

/// A random sign sequence of length `n`.
pub fn signs<R: Rng>(rng: &mut R, n: usize) -> Vec<Sign> {
    (0..n).map(|_| if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus }).collect()
}

/// A random tree order on `n` elements.
pub fn tree_order<R: Rng>(rng: &mut R, n: usize) -> TreeOrder {
    if n == 0 {
        return TreeOrder::empty();
    }
    TreeOrder::new(signs(rng, n - 1))
}
