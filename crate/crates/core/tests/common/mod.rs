#![allow(dead_code)]

use ordcal::hahn::HahnSeries;
use ordcal::rational::rat;
use ordcal::tgroup::TElement;
use ordcal::Rational;
use proptest::prelude::*;

/// Multiples of `1/d` with `d <= 4`, in `[lo/4, hi/4)`.
pub fn exponent(lo: i64, hi: i64) -> impl Strategy<Value = Rational> {
    (lo..hi).prop_map(|k| rat(k, 4))
}

pub fn coefficient() -> impl Strategy<Value = Rational> {
    ((1i64..=5), (1i64..=3), any::<bool>()).prop_map(|(n, d, neg)| rat(if neg { -n } else { n }, d))
}

/// Exact series with up to `max_terms` terms, exponents in `[lo/4, hi/4)`.
pub fn series(max_terms: usize, lo: i64, hi: i64) -> impl Strategy<Value = HahnSeries> {
    prop::collection::vec((exponent(lo, hi), coefficient()), 0..=max_terms)
        .prop_map(|terms| HahnSeries::from_terms(terms, None))
}

pub fn nonzero_series(max_terms: usize, lo: i64, hi: i64) -> impl Strategy<Value = HahnSeries> {
    series(max_terms, lo, hi).prop_filter("non-zero", |s| !s.is_zero())
}

/// `x + δ` with `δ` exact and supported below `x^(1)`.
pub fn t_element(max_terms: usize) -> impl Strategy<Value = TElement> {
    nonzero_series(max_terms, -8, 4).prop_map(|d| TElement::new(&HahnSeries::x() + &d).expect("top below 1"))
}
