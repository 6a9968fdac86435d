mod common;

use common::coefficient;
use ordcal::free::{binom_power, exp_series, inverse_unit, log_series, FreeSeries, Var, Word};
use ordcal::product::{ordered_product, plain_product, twist, OrderedFamily};
use ordcal::rational::int;
use proptest::prelude::*;

const CAP: usize = 3;

fn word(letters: Vec<u32>) -> Word {
    letters.into_iter().fold(Word::empty(), |w, i| w.concat(&Word::letter(Var::Plain(i))))
}

/// Series with zero constant term over `X0, X1, X2`.
fn maximal() -> impl Strategy<Value = FreeSeries> {
    prop::collection::vec((prop::collection::vec(0u32..3, 1..=CAP), coefficient()), 0..5)
        .prop_map(|terms| FreeSeries::from_terms(terms.into_iter().map(|(w, c)| (word(w), c)), CAP))
}

fn unit() -> impl Strategy<Value = FreeSeries> {
    maximal().prop_map(|m| &FreeSeries::one(CAP) + &m)
}

fn family(max: usize) -> impl Strategy<Value = OrderedFamily> {
    prop::collection::vec(unit(), 0..=max).prop_map(|ms| OrderedFamily::indexed(CAP, ms).unwrap())
}

proptest! {
    #[test]
    fn log_and_exp_are_inverse(u in unit(), m in maximal()) {
        prop_assert_eq!(exp_series(&log_series(&u).unwrap()).unwrap(), u);
        prop_assert_eq!(log_series(&exp_series(&m).unwrap()).unwrap(), m);
    }

    #[test]
    fn binomial_powers(u in unit(), s in common::exponent(-8, 8), t in common::exponent(-8, 8)) {
        let ps = binom_power(&u, &s).unwrap();
        let pt = binom_power(&u, &t).unwrap();
        prop_assert_eq!(&ps * &pt, binom_power(&u, &(&s + &t)).unwrap());
        prop_assert_eq!(binom_power(&u, &int(2)).unwrap(), &u * &u);
        prop_assert_eq!(&binom_power(&u, &int(-1)).unwrap() * &u, FreeSeries::one(CAP));
    }

    #[test]
    fn unit_inverse(u in unit()) {
        let inv = inverse_unit(&u).unwrap();
        prop_assert_eq!(&inv * &u, FreeSeries::one(CAP));
        prop_assert_eq!(&u * &inv, FreeSeries::one(CAP));
    }

    #[test]
    fn ordered_product_is_the_iterated_product(f in family(4)) {
        prop_assert_eq!(ordered_product(&f), plain_product(&f));
    }

    #[test]
    fn reversed_inverses_invert(f in family(4)) {
        let inv = ordered_product(&f.inverses().reversed());
        prop_assert_eq!(&inv * &ordered_product(&f), FreeSeries::one(CAP));
    }

    #[test]
    fn products_split_over_concatenation(f in family(3), cut in 0usize..=3) {
        let cut = cut.min(f.len());
        let left = f.slice(0..cut);
        let right = f.slice(cut..f.len());
        prop_assert_eq!(ordered_product(&f), &ordered_product(&left) * &ordered_product(&right));
    }

    #[test]
    fn twisted_family_factors_pointwise_product(f in family(3), g in prop::collection::vec(unit(), 3)) {
        let g = OrderedFamily::indexed(CAP, g[..f.len()].to_vec()).unwrap();
        let lhs = ordered_product(&f.pointwise_mul(&g).unwrap());
        let rhs = &ordered_product(&f) * &ordered_product(&twist(&f, &g).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn family_members_must_be_units() {
    let bad = FreeSeries::var(Var::Plain(0), CAP);
    assert!(OrderedFamily::indexed(CAP, vec![bad]).is_err());
    assert!(OrderedFamily::indexed(CAP, vec![FreeSeries::one(CAP + 1)]).is_err());
}
