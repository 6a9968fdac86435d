mod common;

use common::{coefficient, nonzero_series, series};
use ordcal::hahn::{parse_series, HahnSeries};
use ordcal::rational::int;
use proptest::prelude::*;

proptest! {
    #[test]
    fn ring_laws(a in series(4, -8, 8), b in series(4, -8, 8), c in series(4, -8, 8)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &HahnSeries::one(), a.clone());
    }

    #[test]
    fn valuation_is_additive(a in nonzero_series(4, -8, 8), b in nonzero_series(4, -8, 8)) {
        let ab = &a * &b;
        prop_assert_eq!(ab.valuation().unwrap(), a.valuation().unwrap() + b.valuation().unwrap());
        prop_assert_eq!(
            ab.leading_coefficient().unwrap(),
            a.leading_coefficient().unwrap() * b.leading_coefficient().unwrap()
        );
    }

    #[test]
    fn leibniz(a in series(4, -8, 8), b in series(4, -8, 8)) {
        let lhs = (&a * &b).derivative();
        let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivative_drops_below_a_over_x(a in nonzero_series(4, -8, 8)) {
        let d = a.derivative();
        let v = a.valuation().unwrap();
        if v == int(0) {
            prop_assert!(d.is_zero() || d.valuation().unwrap() < v - int(1));
        } else {
            prop_assert_eq!(d.valuation().unwrap(), v - int(1));
        }
    }

    #[test]
    fn text_round_trip(a in series(5, -12, 12), floored in any::<bool>(), f in -12i64..-4) {
        let a = if floored { a.with_floor(&ordcal::rational::rat(f, 4)) } else { a };
        let text = a.to_string();
        prop_assert_eq!(parse_series(&text).unwrap(), a);
    }

    #[test]
    fn floored_product_agrees_with_exact(a in series(4, -8, 8), b in series(4, -8, 8), f in -8i64..0) {
        let f = ordcal::rational::rat(f, 4);
        let exact = &a * &b;
        let cut = a.mul_above(&b, &f);
        if a.is_zero() || b.is_zero() {
            prop_assert!(cut.is_zero() && cut.is_exact());
        } else {
            prop_assert_eq!(cut, exact.with_floor(&f));
        }
    }

    #[test]
    fn field_inverse(a in nonzero_series(3, -8, 8)) {
        let v = a.valuation().unwrap();
        let w = -&v - int(3);
        let inv = a.field_inverse(&w).unwrap();
        prop_assert_eq!(inv.valuation().unwrap(), -v);
        let p = &a * &inv;
        match p.floor() {
            // a monomial inverts exactly
            None => prop_assert_eq!(p, HahnSeries::one()),
            Some(f) => {
                prop_assert!(*f < int(0));
                prop_assert!(p.agrees_above(&HahnSeries::one(), f));
            }
        }
    }

    #[test]
    fn order_is_total_and_compatible(a in series(3, -8, 8), b in series(3, -8, 8), c in coefficient()) {
        use std::cmp::Ordering;
        let ab = a.compare(&b).unwrap();
        prop_assert_eq!(b.compare(&a).unwrap(), ab.reverse());
        let shifted = HahnSeries::constant(c);
        prop_assert_eq!((&a + &shifted).compare(&(&b + &shifted)).unwrap(), ab);
        prop_assert_eq!(ab == Ordering::Equal, a == b);
    }
}

#[test]
fn parse_rejects_garbage() {
    assert!(parse_series("x^(1/0)").is_err());
    assert!(parse_series("x +").is_err());
}
