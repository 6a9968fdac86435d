mod common;

use common::{coefficient, exponent, t_element};
use ordcal::order::Sign;
use ordcal::rational::{int, rat};
use ordcal::tgroup::{
    agree, compose, decompose, group_compose, growth_order, invert, iterate, recompose, GrowthOrder, Scale, SignStream,
    TElement,
};
use proptest::prelude::*;

fn w() -> ordcal::Rational {
    int(-3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(a in t_element(3), b in t_element(3), c in t_element(2)) {
        let ab_c = group_compose(&group_compose(&a, &b, &w()).unwrap(), &c, &w()).unwrap();
        let a_bc = group_compose(&a, &group_compose(&b, &c, &w()).unwrap(), &w()).unwrap();
        prop_assert!(ab_c.agrees_with(&a_bc), "{} vs {}", ab_c.series(), a_bc.series());
    }

    #[test]
    fn inverse_on_both_sides(a in t_element(3)) {
        let inv = invert(&a, &w()).unwrap();
        let left = group_compose(&inv, &a, &w()).unwrap();
        let right = group_compose(&a, &inv, &w()).unwrap();
        prop_assert!(left.agrees_with(&TElement::x().with_floor(&w())));
        prop_assert!(right.agrees_with(&TElement::x().with_floor(&w())));
    }

    #[test]
    fn iterates_add(a in t_element(2), s in exponent(-8, 9), t in exponent(-8, 9)) {
        let lhs = group_compose(&iterate(&a, &s, &w()).unwrap(), &iterate(&a, &t, &w()).unwrap(), &w()).unwrap();
        let rhs = iterate(&a, &(&s + &t), &w()).unwrap();
        prop_assert!(agree(lhs.series(), rhs.series()));
    }

    #[test]
    fn growth_order_of_inverse_and_iterate(a in t_element(3), e in exponent(1, 9)) {
        let go = growth_order(&a).unwrap();
        let GrowthOrder::Term { exp, .. } = &go else { unreachable!() };
        prop_assume!(*exp > w());
        prop_assert_eq!(growth_order(&invert(&a, &w()).unwrap()).unwrap(), go.scaled(&int(-1)));
        prop_assert_eq!(growth_order(&iterate(&a, &e, &w()).unwrap()).unwrap(), go.scaled(&e));
    }

    #[test]
    fn compose_with_x_is_identity(a in common::series(4, -8, 8)) {
        prop_assert_eq!(compose(&a, &TElement::x(), &w()), a);
    }

    #[test]
    fn decomposition_round_trips(
        a in t_element(3),
        s1 in any::<bool>(),
        signs in prop::collection::vec(any::<bool>(), 1..4),
    ) {
        let scale = if s1 { Scale::S1 } else { Scale::S0 };
        let stream = SignStream::Explicit(signs.iter().map(|&p| if p { Sign::Plus } else { Sign::Minus }).collect());
        let d = decompose(&a, scale, &stream, &w()).unwrap();
        prop_assert!(d.steps.windows(2).all(|s| s[0].0 > s[1].0));
        let back = recompose(&d, &w()).unwrap();
        prop_assert!(agree(back.series(), a.with_floor(&w()).series()));
    }

    #[test]
    fn single_shift_decomposes_to_itself(c in coefficient(), e in exponent(-8, 4)) {
        let a = TElement::shift_term(c.clone(), e.clone()).unwrap();
        let d = decompose(&a, Scale::S0, &SignStream::Left, &w()).unwrap();
        prop_assert_eq!(d.steps, if e > w() { vec![(e, c)] } else { vec![] });
    }
}

#[test]
fn indeterminate_growth_order() {
    let a = TElement::x().with_floor(&rat(-1, 2));
    assert_eq!(growth_order(&a), Err(ordcal::Error::Indeterminate));
    assert_eq!(growth_order(&TElement::x()), Ok(GrowthOrder::Zero));
}
