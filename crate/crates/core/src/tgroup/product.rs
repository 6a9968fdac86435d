//! Ordered products of finite families in `T` and the identities they obey.

use crate::hahn::HahnSeries;
use crate::order::TreeOrder;
use crate::rational::Rational;
use crate::{Error, Result};

use super::{agree, compose, group_compose, iterate, TElement};

/// `a_0 ∘ a_1 ∘ ... ∘ a_n` for members listed in ascending order.
pub fn ordered_product_linear(members: &[&TElement], work_floor: &Rational) -> Result<TElement> {
    let mut acc = TElement::x();
    for a in members.iter().rev() {
        acc = group_compose(a, &acc, work_floor)?;
    }
    Ok(acc)
}

fn check_len(members: &[TElement], order: &TreeOrder) -> Result<()> {
    if members.len() == order.len() {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index: members.len(), len: order.len() })
    }
}

/// The ordered product along `<_N`: the `<_N`-least index is the leftmost
/// composition factor.
pub fn ordered_product_t(members: &[TElement], order: &TreeOrder, work_floor: &Rational) -> Result<TElement> {
    check_len(members, order)?;
    let line: Vec<&TElement> = order.linearize().into_iter().map(|i| &members[i]).collect();
    ordered_product_linear(&line, work_floor)
}

/// The same product as an operator expansion: with `φ_i(y) = y ∘ a_i - y`,
/// sum `φ_{θ_1}(...φ_{θ_n}(x))` over all words `θ_1 >_N ... >_N θ_n` of
/// length at most `term_bound`.
pub fn product_via_operator_expansion(
    members: &[TElement],
    order: &TreeOrder,
    work_floor: &Rational,
    term_bound: usize,
) -> Result<TElement> {
    check_len(members, order)?;
    let line = order.linearize();
    let x = HahnSeries::x();
    let mut total = x.clone();
    // Each stack entry is an image `φ_{θ_1}(...)` together with the position
    // of its outermost letter; longer words extend to the right in `line`.
    let mut stack: Vec<(HahnSeries, usize, usize)> = vec![(x, 0, 0)];
    while let Some((image, next, len)) = stack.pop() {
        if len == term_bound {
            continue;
        }
        for (pos, &idx) in line.iter().enumerate().skip(next) {
            let phi = &compose(&image, &members[idx], work_floor) - &image;
            if phi.is_zero() {
                continue;
            }
            total = &total + &phi;
            if !phi.terms().is_empty() {
                stack.push((phi, pos + 1, len + 1));
            }
        }
    }
    TElement::new(total)
}

/// Whether `∂(composite) = ∂(b)·(∂(a) ∘ b)` above the coarser floor, for a
/// supplied value of `a ∘ b`.
pub fn chain_rule_holds(a: &HahnSeries, b: &TElement, composite: &HahnSeries, work_floor: &Rational) -> bool {
    let lhs = composite.derivative();
    let rhs = &b.series().derivative() * &compose(&a.derivative(), b, work_floor);
    agree(&lhs, &rhs)
}

/// The chain rule for `a ∘ b`.
pub fn chain_rule_check(a: &HahnSeries, b: &TElement, work_floor: &Rational) -> bool {
    chain_rule_holds(a, b, &compose(a, b, work_floor), work_floor)
}

/// Whether `(a^e) ∘ b = (a ∘ b)^e` above the coarser floor.
pub fn homogeneity_check(a: &HahnSeries, e: &Rational, b: &TElement, work_floor: &Rational) -> Result<bool> {
    let lhs = compose(&a.power(e, work_floor)?, b, work_floor);
    let rhs = compose(a, b, work_floor).power(e, work_floor)?;
    Ok(agree(&lhs, &rhs))
}

/// Whether `a^[e + e'] = a^[e] ∘ a^[e']` above the coarser floor.
pub fn centralizer_check(a: &TElement, e: &Rational, e2: &Rational, work_floor: &Rational) -> Result<bool> {
    let lhs = iterate(a, &(e + e2), work_floor)?;
    let rhs = group_compose(&iterate(a, e, work_floor)?, &iterate(a, e2, work_floor)?, work_floor)?;
    Ok(lhs.agrees_with(&rhs))
}

/// The multiplier `m` with `∂(a_{l_0} ∘ ... ∘ a_{l_n}) = m`, assembled from
/// the members' own multipliers `∂(a_i)` conjugated by the composite of the
/// factors to their right: `m = Π_j ∂(a_{l_j}) ∘ (a_{l_{j+1}} ∘ ... ∘ a_{l_n})`.
pub fn product_chain_multiplier(members: &[TElement], order: &TreeOrder, work_floor: &Rational) -> Result<HahnSeries> {
    check_len(members, order)?;
    let mut tail = TElement::x();
    let mut multiplier = HahnSeries::one();
    for idx in order.linearize().into_iter().rev() {
        let a = &members[idx];
        multiplier = &multiplier * &compose(&a.series().derivative(), &tail, work_floor);
        tail = group_compose(a, &tail, work_floor)?;
    }
    Ok(multiplier)
}
