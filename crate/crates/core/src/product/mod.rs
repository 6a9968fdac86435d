//! Ordered products on the group `1 + m` of a truncated free algebra.
//!
//! The product of a family `f` along a finite linear order `I` is the
//! evaluation of the formal ordered product `OP_I` at `f - 1`. For finite
//! families this is the plain left-to-right product; the point of computing
//! it through `OP_I` is that the same route works for any algebra with
//! evaluations.

mod axioms;

use std::collections::BTreeMap;

use num_traits::One;

use crate::free::{evaluate, inverse_unit, FreeSeries, OrderedAlphabet, Var};
use crate::{Error, Result};

pub use axioms::{verify_axioms, AxiomOutcome, AxiomReport, Status};

/// A family `I → 1 + m` listed in ascending index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedFamily {
    order: OrderedAlphabet,
    members: Vec<FreeSeries>,
    cap: usize,
}

impl OrderedFamily {
    pub fn new(cap: usize, entries: Vec<(Var, FreeSeries)>) -> Result<OrderedFamily> {
        let (labels, members): (Vec<Var>, Vec<FreeSeries>) = entries.into_iter().unzip();
        let order = OrderedAlphabet::new(labels)?;
        for m in &members {
            if m.cap() != cap {
                return Err(Error::CapMismatch { left: cap, right: m.cap() });
            }
            let c = m.constant_term();
            if !c.is_one() {
                return Err(Error::WrongConstantTerm { expected: "1".into(), found: c.to_string() });
            }
        }
        Ok(OrderedFamily { order, members, cap })
    }

    /// The family indexed by `X_0 < X_1 < ...`.
    pub fn indexed(cap: usize, members: Vec<FreeSeries>) -> Result<OrderedFamily> {
        let labels = (0..members.len() as u32).map(Var::Plain);
        OrderedFamily::new(cap, labels.zip(members).collect())
    }

    pub fn empty(cap: usize) -> OrderedFamily {
        OrderedFamily { order: OrderedAlphabet::range(0), members: Vec::new(), cap }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn order(&self) -> &OrderedAlphabet {
        &self.order
    }

    pub fn members(&self) -> &[FreeSeries] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (Var, &FreeSeries)> {
        self.order.vars().iter().copied().zip(self.members.iter())
    }

    fn with_parts(&self, order: OrderedAlphabet, members: Vec<FreeSeries>) -> OrderedFamily {
        OrderedFamily { order, members, cap: self.cap }
    }

    /// Restriction to the positions in `range`; a convex subfamily.
    pub fn slice(&self, range: std::ops::Range<usize>) -> OrderedFamily {
        let order = OrderedAlphabet::new(self.order.vars()[range.clone()].to_vec()).expect("subset of distinct labels");
        self.with_parts(order, self.members[range].to_vec())
    }

    /// The same family over the reversed order `I*`.
    pub fn reversed(&self) -> OrderedFamily {
        self.with_parts(self.order.reversed(), self.members.iter().rev().cloned().collect())
    }

    /// Pointwise inverses `f^{-1}`, same order.
    pub fn inverses(&self) -> OrderedFamily {
        let members = self.members.iter().map(|m| inverse_unit(m).expect("constant term 1")).collect();
        self.with_parts(self.order.clone(), members)
    }

    /// Pointwise product `f · g`; the index orders must agree.
    pub fn pointwise_mul(&self, other: &OrderedFamily) -> Result<OrderedFamily> {
        if self.order != other.order {
            return Err(Error::OrderMismatch);
        }
        let members = self.members.iter().zip(&other.members).map(|(a, b)| a.cauchy_mul(b)).collect::<Result<_>>()?;
        Ok(self.with_parts(self.order.clone(), members))
    }

    /// `(1+ε) · f · (1+ε)^{-1}` pointwise.
    pub fn conjugated(&self, unit: &FreeSeries) -> Result<OrderedFamily> {
        let inv = inverse_unit(unit)?;
        let members = self.members.iter().map(|m| &(unit * m) * &inv).collect();
        Ok(self.with_parts(self.order.clone(), members))
    }

    /// Same members under new labels, ordered as given.
    pub fn relabeled(&self, labels: Vec<Var>) -> Result<OrderedFamily> {
        assert_eq!(labels.len(), self.len(), "relabeling must be a bijection");
        Ok(self.with_parts(OrderedAlphabet::new(labels)?, self.members.clone()))
    }

    /// Concatenation along the ordered sum of the two index orders.
    pub fn concat(&self, other: &OrderedFamily) -> Result<OrderedFamily> {
        if self.cap != other.cap {
            return Err(Error::CapMismatch { left: self.cap, right: other.cap });
        }
        let entries = self.entries().chain(other.entries()).map(|(v, m)| (v, m.clone())).collect();
        OrderedFamily::new(self.cap, entries)
    }
}

/// `Π_I f := ev_{f-1}(OP_I)`.
pub fn ordered_product(family: &OrderedFamily) -> FreeSeries {
    let cap = family.cap;
    let subst: BTreeMap<Var, FreeSeries> = family.entries().map(|(v, m)| (v, m.without_constant())).collect();
    evaluate(&family.order.op_series(cap), &subst, cap).expect("members lie in 1 + m")
}

/// `f(i_1) ⋯ f(i_n)` in index order.
pub fn plain_product(family: &OrderedFamily) -> FreeSeries {
    family.members.iter().fold(FreeSeries::one(family.cap), |acc, m| &acc * m)
}

/// The twisted family `f[g]` with
/// `f[g](i) = Π_{(i⁺)*}(f^{-1}|i⁺) · g(i) · Π_{i⁺}(f|i⁺)`, so that
/// `Π(f·g) = (Π f)·(Π f[g])`.
pub fn twist(f: &OrderedFamily, g: &OrderedFamily) -> Result<OrderedFamily> {
    if f.order != g.order {
        return Err(Error::OrderMismatch);
    }
    let n = f.len();
    let members = (0..n)
        .map(|k| {
            let tail = f.slice(k + 1..n);
            let left = ordered_product(&tail.inverses().reversed());
            let right = ordered_product(&tail);
            &(&left * &g.members[k]) * &right
        })
        .collect();
    Ok(f.with_parts(f.order.clone(), members))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn unit(i: u32, cap: usize) -> FreeSeries {
        FreeSeries::one_plus_var(Var::Plain(i), cap)
    }

    #[test]
    fn product_of_two() {
        let cap = 3;
        let fam = OrderedFamily::indexed(cap, vec![unit(0, cap), unit(1, cap)]).unwrap();
        assert_eq!(ordered_product(&fam), &unit(0, cap) * &unit(1, cap));
    }

    #[test]
    fn trivial_members() {
        let cap = 3;
        let fam = OrderedFamily::indexed(cap, vec![FreeSeries::one(cap); 3]).unwrap();
        assert_eq!(ordered_product(&fam), FreeSeries::one(cap));
        assert_eq!(ordered_product(&OrderedFamily::empty(cap)), FreeSeries::one(cap));
    }

    #[test]
    fn reversal_of_inverses() {
        let cap = 4;
        let fam = OrderedFamily::indexed(cap, vec![unit(0, cap), unit(1, cap), unit(2, cap)]).unwrap();
        let lhs = ordered_product(&fam.inverses().reversed());
        assert_eq!(lhs, inverse_unit(&ordered_product(&fam)).unwrap());
    }

    #[test]
    fn rejects_non_units() {
        let cap = 2;
        let bad = FreeSeries::var(Var::Plain(0), cap);
        assert!(matches!(OrderedFamily::indexed(cap, vec![bad]), Err(Error::WrongConstantTerm { .. })));
        let two = FreeSeries::constant(int(2), cap);
        assert!(OrderedFamily::indexed(cap, vec![two]).is_err());
    }

    #[test]
    fn twist_of_two() {
        let cap = 4;
        let f = OrderedFamily::indexed(cap, vec![unit(0, cap), unit(1, cap)]).unwrap();
        let g = OrderedFamily::indexed(cap, vec![unit(2, cap), unit(3, cap)]).unwrap();
        let t = twist(&f, &g).unwrap();
        let f1_inv = inverse_unit(&unit(1, cap)).unwrap();
        assert_eq!(t.members()[0], &(&f1_inv * &unit(2, cap)) * &unit(1, cap));
        assert_eq!(t.members()[1], unit(3, cap));
        let lhs = ordered_product(&f.pointwise_mul(&g).unwrap());
        assert_eq!(lhs, &ordered_product(&f) * &ordered_product(&t));
    }

    #[test]
    fn twist_with_trivial_family() {
        let cap = 3;
        let f = OrderedFamily::indexed(cap, vec![unit(0, cap), unit(1, cap)]).unwrap();
        let ones = OrderedFamily::indexed(cap, vec![FreeSeries::one(cap); 2]).unwrap();
        assert_eq!(twist(&f, &ones).unwrap(), ones);
    }

    #[test]
    fn twist_order_mismatch() {
        let cap = 2;
        let f = OrderedFamily::indexed(cap, vec![unit(0, cap), unit(1, cap)]).unwrap();
        assert_eq!(twist(&f, &f.reversed()), Err(Error::OrderMismatch));
    }
}
