//! The formal chain rule for ordered products.
//!
//! Over the alphabet `I ⊔ {ς} ⊔ (I × {ς})`, read `X_i` as `f_i - id`,
//! `X_ς` as a derivative and `X_{(i,ς)}` as `f_i' - 1` pulled back along
//! the composition. The relations below encode the chain rule for one
//! factor; the check asks whether the chain rule for the whole ordered
//! product follows from them, up to a degree cap.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::free::{inverse_unit, truncated_ideal, FreeSeries, OrderedAlphabet, Var};
use crate::product::{ordered_product, OrderedFamily};
use crate::Result;

/// The base alphabet together with the derivative letter and one paired
/// letter per base letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedAlphabet {
    base: OrderedAlphabet,
}

impl TaggedAlphabet {
    /// Base letters must be plain variables so that the three groups stay
    /// disjoint.
    pub fn new(base: OrderedAlphabet) -> TaggedAlphabet {
        assert!(base.vars().iter().all(|v| matches!(v, Var::Plain(_))), "base alphabet must use plain variables");
        TaggedAlphabet { base }
    }

    /// Base alphabet `X_0 < ... < X_{n-1}`.
    pub fn range(n: usize) -> TaggedAlphabet {
        TaggedAlphabet::new(OrderedAlphabet::range(n))
    }

    pub fn base(&self) -> &OrderedAlphabet {
        &self.base
    }

    pub fn paired(&self, v: Var) -> Var {
        match v {
            Var::Plain(i) => Var::Paired(i),
            other => panic!("no paired letter for {other}"),
        }
    }

    /// All `2·|I| + 1` letters.
    pub fn letters(&self) -> BTreeSet<Var> {
        let mut out: BTreeSet<Var> = self.base.vars().iter().copied().collect();
        out.extend(self.base.vars().iter().map(|&v| self.paired(v)));
        out.insert(Var::Sigma);
        out
    }
}

/// `X_ς·(1+X_i) − (1+X_{(i,ς)})·(1+X_i)·X_ς` for each `i`: the chain rule
/// `φ∘σ_i = μ_i∘σ_i∘φ` with composition written as multiplication.
pub fn relations(alphabet: &TaggedAlphabet, cap: usize) -> Vec<FreeSeries> {
    let sigma = FreeSeries::var(Var::Sigma, cap);
    alphabet
        .base
        .vars()
        .iter()
        .map(|&v| {
            let step = FreeSeries::one_plus_var(v, cap);
            let paired = FreeSeries::one_plus_var(alphabet.paired(v), cap);
            &(&sigma * &step) - &(&(&paired * &step) * &sigma)
        })
        .collect()
}

/// `Q(i) = OP_{i⁻} · (1 + X_{(i,ς)}) · OP_{i⁻}⁻¹`, listed along `I`.
pub fn multiplier_family(alphabet: &TaggedAlphabet, cap: usize) -> OrderedFamily {
    let base = &alphabet.base;
    let entries = base
        .vars()
        .iter()
        .enumerate()
        .map(|(pos, &v)| {
            let before = base.before(pos).op_series(cap);
            let inv = inverse_unit(&before).expect("ordered product is a unit");
            let middle = FreeSeries::one_plus_var(alphabet.paired(v), cap);
            (v, &(&before * &middle) * &inv)
        })
        .collect();
    OrderedFamily::new(cap, entries).expect("conjugates of units are units")
}

/// `M_I`, the ordered product of the multiplier family along `I`.
pub fn big_multiplier(alphabet: &TaggedAlphabet, cap: usize) -> FreeSeries {
    ordered_product(&multiplier_family(alphabet, cap))
}

/// `M_I · OP_I · X_ς − X_ς · OP_I`, the chain rule for the whole product.
pub fn chain_rule_defect(alphabet: &TaggedAlphabet, cap: usize) -> FreeSeries {
    let sigma = FreeSeries::var(Var::Sigma, cap);
    let op = alphabet.base.op_series(cap);
    let m = big_multiplier(alphabet, cap);
    &(&(&m * &op) * &sigma) - &(&sigma * &op)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MembershipReport {
    pub member: bool,
    /// Dimension of the truncated ideal the defect was reduced against.
    pub ideal_dim: usize,
}

/// Whether the chain-rule defect lies in the truncated two-sided ideal
/// generated by the one-factor relations.
pub fn chain_rule_in_ideal(alphabet: &TaggedAlphabet, cap: usize) -> Result<MembershipReport> {
    let defect = chain_rule_defect(alphabet, cap);
    let basis = truncated_ideal(&relations(alphabet, cap), &alphabet.letters(), cap)?;
    Ok(MembershipReport { member: basis.contains(&defect), ideal_dim: basis.dim() })
}

/// Whether the supports of `Q(i) - 1` are pairwise disjoint.
pub fn multiplier_supports_disjoint(family: &OrderedFamily) -> bool {
    let mut seen = BTreeSet::new();
    for m in family.members() {
        for (w, _) in m.without_constant().terms() {
            if !seen.insert(w.clone()) {
                return false;
            }
        }
    }
    true
}
