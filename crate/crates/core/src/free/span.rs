//! Exact linear algebra over the word-indexed coordinate space of a
//! truncated free algebra.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use super::{lie_bracket, FreeSeries, Var, Word};
use crate::rational::Rational;
use crate::{Error, Result};

type Vector = BTreeMap<Word, Rational>;

/// A row-echelon basis of a subspace. Each row is keyed by its pivot, the
/// largest word in its support, with pivot coefficient 1.
#[derive(Debug, Clone, Default)]
pub struct SparseBasis {
    rows: BTreeMap<Word, Vector>,
}

impl SparseBasis {
    pub fn new() -> SparseBasis {
        SparseBasis::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Subtracts multiples of basis rows until no pivot word remains in the
    /// support.
    fn reduce(&self, mut v: Vector) -> Vector {
        let mut bound: Option<Word> = None;
        loop {
            let next = match &bound {
                None => v.keys().next_back().cloned(),
                Some(b) => v.range(..b.clone()).next_back().map(|(w, _)| w.clone()),
            };
            let Some(word) = next else { break };
            if let Some(row) = self.rows.get(&word) {
                let factor = v[&word].clone();
                for (w, c) in row {
                    let entry = v.entry(w.clone()).or_insert_with(Rational::zero);
                    *entry -= &factor * c;
                    if entry.is_zero() {
                        v.remove(w);
                    }
                }
            }
            bound = Some(word);
        }
        v
    }

    /// Adds `s` to the span. Returns the reduced new row when `s` was not
    /// already in the span.
    pub fn insert(&mut self, s: &FreeSeries) -> Option<FreeSeries> {
        let v = self.reduce(s.terms().map(|(w, c)| (w.clone(), c.clone())).collect());
        let (pivot, lead) = v.iter().next_back().map(|(w, c)| (w.clone(), c.clone()))?;
        let inv = lead.recip();
        let row: Vector = v.into_iter().map(|(w, c)| (w, c * &inv)).collect();
        let as_series = FreeSeries::from_terms(row.iter().map(|(w, c)| (w.clone(), c.clone())), s.cap());
        self.rows.insert(pivot, row);
        Some(as_series)
    }

    pub fn contains(&self, s: &FreeSeries) -> bool {
        self.reduce(s.terms().map(|(w, c)| (w.clone(), c.clone())).collect()).is_empty()
    }
}

fn require_no_constant(s: &FreeSeries) -> Result<()> {
    let c = s.constant_term();
    if c.is_zero() {
        Ok(())
    } else {
        Err(Error::WrongConstantTerm { expected: "0".into(), found: c.to_string() })
    }
}

fn at_cap(s: &FreeSeries, cap: usize) -> Result<FreeSeries> {
    if s.cap() < cap {
        return Err(Error::CapMismatch { left: cap, right: s.cap() });
    }
    Ok(s.truncated(cap))
}

/// Whether the truncation of `target` lies in the Lie algebra generated by
/// `generators`, everything truncated at `cap`.
///
/// The basis is saturated by bracketing every new basis element with each
/// generator; right-nested brackets of generators span the generated Lie
/// algebra, and truncation commutes with brackets of series without
/// constant term.
pub fn lie_span_contains(target: &FreeSeries, generators: &[FreeSeries], cap: usize) -> Result<bool> {
    require_no_constant(target)?;
    let gens = generators
        .iter()
        .map(|g| {
            require_no_constant(g)?;
            at_cap(g, cap)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut basis = SparseBasis::new();
    let mut pending: Vec<FreeSeries> = gens.iter().filter_map(|g| basis.insert(g)).collect();
    while let Some(element) = pending.pop() {
        for g in &gens {
            let bracket = lie_bracket(g, &element)?;
            if let Some(row) = basis.insert(&bracket) {
                pending.push(row);
            }
        }
    }
    Ok(basis.contains(&at_cap(target, cap)?))
}

fn words_up_to(alphabet: &[Var], max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        layer = layer.iter().flat_map(|w| alphabet.iter().map(move |v| w.concat(&Word::letter(*v)))).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Spanning set of the truncated two-sided ideal generated by `relations`:
/// all `u·r·v` with `|u| + mindeg(r) + |v| ≤ cap`, `u`, `v` over `alphabet`.
pub fn truncated_ideal(relations: &[FreeSeries], alphabet: &BTreeSet<Var>, cap: usize) -> Result<SparseBasis> {
    let letters: Vec<Var> = alphabet.iter().copied().collect();
    let mut basis = SparseBasis::new();
    for r in relations {
        let r = at_cap(r, cap)?;
        let Some(mindeg) = r.min_degree() else { continue };
        let slack = cap - mindeg;
        let words = words_up_to(&letters, slack);
        for u in &words {
            let left = FreeSeries::monomial(u.clone(), Rational::one(), cap);
            let ur = &left * &r;
            for v in words.iter().filter(|v| u.len() + v.len() <= slack) {
                let right = FreeSeries::monomial(v.clone(), Rational::one(), cap);
                basis.insert(&(&ur * &right));
            }
        }
    }
    Ok(basis)
}

/// Whether the truncation of `target` lies in the truncation of the
/// two-sided ideal generated by `relations`.
///
/// Words `u`, `v` range over the variables occurring in `target` and the
/// relations: setting any other variable to zero is an algebra morphism
/// fixing both, so extra letters cannot change the answer.
pub fn ideal_span_contains(target: &FreeSeries, relations: &[FreeSeries], cap: usize) -> Result<bool> {
    let mut alphabet = target.variables();
    for r in relations {
        alphabet.extend(r.variables());
    }
    let basis = truncated_ideal(relations, &alphabet, cap)?;
    Ok(basis.contains(&at_cap(target, cap)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free::{log_series, OrderedAlphabet};
    use crate::rational::int;

    fn x(i: u32, cap: usize) -> FreeSeries {
        FreeSeries::var(Var::Plain(i), cap)
    }

    #[test]
    fn basis_reduction() {
        let mut b = SparseBasis::new();
        assert!(b.insert(&(x(0, 2) + x(1, 2))).is_some());
        assert!(b.insert(&(x(0, 2) - x(1, 2))).is_some());
        assert!(b.insert(&x(0, 2).scale(&int(3))).is_none());
        assert_eq!(b.dim(), 2);
        assert!(!b.contains(&(&x(0, 2) * &x(1, 2))));
        assert!(b.contains(&FreeSeries::zero(2)));
    }

    #[test]
    fn log_op_in_lie_span() {
        let cap = 4;
        let i = OrderedAlphabet::range(2);
        let target = log_series(&i.op_series(cap)).unwrap();
        let gens: Vec<_> = i.vars().iter().map(|v| log_series(&FreeSeries::one_plus_var(*v, cap)).unwrap()).collect();
        assert!(lie_span_contains(&target, &gens, cap).unwrap());
    }

    #[test]
    fn plain_product_not_in_lie_span() {
        let cap = 2;
        let target = &x(0, cap) * &x(1, cap);
        assert!(!lie_span_contains(&target, &[x(0, cap), x(1, cap)], cap).unwrap());
        assert!(lie_span_contains(&FreeSeries::zero(cap), &[x(0, cap)], cap).unwrap());
    }

    #[test]
    fn ideal_membership() {
        let cap = 4;
        let r = &(&x(0, cap) * &x(1, cap)) - &(&x(1, cap) * &x(0, cap));
        let target = &(&x(0, cap) * &r) * &x(1, cap);
        assert!(ideal_span_contains(&target, std::slice::from_ref(&r), cap).unwrap());
        assert!(!ideal_span_contains(&x(0, cap), &[r], cap).unwrap());
    }
}
