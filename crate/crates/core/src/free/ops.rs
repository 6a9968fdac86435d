use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{One, Zero};

use super::{FreeSeries, Var, Word};
use crate::rational::{binomials, int, Rational};
use crate::{Error, Result};

/// The evaluation `ev_f(P) = Σ_θ P(θ) f(θ_1)⋯f(θ_n)`, truncated at `cap`.
///
/// Every substituted series must have zero constant term and cap `cap`, so a
/// word of length `n` only contributes at degree `n` and above.
pub fn evaluate(p: &FreeSeries, subst: &BTreeMap<Var, FreeSeries>, cap: usize) -> Result<FreeSeries> {
    for (var, s) in subst {
        if s.cap() != cap {
            return Err(Error::CapMismatch { left: cap, right: s.cap() });
        }
        if !s.constant_term().is_zero() {
            return Err(Error::NonZeroConstantTerm(var.to_string()));
        }
    }
    let mut out = FreeSeries::zero(cap);
    let mut prefixes: HashMap<Word, FreeSeries> = HashMap::new();
    prefixes.insert(Word::empty(), FreeSeries::one(cap));
    for (word, coef) in p.terms() {
        if word.len() > cap {
            continue;
        }
        let image = prefix_product(word.letters(), subst, &mut prefixes)?;
        for (w, c) in image.terms() {
            out.add_term(w.clone(), c * coef);
        }
    }
    Ok(out)
}

fn prefix_product(
    letters: &[Var],
    subst: &BTreeMap<Var, FreeSeries>,
    cache: &mut HashMap<Word, FreeSeries>,
) -> Result<FreeSeries> {
    let key = Word::from(letters);
    if let Some(hit) = cache.get(&key) {
        return Ok(hit.clone());
    }
    let (last, init) = letters.split_last().expect("empty word is cached");
    let head = prefix_product(init, subst, cache)?;
    let factor = subst.get(last).ok_or_else(|| Error::MissingSubstitution(last.to_string()))?;
    let value = &head * factor;
    cache.insert(key, value.clone());
    Ok(value)
}

/// Inverse of a series with non-zero constant term, via the Neumann series.
pub fn inverse_unit(p: &FreeSeries) -> Result<FreeSeries> {
    let c = p.constant_term();
    if c.is_zero() {
        return Err(Error::NotInvertible);
    }
    let c_inv = c.recip();
    let q = p.scale(&c_inv).without_constant();
    let minus_q = -&q;
    let mut sum = FreeSeries::one(p.cap());
    let mut power = FreeSeries::one(p.cap());
    for _ in 0..p.cap() {
        power = &power * &minus_q;
        if power.is_zero() {
            break;
        }
        sum = &sum + &power;
    }
    Ok(sum.scale(&c_inv))
}

fn require_constant(p: &FreeSeries, expected: i64) -> Result<()> {
    let found = p.constant_term();
    if found == int(expected) {
        Ok(())
    } else {
        Err(Error::WrongConstantTerm { expected: expected.to_string(), found: found.to_string() })
    }
}

/// `Σ_m coefs[m] ε^m` for `ε` without constant term.
fn power_sum(eps: &FreeSeries, coefs: &[Rational]) -> FreeSeries {
    let mut sum = FreeSeries::zero(eps.cap());
    let mut power = FreeSeries::one(eps.cap());
    for (m, c) in coefs.iter().enumerate() {
        if m > 0 {
            power = &power * eps;
            if power.is_zero() {
                break;
            }
        }
        sum = &sum + &power.scale(c);
    }
    sum
}

/// `log(1 + ε) = Σ_{m>0} (-1)^{m-1}/m ε^m`; requires constant term 1.
pub fn log_series(p: &FreeSeries) -> Result<FreeSeries> {
    require_constant(p, 1)?;
    let coefs: Vec<Rational> = (0..=p.cap())
        .map(|m| match m {
            0 => Rational::zero(),
            m if m % 2 == 1 => int(1) / int(m as i64),
            m => int(-1) / int(m as i64),
        })
        .collect();
    Ok(power_sum(&p.without_constant(), &coefs))
}

/// `exp(P) = Σ P^m / m!`; requires constant term 0.
pub fn exp_series(p: &FreeSeries) -> Result<FreeSeries> {
    require_constant(p, 0)?;
    let mut coefs = vec![Rational::one()];
    for m in 1..=p.cap() {
        let prev = coefs[m - 1].clone();
        coefs.push(prev / int(m as i64));
    }
    Ok(power_sum(p, &coefs))
}

/// `(1 + ε)^[c] = Σ C(c, m) ε^m`; requires constant term 1.
pub fn binom_power(p: &FreeSeries, c: &Rational) -> Result<FreeSeries> {
    require_constant(p, 1)?;
    Ok(power_sum(&p.without_constant(), &binomials(c, p.cap())))
}

/// `[P, Q] = PQ - QP`.
pub fn lie_bracket(p: &FreeSeries, q: &FreeSeries) -> Result<FreeSeries> {
    let pq = p.cauchy_mul(q)?;
    let qp = q.cauchy_mul(p)?;
    pq.try_add(&-qp)
}

/// Keeps exactly the coefficients of words using only variables in `keep`.
pub fn restrict(p: &FreeSeries, keep: &BTreeSet<Var>) -> FreeSeries {
    FreeSeries::from_terms(
        p.terms().filter(|(w, _)| w.letters().iter().all(|v| keep.contains(v))).map(|(w, c)| (w.clone(), c.clone())),
        p.cap(),
    )
}
