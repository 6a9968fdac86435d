//! Seeded randomized suites over the whole crate.
//!
//! Every suite returns a [`SuiteReport`] counting passes and failures per
//! named check, with the first failing instance kept as a witness.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::free::{binom_power, evaluate, exp_series, log_series, OrderedAlphabet, Var};
use crate::hahn::HahnSeries;
use crate::order::{Sign, TreeOrder};
use crate::random::{
    free_series_no_constant, free_unit, grid_exponent, hahn_series, labels, nonzero_small, signs, small_rational,
    t_element, t_element_nontrivial, tree_order,
};
use crate::rational::{int, rat, Rational};
use crate::tgroup::{
    agree, compose, decompose, group_compose, growth_order, homogeneity_check, invert, iterate, ordered_product_t,
    product_chain_multiplier, product_via_operator_expansion, recompose, Decomposition, GrowthOrder, Scale, SignStream,
    TElement,
};
use crate::{Error, Result};

/// Pass/fail counts for one named check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: String,
    pub passed: usize,
    pub failed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckOutcome {
    pub fn cases(&self) -> usize {
        self.passed + self.failed
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SuiteReport {
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn record(&mut self, check: &str, ok: bool, witness: impl FnOnce() -> String) {
        let idx = match self.checks.iter().position(|c| c.check == check) {
            Some(i) => i,
            None => {
                self.checks.push(CheckOutcome { check: check.to_string(), passed: 0, failed: 0, witness: None });
                self.checks.len() - 1
            }
        };
        let entry = &mut self.checks[idx];
        if ok {
            entry.passed += 1;
        } else {
            entry.failed += 1;
            if entry.witness.is_none() {
                entry.witness = Some(witness());
            }
        }
    }

    /// Records an outcome that may have errored; an error is a failure.
    pub fn record_result(&mut self, check: &str, outcome: Result<bool>, witness: impl FnOnce() -> String) {
        match outcome {
            Ok(ok) => self.record(check, ok, witness),
            Err(e) => self.record(check, false, || format!("{}: error: {e}", witness())),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }

    pub fn get(&self, check: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.check == check)
    }

    /// The smallest number of cases over all checks.
    pub fn min_cases(&self) -> usize {
        self.checks.iter().map(CheckOutcome::cases).min().unwrap_or(0)
    }

    pub fn merge(&mut self, other: SuiteReport) {
        for c in other.checks {
            match self.checks.iter_mut().find(|d| d.check == c.check) {
                Some(d) => {
                    d.passed += c.passed;
                    d.failed += c.failed;
                    if d.witness.is_none() {
                        d.witness = c.witness;
                    }
                }
                None => self.checks.push(c),
            }
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.failed == 0 { "pass" } else { "FAIL" };
            writeln!(f, "{status} {}: {}/{}", c.check, c.passed, c.cases())?;
            if let Some(w) = &c.witness {
                writeln!(f, "  witness: {w}")?;
            }
        }
        Ok(())
    }
}

/// Agreement above `bound`, where neither side may have lost precision
/// above `bound`.
fn same_above(a: &HahnSeries, b: &HahnSeries, bound: &Rational) -> bool {
    let sharp = |s: &HahnSeries| s.floor().is_none_or(|f| f <= bound);
    sharp(a) && sharp(b) && a.agrees_above(b, bound)
}

/// The exhaustive tree-order checks for every sign sequence of every length
/// up to `max_len`, plus reconstruction from every permutation.
pub fn tree_orders(max_len: usize) -> SuiteReport {
    let mut report = SuiteReport::default();
    for len in 0..=max_len {
        let sign_seqs: Vec<Vec<Sign>> =
            (0..len.saturating_sub(1)).map(|_| [Sign::Plus, Sign::Minus]).multi_cartesian_product().collect();
        let sign_seqs = if len <= 1 { vec![Vec::new()] } else { sign_seqs };
        for seq in sign_seqs {
            let t = TreeOrder::with_len(len, &seq).expect("length matches");
            check_tree_order(&mut report, &t);
        }
        let mut tree_like = 0usize;
        for perm in (0..len).permutations(len) {
            if let Ok(t) = TreeOrder::reconstruct(&perm) {
                tree_like += 1;
                report.record("linearize inverts reconstruction", t.linearize() == perm, || format!("{perm:?}"));
            }
        }
        let expected = if len == 0 { 1 } else { 1usize << (len - 1) };
        report.record("tree-like permutations counted", tree_like == expected, || {
            format!("length {len}: {tree_like} tree-like, expected {expected}")
        });
    }
    report
}

fn check_tree_order(report: &mut SuiteReport, t: &TreeOrder) {
    let n = t.len();
    let lt = |a: usize, b: usize| t.compare(a, b).expect("in range").is_lt();
    let witness = || format!("signs {:?}", t.signs());
    let strict = (0..n).all(|a| !lt(a, a))
        && (0..n).array_combinations().all(|[a, b]| lt(a, b) != lt(b, a))
        && (0..n)
            .permutations(3.min(n))
            .filter(|p| p.len() == 3)
            .all(|p| !(lt(p[0], p[1]) && lt(p[1], p[2])) || lt(p[0], p[2]));
    report.record("strict total order", strict, witness);
    let line = t.linearize();
    let consistent = line.iter().copied().sorted().eq(0..n) && line.windows(2).all(|w| lt(w[0], w[1]));
    report.record("linearization sorted by the order", consistent, witness);
    report.record("signs round trip", TreeOrder::reconstruct(&line).as_ref() == Ok(t), witness);
    for mu in 1..=n {
        let restricted: Vec<usize> = line.iter().copied().filter(|&i| i < mu).collect();
        for alpha in 0..mu {
            let positions: Vec<usize> = restricted.iter().positions(|&i| i >= alpha).collect();
            let convex = positions.windows(2).all(|w| w[1] == w[0] + 1);
            report.record("final intervals are convex", convex, || format!("{} alpha={alpha} mu={mu}", witness()));
            let (l, r) = t.segments(alpha, mu).expect("valid segment");
            let below: Vec<usize> = (0..alpha).filter(|&b| (alpha..mu).all(|g| lt(b, g))).collect();
            let above: Vec<usize> = (0..alpha).filter(|&b| (alpha..mu).all(|g| lt(g, b))).collect();
            let partition = l.len() + r.len() == alpha;
            report.record("segments match their definition", l == below && r == above && partition, || {
                format!("{} alpha={alpha} mu={mu}", witness())
            });
            for beta in 0..alpha {
                let (lb, rb) = t.segments(beta, mu).expect("valid segment");
                let (la, ra): (BTreeSet<usize>, BTreeSet<usize>) =
                    (l.iter().copied().collect(), r.iter().copied().collect());
                let initial = lb.iter().all(|i| la.contains(i))
                    && lb.iter().all(|&i| la.iter().filter(|j| !lb.contains(j)).all(|&j| lt(i, j)));
                let fin = rb.iter().all(|i| ra.contains(i))
                    && rb.iter().all(|&i| ra.iter().filter(|j| !rb.contains(j)).all(|&j| lt(j, i)));
                report.record("smaller blocks nest their segments", initial && fin, || {
                    format!("{} beta={beta} alpha={alpha} mu={mu}", witness())
                });
            }
        }
    }
}

/// `ev_{(op_{J_i})}(OP_I) = OP_J` for random ordered partitions of random
/// alphabets of size `1..=max_len`.
pub fn partition_identity(seed: u64, iterations: usize, max_len: usize, cap: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::default();
    for _ in 0..iterations {
        let n = rng.gen_range(1..=max_len);
        let j = labels(&mut rng, n);
        let blocks = rng.gen_range(1..=n + 1);
        let mut cuts: Vec<usize> = (0..blocks - 1).map(|_| rng.gen_range(0..=n)).collect();
        cuts.push(0);
        cuts.push(n);
        cuts.sort_unstable();
        let outer: Vec<Var> = (0..blocks as u32).map(|i| Var::Plain(500 + i)).collect();
        let subst: BTreeMap<Var, _> = cuts
            .windows(2)
            .zip(&outer)
            .map(|(w, &i)| {
                let block = OrderedAlphabet::new(j[w[0]..w[1]].to_vec()).expect("distinct labels");
                (i, block.op_series(cap).without_constant())
            })
            .collect();
        let whole = OrderedAlphabet::new(j.clone()).expect("distinct labels");
        let outer_op = OrderedAlphabet::new(outer).expect("distinct labels").op_series(cap);
        let outcome = evaluate(&outer_op, &subst, cap).map(|lhs| lhs == whole.op_series(cap));
        report.record_result("ordered partition", outcome, || format!("alphabet {j:?}, cuts {cuts:?}"));
    }
    report
}

/// `exp∘log`, `log∘exp` and the binomial power laws on random series.
pub fn free_laws(seed: u64, iterations: usize, cap: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::default();
    for _ in 0..iterations {
        let p = free_unit(&mut rng, cap);
        let eps = free_series_no_constant(&mut rng, 4, cap);
        let (a, b) = (small_rational(&mut rng, 3, 3), small_rational(&mut rng, 3, 3));
        let n = rng.gen_range(0..4usize);
        let w = || format!("p = {p}, eps = {eps}, a = {a}, b = {b}");
        report.record_result("exp(log(p)) = p", log_series(&p).and_then(|l| exp_series(&l)).map(|q| q == p), w);
        report.record_result("log(exp(eps)) = eps", exp_series(&eps).and_then(|e| log_series(&e)).map(|q| q == eps), w);
        let sum_law =
            (|| Ok(binom_power(&p, &a)?.cauchy_mul(&binom_power(&p, &b)?)? == binom_power(&p, &(&a + &b))?))();
        report.record_result("p^a p^b = p^(a+b)", sum_law, w);
        let prod_law = (|| Ok(binom_power(&binom_power(&p, &a)?, &b)? == binom_power(&p, &(&a * &b))?))();
        report.record_result("(p^a)^b = p^(ab)", prod_law, w);
        report.record_result("natural binomial powers", binom_power(&p, &int(n as i64)).map(|q| q == p.pow(n)), w);
    }
    report
}

fn positive_series<R: Rng>(rng: &mut R, max_terms: usize, lo: i64, hi: i64) -> HahnSeries {
    let a = hahn_series(rng, max_terms, lo, hi);
    match a.leading_coefficient() {
        Ok(c) if c.is_negative() => -a,
        _ => a,
    }
}

/// The chain rule, homogeneity of composition under powers and the
/// multiplier of ordered products, at floors `-1` down to `min_floor`.
pub fn chain_suite(seed: u64, iterations: usize, min_floor: i64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::default();
    let depth = min_floor.unsigned_abs().max(1) as i64;
    let top = rat(3, 4);
    for i in 0..iterations {
        let wf = int(-1 - (i as i64 % depth));
        let a = hahn_series(&mut rng, 4, -2, 3);
        let b = t_element(&mut rng, 3, -2, &top);
        let w = || format!("a = {a}, b = {b}, floor {wf}");
        let lhs = compose(&a, &b, &wf).derivative();
        let rhs = &b.series().derivative() * &compose(&a.derivative(), &b, &wf);
        let chain = same_above(&lhs, &rhs, &wf);
        report.record("chain rule", chain, w);

        let n = *[-3, -2, -1, 1, 2, 3].choose(&mut rng).expect("non-empty");
        // Keep the leading terms of a, a^n and a^2 above the floor, so the
        // comparison is not vacuous.
        let pos = loop {
            let pos = positive_series(&mut rng, 3, -2, 3);
            let v = pos.valuation().expect("exact and non-zero");
            if [int(1), int(2), int(n)].iter().all(|k| k * &v > wf) {
                break pos;
            }
        };
        let homog = homogeneity_check(&pos, &int(n), &b, &wf);
        let wh = || format!("a = {pos}, n = {n}, b = {b}, floor {wf}");
        report.record_result("homogeneity, integer powers", homog.clone(), wh);
        report.record("chain rule with homogeneity", chain && homog.unwrap_or(false), wh);
        let root = &pos * &pos;
        report.record_result("homogeneity, square roots", homogeneity_check(&root, &rat(1, 2), &b, &wf), || {
            format!("a = {root}, b = {b}, floor {wf}")
        });

        if i % 3 == 0 {
            let size = rng.gen_range(1..=3);
            let fam: Vec<TElement> = (0..size).map(|_| t_element(&mut rng, 2, -2, &top)).collect();
            let order = tree_order(&mut rng, size);
            let outcome = (|| {
                let p = ordered_product_t(&fam, &order, &wf)?;
                Ok(agree(&p.series().derivative(), &product_chain_multiplier(&fam, &order, &wf)?))
            })();
            report.record_result("product multiplier", outcome, || format!("{} along {order}", show(&fam)));
        }
    }
    report
}

fn show(fam: &[TElement]) -> String {
    fam.iter().map(|a| format!("[{a}]")).join(", ")
}

fn exp_of(go: &GrowthOrder) -> Option<&Rational> {
    match go {
        GrowthOrder::Term { exp, .. } => Some(exp),
        GrowthOrder::Zero => None,
    }
}

/// Checks the composition law for growth orders on one pair and returns
/// the check it falls under.
fn growth_law(a: &TElement, b: &TElement, wf: &Rational) -> (&'static str, Result<bool>) {
    let (ga, gb) = match (growth_order(a), growth_order(b)) {
        (Ok(ga), Ok(gb)) => (ga, gb),
        (Err(e), _) | (_, Err(e)) => return ("go(a∘b), dominant factor", Err(e)),
    };
    let (GrowthOrder::Term { coef: ca, exp: ea }, GrowthOrder::Term { coef: cb, exp: eb }) = (&ga, &gb) else {
        return ("go(a∘b), dominant factor", Err(Error::NotInT("trivial factor".into())));
    };
    let c = group_compose(a, b, wf).and_then(|c| growth_order(&c).map(|g| (g, c)));
    if ea != eb {
        let expected = if ea > eb { &ga } else { &gb };
        return ("go(a∘b), dominant factor", c.map(|(g, _)| &g == expected));
    }
    let sum = ca + cb;
    if !sum.is_zero() {
        let expected = GrowthOrder::Term { coef: sum, exp: ea.clone() };
        return ("go(a∘b), equal exponents", c.map(|(g, _)| g == expected));
    }
    // Cancellation: what is left must be strictly smaller than x^e. When
    // nothing is left above the floor, the floor itself lies below e.
    let outcome = match group_compose(a, b, wf) {
        Ok(comp) => match growth_order(&comp) {
            Ok(g) => Ok(exp_of(&g).is_none_or(|e| e < ea)),
            Err(Error::Indeterminate) => Ok(comp.floor().is_some_and(|f| f < ea)),
            Err(e) => Err(e),
        },
        Err(e) => Err(e),
    };
    ("go(a∘b), cancellation", outcome)
}

/// A factor whose growth order has exponent `e` and coefficient `c`, with
/// random lower terms.
fn with_growth<R: Rng>(rng: &mut R, c: Rational, e: &Rational) -> TElement {
    let rest = t_element(rng, 2, -2, &rat(3, 4)).delta();
    let lower = HahnSeries::from_terms(rest.terms().iter().filter(|(x, _)| x < e).cloned(), None);
    TElement::new(&(&HahnSeries::x() + &HahnSeries::term(c, e.clone())) + &lower).expect("exponents below 1")
}

/// The growth-order laws for composition, iteration and ordered products.
pub fn growth_suite(seed: u64, iterations: usize, floor: &Rational) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::default();
    let top = rat(3, 4);
    for _ in 0..iterations {
        let a = t_element_nontrivial(&mut rng, 3, -2, &top);
        let b = t_element_nontrivial(&mut rng, 3, -2, &top);
        let (check, outcome) = growth_law(&a, &b, floor);
        report.record_result(check, outcome, || format!("a = {a}, b = {b}"));

        let Ok(GrowthOrder::Term { coef, exp }) = growth_order(&a) else { unreachable!("a is exact and not x") };
        let mut other = nonzero_small(&mut rng);
        if other == -&coef {
            other = -other;
        }
        let same = with_growth(&mut rng, other, &exp);
        let (check, outcome) = growth_law(&a, &same, floor);
        report.record_result(check, outcome, || format!("a = {a}, b = {same}"));
        let opposite = with_growth(&mut rng, -&coef, &exp);
        let (check, outcome) = growth_law(&a, &opposite, floor);
        report.record_result(check, outcome, || format!("a = {a}, b = {opposite}"));

        let mut e = small_rational(&mut rng, 3, 4);
        if e.is_zero() {
            e = rat(1, 2);
        }
        let outcome = iterate(&a, &e, floor)
            .and_then(|it| growth_order(&it))
            .map(|g| g == (GrowthOrder::Term { coef: coef.clone(), exp: exp.clone() }).scaled(&e));
        report.record_result("go(a^[e]) = e·go(a)", outcome, || format!("a = {a}, e = {e}"));

        let size = rng.gen_range(1..=3);
        let fam: Vec<TElement> = (0..size).map(|_| t_element_nontrivial(&mut rng, 3, -2, &top)).collect();
        let exps: Vec<Rational> = fam.iter().map(|m| m.delta().valuation().expect("non-trivial")).collect();
        if exps.iter().all_unique() {
            let order = tree_order(&mut rng, size);
            let lead = exps.iter().position_max().expect("non-empty");
            let outcome =
                ordered_product_t(&fam, &order, floor).and_then(|p| Ok(growth_order(&p)? == growth_order(&fam[lead])?));
            report.record_result("go of a product is go of its leading member", outcome, || {
                format!("{} along {order}", show(&fam))
            });
        }
    }
    report
}

/// The operator expansion against the direct ordered product, on random
/// families of up to three members.
pub fn expansion_suite(seed: u64, iterations: usize, floor: &Rational) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::default();
    for _ in 0..iterations {
        let size = rng.gen_range(1..=3);
        let fam: Vec<TElement> = (0..size).map(|_| t_element(&mut rng, 3, -2, &rat(3, 4))).collect();
        let order = tree_order(&mut rng, size);
        let outcome = (|| {
            let direct = ordered_product_t(&fam, &order, floor)?;
            let expanded = product_via_operator_expansion(&fam, &order, floor, size)?;
            Ok(same_above(direct.series(), expanded.series(), floor))
        })();
        report.record_result("operator expansion", outcome, || format!("{} along {order}", show(&fam)));
    }
    report
}

fn stream_name(s: &SignStream) -> &'static str {
    match s {
        SignStream::Left => "left",
        SignStream::Right => "right",
        SignStream::Alternating => "alt",
        SignStream::Explicit(_) => "random",
    }
}

/// A random decomposition with at most `max_len` steps, all exponents
/// strictly above `floor`.
pub fn random_decomposition<R: Rng>(rng: &mut R, scale: Scale, max_len: usize, floor: &Rational) -> Decomposition {
    let lo = floor.floor().to_integer().try_into().unwrap_or(-3i64) + 1;
    let len = rng.gen_range(1..=max_len);
    let mut exps: Vec<Rational> = Vec::new();
    while exps.len() < len {
        let e = grid_exponent(rng, lo, 1);
        if &e > floor && !exps.contains(&e) {
            exps.push(e);
        }
    }
    exps.sort_unstable_by(|a, b| b.cmp(a));
    let steps = exps
        .into_iter()
        .map(|e| {
            let mut c = small_rational(rng, 3, 3);
            if c.is_zero() {
                c = Rational::one();
            }
            (e, c)
        })
        .collect();
    let order = tree_order(rng, len);
    Decomposition::new(scale, order, steps, floor.clone()).expect("generated steps are valid")
}

/// Decomposition round trips: `decompose` then `recompose` returns the
/// input, and `recompose` then `decompose` returns the steps and signs.
pub fn roundtrip_suite(seed: u64, iterations: usize, floor: &Rational) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::default();
    for _ in 0..iterations {
        let a = t_element(&mut rng, 4, -2, &rat(3, 4));
        let random = SignStream::Explicit(signs(&mut rng, 6));
        for scale in [Scale::S0, Scale::S1] {
            for stream in [SignStream::Left, SignStream::Right, SignStream::Alternating, random.clone()] {
                let outcome = (|| {
                    let d = decompose(&a, scale, &stream, floor)?;
                    let back = recompose(&d, floor)?;
                    Ok(same_above(a.series(), back.series(), floor))
                })();
                let name = format!("decompose then recompose, {scale}, {}", stream_name(&stream));
                report.record_result(&name, outcome, || format!("a = {a}, floor {floor}"));
            }
            let d = random_decomposition(&mut rng, scale, 6, floor);
            let outcome = (|| {
                let a = recompose(&d, floor)?;
                let mut steps = d.signs.signs().to_vec();
                steps.push(Sign::Plus);
                let again = decompose(&a, scale, &SignStream::Explicit(steps), floor)?;
                Ok(again.steps == d.steps && again.signs == d.signs)
            })();
            report.record_result(&format!("recompose then decompose, {scale}"), outcome, || {
                serde_json::to_string(&d).unwrap_or_default()
            });
        }
    }
    report
}

/// Every floored operation recomputed at a finer working floor agrees
/// with its coarse value above the coarse floor.
pub fn refine_suite(seed: u64, iterations: usize, coarse: &Rational, fine: &Rational) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::default();
    let top = rat(3, 4);
    for _ in 0..iterations {
        let a = hahn_series(&mut rng, 4, -2, 3);
        let b = hahn_series(&mut rng, 4, -2, 3);
        let s = t_element(&mut rng, 3, -2, &top);
        let t = t_element_nontrivial(&mut rng, 3, -2, &top);
        let wab = || format!("a = {a}, b = {b}");

        let pair =
            |f: &dyn Fn(&Rational) -> Result<HahnSeries>| -> Result<bool> { Ok(f(coarse)?.refines_to(&f(fine)?)) };

        report.record_result("inverse", pair(&|w| a.field_inverse(w)), wab);
        let unit_lead = a.scale(&a.leading_coefficient().expect("non-zero").recip());
        let e = [rat(1, 2), rat(1, 3), rat(3, 2), int(-1), int(-2)][rng.gen_range(0..5)].clone();
        report.record_result("power", pair(&|w| unit_lead.power(&e, w)), || format!("a = {unit_lead}, e = {e}"));
        report.record_result("product of truncated inputs", pair(&|w| Ok(&a.with_floor(w) * &b.with_floor(w))), wab);
        report.record_result("sum of truncated inputs", pair(&|w| Ok(&a.with_floor(w) + &b.with_floor(w))), wab);
        report.record_result("derivative of truncated input", pair(&|w| Ok(a.with_floor(w).derivative())), wab);
        let wst = || format!("a = {a}, s = {s}, t = {t}");
        report.record_result("compose", pair(&|w| Ok(compose(&a, &t, w))), wst);
        report.record_result(
            "compose of truncated inputs",
            pair(&|w| Ok(compose(&a.with_floor(w), &t.with_floor(w), w))),
            wst,
        );
        report.record_result("group compose", pair(&|w| Ok(group_compose(&s, &t, w)?.into_series())), wst);
        report.record_result("invert", pair(&|w| Ok(invert(&t, w)?.into_series())), wst);
        let e = small_rational(&mut rng, 3, 4);
        report
            .record_result("iterate", pair(&|w| Ok(iterate(&t, &e, w)?.into_series())), || format!("t = {t}, e = {e}"));

        let size = rng.gen_range(1..=3);
        let fam: Vec<TElement> = (0..size).map(|_| t_element(&mut rng, 2, -2, &top)).collect();
        let order = tree_order(&mut rng, size);
        let wfam = || format!("{} along {order}", show(&fam));
        report.record_result("ordered product", pair(&|w| Ok(ordered_product_t(&fam, &order, w)?.into_series())), wfam);
        report.record_result(
            "operator expansion",
            pair(&|w| Ok(product_via_operator_expansion(&fam, &order, w, size)?.into_series())),
            wfam,
        );

        let scale = if rng.gen_bool(0.5) { Scale::S0 } else { Scale::S1 };
        let d = random_decomposition(&mut rng, scale, 4, coarse);
        report.record_result(
            "recompose",
            pair(&|w| Ok(recompose(&Decomposition { floor: w.clone(), ..d.clone() }, w)?.into_series())),
            || serde_json::to_string(&d).unwrap_or_default(),
        );
        let stream = SignStream::Explicit(signs(&mut rng, 4));
        let prefix = (|| {
            let c = decompose(&t, scale, &stream, coarse)?;
            let f = decompose(&t, scale, &stream, fine)?;
            let kept = f.steps.iter().take_while(|(e, _)| e > coarse).count();
            Ok(c.steps[..] == f.steps[..kept])
        })();
        report.record_result("decompose", prefix, || format!("t = {t}, {scale}"));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_counts_and_witness() {
        let mut r = SuiteReport::default();
        r.record("x", true, || unreachable!());
        r.record("x", false, || "first".into());
        r.record("x", false, || "second".into());
        let c = r.get("x").unwrap();
        assert_eq!((c.passed, c.failed, c.witness.as_deref()), (1, 2, Some("first")));
        assert!(!r.all_pass());
        r.record_result("y", Err(Error::Indeterminate), || "w".into());
        assert!(r.get("y").unwrap().witness.as_deref().unwrap().contains("error"));
    }

    #[test]
    fn small_runs_pass() {
        let w = int(-3);
        for report in [
            tree_orders(4),
            partition_identity(1, 20, 4, 3),
            free_laws(1, 20, 4),
            chain_suite(1, 10, -3),
            growth_suite(1, 10, &w),
            expansion_suite(1, 10, &w),
            roundtrip_suite(1, 3, &w),
            refine_suite(1, 5, &w, &int(-5)),
        ] {
            assert!(report.all_pass(), "{report}");
        }
    }
}
