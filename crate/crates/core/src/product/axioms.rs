//! Randomized checks of the ordered-product axioms on finite families.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use super::{ordered_product, plain_product, twist, OrderedFamily};
use crate::free::{inverse_unit, FreeSeries, Var};
use crate::random::{free_series_no_constant, free_unit, labels};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomOutcome {
    pub axiom: &'static str,
    pub status: Status,
    /// First failing instance, if any.
    pub witness: Option<Value>,
    #[serde(skip)]
    pub instances: usize,
}

#[derive(Debug, Clone, Serialize)]
#[serde(transparent)]
pub struct AxiomReport {
    pub outcomes: Vec<AxiomOutcome>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(|o| o.status == Status::Pass)
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomOutcome> {
        self.outcomes.iter().find(|o| o.axiom == axiom)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            let status = match o.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            };
            writeln!(f, "{:<9} {} ({} instances)", o.axiom, status, o.instances)?;
            if let Some(w) = &o.witness {
                writeln!(f, "  witness: {w}")?;
            }
        }
        Ok(())
    }
}

pub const AXIOMS: [&str; 8] = ["MG1", "MG2", "MG3", "MG4", "MG5", "MG6", "MG7", "Fullness"];

fn family_json(fam: &OrderedFamily) -> Value {
    Value::Array(fam.entries().map(|(v, m)| json!({"index": v.to_string(), "member": m.to_string()})).collect())
}

fn random_family(rng: &mut ChaCha8Rng, cap: usize, max_indices: usize) -> OrderedFamily {
    let n = rng.gen_range(0..=max_indices);
    let labels = labels(rng, n);
    family_over(rng, labels, cap)
}

fn family_over(rng: &mut ChaCha8Rng, labels: Vec<Var>, cap: usize) -> OrderedFamily {
    let entries = labels.into_iter().map(|v| (v, free_unit(rng, cap))).collect();
    OrderedFamily::new(cap, entries).expect("generated members are units")
}

/// Runs every axiom check on `iterations` random instances. Failures are
/// recorded in the report, never raised.
pub fn verify_axioms(seed: u64, iterations: usize, cap: usize, max_indices: usize) -> AxiomReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outcomes: Vec<AxiomOutcome> =
        AXIOMS.iter().map(|&axiom| AxiomOutcome { axiom, status: Status::Pass, witness: None, instances: 0 }).collect();
    for _ in 0..iterations {
        let f = random_family(&mut rng, cap, max_indices);
        let checks: [Option<Value>; 8] = [
            check_twist(&mut rng, &f),
            check_plain(&f),
            check_relabel(&mut rng, &f),
            check_partition(&mut rng, &f),
            check_concat(&mut rng, &f, max_indices),
            check_conjugation(&mut rng, &f),
            check_reversal(&f),
            check_reordering(&mut rng, &f),
        ];
        for (outcome, failure) in outcomes.iter_mut().zip(checks) {
            outcome.instances += 1;
            if let Some(w) = failure {
                if outcome.status == Status::Pass {
                    outcome.status = Status::Fail;
                    outcome.witness = Some(w);
                }
            }
        }
    }
    AxiomReport { outcomes }
}

fn expect_equal(lhs: &FreeSeries, rhs: &FreeSeries, witness: impl FnOnce() -> Value) -> Option<Value> {
    if lhs == rhs {
        None
    } else {
        let mut w = witness();
        w["lhs"] = json!(lhs.to_string());
        w["rhs"] = json!(rhs.to_string());
        Some(w)
    }
}

/// `Π(f·g) = Π f · Π f[g]`.
fn check_twist(rng: &mut ChaCha8Rng, f: &OrderedFamily) -> Option<Value> {
    let g = family_over(rng, f.order().vars().to_vec(), f.cap());
    let lhs = ordered_product(&f.pointwise_mul(&g).expect("same order"));
    let rhs = &ordered_product(f) * &ordered_product(&twist(f, &g).expect("same order"));
    expect_equal(&lhs, &rhs, || json!({"f": family_json(f), "g": family_json(&g)}))
}

/// Finite families multiply left to right.
fn check_plain(f: &OrderedFamily) -> Option<Value> {
    expect_equal(&ordered_product(f), &plain_product(f), || json!({"f": family_json(f)}))
}

/// Transport along an order isomorphism onto fresh labels.
fn check_relabel(rng: &mut ChaCha8Rng, f: &OrderedFamily) -> Option<Value> {
    let fresh: Vec<Var> = labels(rng, f.len())
        .into_iter()
        .map(|v| match v {
            Var::Plain(i) => Var::Plain(i + 1000),
            other => other,
        })
        .collect();
    let g = f.relabeled(fresh).expect("fresh labels are distinct");
    expect_equal(
        &ordered_product(f),
        &ordered_product(&g),
        || json!({"f": family_json(f), "relabeled": family_json(&g)}),
    )
}

/// Cuts the index order into consecutive blocks and multiplies the block
/// products along the order of blocks.
fn check_partition(rng: &mut ChaCha8Rng, f: &OrderedFamily) -> Option<Value> {
    let n = f.len();
    let mut cuts: Vec<usize> = (1..n).filter(|_| rng.gen_bool(0.5)).collect();
    cuts.insert(0, 0);
    cuts.push(n);
    cuts.dedup();
    let blocks: Vec<FreeSeries> = cuts.windows(2).map(|w| ordered_product(&f.slice(w[0]..w[1]))).collect();
    let outer = OrderedFamily::indexed(f.cap(), blocks).expect("block products are units");
    expect_equal(&ordered_product(&outer), &ordered_product(f), || json!({"f": family_json(f), "cuts": cuts}))
}

/// Product over an ordered sum is the product of the two products.
fn check_concat(rng: &mut ChaCha8Rng, f: &OrderedFamily, max_indices: usize) -> Option<Value> {
    let m = rng.gen_range(0..=max_indices);
    let second: Vec<Var> = labels(rng, m)
        .into_iter()
        .map(|v| match v {
            Var::Plain(i) => Var::Plain(i + 2000),
            other => other,
        })
        .collect();
    let g = family_over(rng, second, f.cap());
    let joined = match f.concat(&g) {
        Ok(j) => j,
        Err(e) => return Some(json!({"f": family_json(f), "g": family_json(&g), "error": e.to_string()})),
    };
    let rhs = &ordered_product(f) * &ordered_product(&g);
    expect_equal(&ordered_product(&joined), &rhs, || json!({"f": family_json(f), "g": family_json(&g)}))
}

/// Conjugating every member conjugates the product.
fn check_conjugation(rng: &mut ChaCha8Rng, f: &OrderedFamily) -> Option<Value> {
    let unit = &FreeSeries::one(f.cap()) + &free_series_no_constant(rng, 3, f.cap());
    let conj = f.conjugated(&unit).expect("unit is invertible");
    let rhs = &(&unit * &ordered_product(f)) * &inverse_unit(&unit).expect("unit is invertible");
    expect_equal(&ordered_product(&conj), &rhs, || json!({"f": family_json(f), "unit": unit.to_string()}))
}

/// Reversing the order and inverting the members inverts the product;
/// doing it twice gives the product back.
fn check_reversal(f: &OrderedFamily) -> Option<Value> {
    let once = f.inverses().reversed();
    let p = ordered_product(f);
    let inv = inverse_unit(&p).expect("product is a unit");
    if let Some(w) = expect_equal(&ordered_product(&once), &inv, || json!({"f": family_json(f)})) {
        return Some(w);
    }
    let twice = once.inverses().reversed();
    expect_equal(&ordered_product(&twice), &p, || json!({"f": family_json(f), "step": "involution"}))
}

/// The same members are multipliable along any reordering of the index set,
/// and multiply left to right there too.
fn check_reordering(rng: &mut ChaCha8Rng, f: &OrderedFamily) -> Option<Value> {
    let mut entries: Vec<(Var, FreeSeries)> = f.entries().map(|(v, m)| (v, m.clone())).collect();
    entries.shuffle(rng);
    match OrderedFamily::new(f.cap(), entries) {
        Ok(g) => expect_equal(
            &ordered_product(&g),
            &plain_product(&g),
            || json!({"f": family_json(f), "reordered": family_json(&g)}),
        ),
        Err(e) => Some(json!({"f": family_json(f), "error": e.to_string()})),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let report = verify_axioms(7, 30, 3, 3);
        assert!(report.all_pass(), "{report}");
        assert_eq!(report.outcomes.len(), 8);
        assert!(report.outcomes.iter().all(|o| o.instances == 30));
    }

    #[test]
    fn empty_families_pass() {
        let report = verify_axioms(1, 10, 3, 0);
        assert!(report.all_pass());
    }

    #[test]
    fn json_shape() {
        let report = verify_axioms(3, 2, 2, 2);
        let v = serde_json::to_value(&report).unwrap();
        assert_eq!(v[0]["axiom"], "MG1");
        assert_eq!(v[0]["status"], "pass");
        assert!(v[0]["witness"].is_null());
    }
}
