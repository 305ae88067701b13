//! Property suites behind `seqcalc verify`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::alpha::alpha_input_len;
use crate::darcais::{darcais_bell, darcais_exp, darcais_product, tau_multiplicativity_experiment};
use crate::dirichlet::verify_f_homomorphism;
use crate::error::Result;
use crate::phi::phi_plus;
use crate::series::{cauchy_mul, cw_add, Seq};

pub const SUITES: [&str; 4] = ["iso", "tau-mult", "f-hom", "darcais-triple"];

const RANDOM_CASES: usize = 100;

/// Result of one suite run.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub bound: usize,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn human(&self) -> String {
        let mut out = format!(
            "{}: {} cases at bound {}, {} failures\n",
            self.suite,
            self.cases,
            self.bound,
            self.failures.len()
        );
        for f in &self.failures {
            out.push_str(&format!("  counterexample: {f}\n"));
        }
        out.push_str(if self.passes() { "PASS\n" } else { "FAIL\n" });
        out
    }

    pub fn json(&self) -> Value {
        json!({
            "suite": self.suite,
            "bound": self.bound,
            "cases": self.cases,
            "failures": self.failures,
            "pass": self.passes(),
        })
    }
}

pub fn default_bound(suite: &str) -> usize {
    match suite {
        "iso" => 14,
        "tau-mult" => 60,
        "f-hom" => 64,
        _ => 30,
    }
}

fn random_ints(rng: &mut ChaCha8Rng, len: usize, lead: Option<i64>) -> Seq {
    Seq::from_ints((0..len).map(|i| match (i, lead) {
        (0, Some(v)) => v,
        _ => rng.gen_range(-5..=5),
    }))
}

/// `phi(a + b) = phi(a) * phi(b)` on random exponents in `[-5, 5]`.
pub fn iso(bound: usize, seed: u64) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = bound.saturating_sub(1).max(1);
    let mut failures = Vec::new();
    for _ in 0..RANDOM_CASES {
        let a = random_ints(&mut rng, len, None);
        let b = random_ints(&mut rng, len, None);
        let lhs = phi_plus(&cw_add(&a, &b)?, bound)?;
        let rhs = cauchy_mul(&phi_plus(&a, bound)?, &phi_plus(&b, bound)?)?;
        if lhs != rhs {
            failures.push(format!("a={a} b={b}"));
        }
    }
    Ok(SuiteReport { suite: "iso", bound, cases: RANDOM_CASES, failures })
}

pub fn tau_mult(bound: usize) -> Result<SuiteReport> {
    let report = tau_multiplicativity_experiment(bound)?;
    let failures = report
        .failures()
        .map(|e| format!("m={} n={} residual(-24)={}", e.m, e.n, e.value_at_minus_24))
        .collect();
    Ok(SuiteReport { suite: "tau-mult", bound, cases: report.entries.len(), failures })
}

/// `F(a * b) = F(a) (.) F(b)` on random leading-1 integer sequences.
pub fn f_hom(bound: usize, seed: u64) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = alpha_input_len(bound);
    let mut failures = Vec::new();
    for _ in 0..RANDOM_CASES {
        let a = random_ints(&mut rng, len, Some(1));
        let b = random_ints(&mut rng, len, Some(1));
        let report = verify_f_homomorphism(&a, &b, bound)?;
        if !report.passes() {
            failures.push(format!("a={a} b={b} at n={:?}", report.mismatches));
        }
    }
    Ok(SuiteReport { suite: "f-hom", bound, cases: RANDOM_CASES, failures })
}

pub fn darcais_triple(bound: usize) -> Result<SuiteReport> {
    let product = darcais_product(bound)?;
    let bell = darcais_bell(bound)?;
    let exp = darcais_exp(bound)?;
    let failures = (0..bound)
        .filter(|&i| product[i] != bell[i] || product[i] != exp[i])
        .map(|i| format!("n={}: product={} bell={} exp={}", i + 1, product[i].poly, bell[i].poly, exp[i].poly))
        .collect();
    Ok(SuiteReport { suite: "darcais-triple", bound, cases: bound, failures })
}

pub fn run_suite(suite: &str, bound: usize, seed: u64) -> Option<Result<SuiteReport>> {
    Some(match suite {
        "iso" => iso(bound, seed),
        "tau-mult" => tau_mult(bound),
        "f-hom" => f_hom(bound, seed),
        "darcais-triple" => darcais_triple(bound),
        _ => return None,
    })
}
