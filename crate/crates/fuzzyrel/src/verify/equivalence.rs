//! Randomized agreement check between the two evaluation routes.
//!
//! Expressions can be evaluated either set-at-a-time (building whole
//! fuzzy sets for every subexpression) or element-at-a-time (composing
//! degree kernels per universe element). Both routes must produce
//! bit-identical degrees; this harness drives them with random
//! expressions, universes, and membership tables.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dsl::{eval_degree, eval_set, format_expr, DegreeBindings, Expr};
use crate::ops::{BinaryOp, QuotientMode};
use crate::set::{FuzzySet, Universe};

/// Outcome of a randomized route-agreement run.
#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    pub trials: u32,
    /// Trials whose element degrees were compared bit for bit.
    pub compared: u32,
    /// Trials where both routes failed on the same input (a strict
    /// quotient by a zero degree).
    pub skipped: u32,
    /// Descriptions of any disagreements (capped at 20).
    pub mismatches: Vec<String>,
}

const VAR_NAMES: [&str; 3] = ["A", "B", "C"];
const MISMATCH_CAP: usize = 20;

fn unit(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64
}

/// A degree biased toward the endpoints, to stress clamping and the
/// quotient's zero-divisor paths.
fn degree(rng: &mut ChaCha8Rng) -> f64 {
    let r = unit(rng);
    if r < 0.15 {
        0.0
    } else if r > 0.85 {
        1.0
    } else {
        (r - 0.15) / 0.7
    }
}

fn pick(rng: &mut ChaCha8Rng, n: usize) -> usize {
    (rng.next_u64() % n as u64) as usize
}

fn random_expr(rng: &mut ChaCha8Rng, depth: u32) -> Expr {
    if depth == 0 || pick(rng, 4) == 0 {
        return match pick(rng, 5) {
            0 => Expr::Universal,
            1 => Expr::Empty,
            k => Expr::Var(VAR_NAMES[k - 2].to_string()),
        };
    }
    match pick(rng, 10) {
        k @ 0..=7 => Expr::Binary(
            BinaryOp::ALL[k],
            Box::new(random_expr(rng, depth - 1)),
            Box::new(random_expr(rng, depth - 1)),
        ),
        8 => Expr::Scale(unit(rng), Box::new(random_expr(rng, depth - 1))),
        _ => Expr::Power(Box::new(random_expr(rng, depth - 1)), 3.0 * unit(rng)),
    }
}

/// Runs `trials` random comparisons of `eval_set` against per-element
/// `eval_degree`, on universes of one to three elements.
pub fn set_kernel_equivalence(trials: u32, seed: u64, mode: QuotientMode) -> EquivalenceReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = EquivalenceReport {
        trials,
        compared: 0,
        skipped: 0,
        mismatches: Vec::new(),
    };
    let names: Vec<String> = VAR_NAMES.iter().map(|s| s.to_string()).collect();
    for trial in 0..trials {
        let expr = random_expr(&mut rng, 4);
        let size = 1 + pick(&mut rng, 3);
        let labels: Vec<String> = (0..size).map(|i| format!("e{i}")).collect();
        let universe = Universe::new(labels).expect("generated labels are distinct");
        let mut table = vec![vec![0.0f64; size]; names.len()];
        let mut env = BTreeMap::new();
        for (v, name) in names.iter().enumerate() {
            for slot in table[v].iter_mut() {
                *slot = degree(&mut rng);
            }
            env.insert(
                name.clone(),
                FuzzySet::new(Arc::clone(&universe), &table[v])
                    .expect("generated degrees are in range"),
            );
        }
        let whole_set = eval_set(&expr, &universe, &env, mode);
        let per_element: Vec<_> = (0..size)
            .map(|e| {
                let values: Vec<f64> = (0..names.len()).map(|v| table[v][e]).collect();
                eval_degree(&expr, DegreeBindings::new(&names, &values), mode)
            })
            .collect();
        match whole_set {
            Ok(set) => {
                let mut agreed = true;
                for (e, result) in per_element.iter().enumerate() {
                    let matches = matches!(
                        result,
                        Ok(v) if v.to_bits() == set.degree_at(e).value().to_bits()
                    );
                    if !matches {
                        agreed = false;
                        if report.mismatches.len() < MISMATCH_CAP {
                            report.mismatches.push(format!(
                                "trial {trial}, element {e}: set route gave {}, \
                                 degree route gave {:?} for {}",
                                set.degree_at(e).value(),
                                result,
                                format_expr(&expr),
                            ));
                        }
                    }
                }
                if agreed {
                    report.compared += 1;
                }
            }
            Err(_) => {
                if per_element.iter().any(|r| r.is_err()) {
                    report.skipped += 1;
                } else if report.mismatches.len() < MISMATCH_CAP {
                    report.mismatches.push(format!(
                        "trial {trial}: set route failed but every element \
                         evaluated for {}",
                        format_expr(&expr),
                    ));
                }
            }
        }
    }
    report
}
