//! Laurent-phenomenon verification: symbolic runs where every exchange
//! division is an exact Laurent-polynomial division, cross-checked against a
//! numeric all-ones run by evaluation.

use std::collections::BTreeMap;

use exact_arith::{rat_int, LaurentPoly, Rational};
use model_zoo::{ones_seed, symbolic_seed, Model, ZooError};
use num::One;
use seed_dynamics::{mutate_seed_free, ScheduleKind};

use crate::report::VerificationReport;

/// Outcome of a symbolic run: the reports plus the produced polynomials in
/// mutation order (for term-count oracles).
pub struct LaurentCheck {
    pub reports: Vec<VerificationReport>,
    pub polys: Vec<LaurentPoly>,
}

/// Mutation order for `mutations` steps: cyclic schedules repeat their
/// batch cycle, finite schedules are truncated to their full event list.
fn mutation_order(model: &Model, mutations: usize) -> Vec<usize> {
    match &model.schedule.kind {
        ScheduleKind::Cyclic(batches) => {
            let cycle: Vec<usize> = batches.iter().flatten().copied().collect();
            cycle.iter().cycle().take(mutations).copied().collect()
        }
        ScheduleKind::Finite(sweeps) => sweeps
            .iter()
            .flatten()
            .flatten()
            .take(mutations)
            .copied()
            .collect(),
    }
}

/// Runs `mutations` coefficient-free mutations symbolically (the Laurent
/// check: every produced value must be a Laurent polynomial in the initial
/// cluster) and numerically from all ones, recording the evaluation
/// cross-check poly(1, ..., 1) = numeric value at every step.
pub fn check_laurent(model: &Model, mutations: usize) -> Result<LaurentCheck, ZooError> {
    let order = mutation_order(model, mutations);
    let mut laurent = VerificationReport::new(format!("laurent property: {}", model.name));
    let mut eval = VerificationReport::new(format!("all-ones evaluation: {}", model.name));
    if order.len() < mutations {
        laurent.warn(format!(
            "finite schedule provides only {} mutations of {mutations} requested",
            order.len()
        ));
    }

    let mut sym = symbolic_seed(model);
    let mut num = ones_seed(model, false)?;
    let ones: BTreeMap<String, Rational> = (1..=model.n())
        .map(|i| (format!("x{i}"), Rational::one()))
        .collect();
    let mut polys = Vec::new();
    for (step, &k) in order.iter().enumerate() {
        match mutate_seed_free(&sym, k) {
            Ok(next) => {
                let poly = next.x[k]
                    .as_poly()
                    .expect("symbolic mutation yields polynomials")
                    .clone();
                laurent.record_ok();
                num = mutate_seed_free(&num, k)?;
                let at_ones = poly.eval(&ones).map_err(|e| ZooError::Numeric(e.to_string()))?;
                eval.record(
                    format!("step {step} at vertex {}", k + 1),
                    &at_ones,
                    num.x[k].as_rat().unwrap_or(&rat_int(0)),
                );
                polys.push(poly);
                sym = next;
            }
            Err(e) => {
                // A failed exact division is precisely a Laurent violation.
                laurent.record_failure(
                    format!("step {step} at vertex {}", k + 1),
                    "laurent polynomial",
                    e.to_string(),
                );
                break;
            }
        }
    }
    Ok(LaurentCheck {
        reports: vec![laurent.finish(), eval.finish()],
        polys,
    })
}
