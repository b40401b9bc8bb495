use std::collections::BTreeMap;

use exact_arith::Rational;
use quiver_core::quiver_to_json;
use serde_json::json;

use crate::schedule::{Label, MutationSchedule, ScheduleKind};
use crate::seed::{extract_bilinear_coefficients, mutate_seed, mutate_seed_free, Seed, SeedError};
use crate::value::Value;

/// One executed mutation: which vertex, in which sweep, the label and value
/// of the produced cluster variable, the two exchange monomials, and in
/// coefficient mode the pre-mutation coefficient that was recorded.
#[derive(Clone, Debug)]
pub struct StepRecord {
    pub sweep: usize,
    pub vertex: usize,
    pub label: Label,
    pub value: Value,
    pub out_monomial: Value,
    pub in_monomial: Value,
    pub coefficient: Option<(Label, Rational)>,
}

/// The labeled view plus the flat step log of a schedule run. Verifiers
/// consume only the labeled maps.
#[derive(Clone, Debug)]
pub struct Trajectory {
    pub x: BTreeMap<Label, Value>,
    pub y: BTreeMap<Label, Rational>,
    /// Per produced-variable `(a, b)` pair from
    /// [`extract_bilinear_coefficients`], coefficient mode only.
    pub coeff_pairs: BTreeMap<Label, (Rational, Rational)>,
    pub steps: Vec<StepRecord>,
    pub final_seed: Seed,
    /// Final cluster-variable label of each vertex.
    pub final_xlabels: Vec<Label>,
    /// Final coefficient label of each vertex.
    pub final_ylabels: Vec<Label>,
}

fn record_x(map: &mut BTreeMap<Label, Value>, label: Label, v: Value) -> Result<(), SeedError> {
    if map.insert(label.clone(), v).is_some() {
        return Err(SeedError::DuplicateLabel(label.to_string()));
    }
    Ok(())
}

fn record_y(map: &mut BTreeMap<Label, Rational>, label: Label, v: Rational) -> Result<(), SeedError> {
    if map.insert(label.clone(), v).is_some() {
        return Err(SeedError::DuplicateLabel(label.to_string()));
    }
    Ok(())
}

/// Runs `sweeps` full sweeps of the schedule from `seed`, recording each
/// produced cluster variable under its relabeled index and, in coefficient
/// mode, each mutated vertex's pre-mutation coefficient under its current
/// coefficient label (the diagonal `y_n` of the seed chains). After
/// the last sweep the coefficients of the next batch's vertices are also
/// recorded: being pairwise non-adjacent and next in line, their values are
/// already final.
pub fn run_schedule(
    seed: &Seed,
    schedule: &MutationSchedule,
    sweeps: usize,
) -> Result<Trajectory, SeedError> {
    let n = seed.n();
    if schedule.xlabels.len() != n || schedule.ylabels.len() != n {
        return Err(SeedError::SizeMismatch(schedule.xlabels.len(), n));
    }
    if let Some(avail) = schedule.available_sweeps() {
        if sweeps > avail {
            return Err(SeedError::SweepsExceeded(avail, sweeps));
        }
    }
    let coeff_mode = seed.y.is_some();
    let mut cur = seed.clone();
    let mut xlabels = schedule.xlabels.clone();
    let mut ylabels = schedule.ylabels.clone();
    let mut x = BTreeMap::new();
    let mut y = BTreeMap::new();
    let mut coeff_pairs = BTreeMap::new();
    let mut steps = Vec::new();

    for (v, label) in xlabels.iter().enumerate() {
        record_x(&mut x, label.clone(), cur.x[v].clone())?;
    }

    for sweep in 0..sweeps {
        let batches = schedule
            .batches_for(sweep)
            .expect("sweep availability checked above");
        for batch in batches {
            for (ai, &i) in batch.iter().enumerate() {
                for &j in &batch[ai + 1..] {
                    if cur.quiver.lambda[i][j] != 0 {
                        return Err(SeedError::BatchAdjacency(i, j));
                    }
                }
            }
            for &k in batch {
                let new_xlabel = schedule.relabel.next_x(&xlabels[k]);
                let (out_m, in_m) = crate::seed::exchange_monomials(&cur, k)?;
                let coefficient = if coeff_mode {
                    let yk = cur.y.as_ref().unwrap()[k].clone();
                    let pair = extract_bilinear_coefficients(&cur, k)?;
                    record_y(&mut y, ylabels[k].clone(), yk.clone())?;
                    coeff_pairs.insert(new_xlabel.clone(), pair);
                    Some((ylabels[k].clone(), yk))
                } else {
                    None
                };
                cur = if coeff_mode {
                    mutate_seed(&cur, k)?
                } else {
                    mutate_seed_free(&cur, k)?
                };
                record_x(&mut x, new_xlabel.clone(), cur.x[k].clone())?;
                steps.push(StepRecord {
                    sweep,
                    vertex: k,
                    label: new_xlabel.clone(),
                    value: cur.x[k].clone(),
                    out_monomial: out_m,
                    in_monomial: in_m,
                    coefficient,
                });
                xlabels[k] = new_xlabel;
                ylabels[k] = schedule.relabel.next_y(&ylabels[k]);
            }
        }
    }

    if coeff_mode {
        let next_batch: Option<&Vec<usize>> = match &schedule.kind {
            ScheduleKind::Cyclic(b) => b.first(),
            ScheduleKind::Finite(sw) => sw.get(sweeps).and_then(|s| s.first()),
        };
        if let Some(batch) = next_batch {
            for &k in batch {
                record_y(&mut y, ylabels[k].clone(), cur.y.as_ref().unwrap()[k].clone())?;
            }
        }
    }

    Ok(Trajectory {
        x,
        y,
        coeff_pairs,
        steps,
        final_seed: cur,
        final_xlabels: xlabels,
        final_ylabels: ylabels,
    })
}

/// CSV export: columns `label` (quoted tuple, family-prefixed for
/// multi-family models), `kind` in {x, y}, `value` as exact fraction (or
/// canonical polynomial text in symbolic mode).
pub fn trajectory_to_csv(traj: &Trajectory) -> String {
    let mut s = String::from("label,kind,value\n");
    for (label, v) in &traj.x {
        s.push_str(&format!("\"{label}\",x,{v}\n"));
    }
    for (label, v) in &traj.y {
        s.push_str(&format!("\"{label}\",y,{v}\n"));
    }
    s
}

/// JSON seed snapshot: the quiver in interchange format plus per-vertex
/// value lists (1-based order), as exact strings.
pub fn seed_to_json(seed: &Seed) -> serde_json::Value {
    let x: Vec<String> = seed.x.iter().map(|v| v.to_string()).collect();
    let y: Option<Vec<String>> = seed
        .y
        .as_ref()
        .map(|ys| ys.iter().map(|v| v.to_string()).collect());
    json!({
        "quiver": quiver_to_json(&seed.quiver),
        "x": x,
        "y": y,
    })
}
