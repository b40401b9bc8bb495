//! Reduction-correspondence verification: running a lattice board on
//! initial data that is periodic along a reduction vector must reproduce,
//! label for label, the dynamics of the reduced (child) system.
//!
//! The periodic data cannot be free on every orbit class: classes are
//! coupled by the child equation, so free random values are drawn only on a
//! fundamental set of classes and extended by the child recurrence. The
//! verification then has real content at every produced board value: the
//! board computes it by the parent exchange relation, and it must coincide
//! with the recurrence-extended class value.

use std::collections::BTreeMap;

use exact_arith::Rational;
use model_zoo::{make_model, Model, ModelSpec, ZooError};
use seed_dynamics::{run_schedule, Label, Seed, Trajectory};

use crate::report::VerificationReport;
use crate::rng::{generator, random_rational};

fn run_board(model: &Model, x: Vec<Rational>, sweeps: Option<usize>) -> Result<Trajectory, ZooError> {
    let seed = Seed::numeric(model.quiver.clone(), x, None)?;
    let avail = model.schedule.available_sweeps();
    let sweeps = match (sweeps, avail) {
        (Some(s), Some(a)) => s.min(a),
        (Some(s), None) => s,
        (None, Some(a)) => a,
        (None, None) => 0,
    };
    Ok(run_schedule(&seed, &model.schedule, sweeps)?)
}

/// dKdV board with (2,-1)-periodic data versus qPI.
///
/// Classes are t = n + 2m. Free data: X_0..X_3; higher classes extend by the
/// qPI bilinear recurrence X_{t+4} = (X_{t+2}^2 + X_{t+3} X_{t+1}) / X_t.
pub fn check_dkdv_to_qpi(rng_seed: u64) -> Result<Vec<VerificationReport>, ZooError> {
    let parent = make_model(&ModelSpec::DKdV { n: 1, m: 1, w: 10, h: 8 })?;
    let t_max = 9 + 2 * 7; // largest n + 2m on the window
    let mut rng = generator(rng_seed);
    let mut x_class: Vec<Rational> = (0..4).map(|_| random_rational(&mut rng)).collect();
    for t in 4..=(t_max as usize) {
        let v = (&x_class[t - 2] * &x_class[t - 2] + &x_class[t - 1] * &x_class[t - 3])
            / &x_class[t - 4];
        x_class.push(v);
    }
    let class_of = |lb: &Label| (lb.idx[0] + 2 * lb.idx[1]) as usize;

    let init: Vec<Rational> = parent
        .schedule
        .xlabels
        .iter()
        .map(|lb| x_class[class_of(lb)].clone())
        .collect();
    let traj = run_board(&parent, init, None)?;

    let mut classes = VerificationReport::new("reduction dKdV/(2,-1): board reproduces the class values");
    for (lb, v) in &traj.x {
        match v.as_rat() {
            Some(r) => classes.record(format!("label {lb}"), r, &x_class[class_of(lb)]),
            None => classes.skip(),
        }
    }

    // Fold the board values by class and check the qPI bilinear equation on
    // the folded sequence itself.
    let mut folded: BTreeMap<usize, Rational> = BTreeMap::new();
    for (lb, v) in &traj.x {
        if let Some(r) = v.as_rat() {
            folded.entry(class_of(lb)).or_insert_with(|| r.clone());
        }
    }
    let mut bilinear = VerificationReport::new("reduction dKdV/(2,-1): folded sequence satisfies the qPI bilinear equation");
    for (&t, xt) in &folded {
        let window: Option<Vec<&Rational>> = (1..=4).map(|i| folded.get(&(t + i))).collect();
        let Some(w) = window else {
            bilinear.skip();
            continue;
        };
        let lhs = w[3] * xt;
        let rhs = w[1] * w[1] + w[2] * w[0];
        bilinear.record(format!("t={t}"), &lhs, &rhs);
    }

    // Child run, label for label: the qPI cluster seeded with the four
    // smallest class values must reproduce the folded sequence.
    let child = make_model(&ModelSpec::QPI)?;
    let child_seed = Seed::numeric(
        child.quiver.clone(),
        x_class[0..4].to_vec(),
        None,
    )?;
    let child_traj = run_schedule(&child_seed, &child.schedule, 5)?;
    let mut matches = VerificationReport::new("reduction dKdV/(2,-1): qPI run matches the folded sequence");
    for (lb, v) in &child_traj.x {
        let t = lb.idx[0] as usize;
        match (v.as_rat(), folded.get(&t)) {
            (Some(r), Some(f)) => matches.record(format!("x_{t}"), r, f),
            _ => matches.skip(),
        }
    }

    Ok(vec![classes.finish(), bilinear.finish(), matches.finish()])
}

/// HM board with (1,0,1)-periodic data versus the dKdV board.
///
/// Classes are (j, m) = (n - l, m). Free data: the m = 0 row and the far
/// columns j <= -6; other classes extend by the dKdV label recurrence
/// Y(j,m) = (Y(j-2,m) Y(j,m-1) + Y(j-1,m) Y(j-1,m-1)) / Y(j-2,m-1).
pub fn check_hm_to_dkdv(rng_seed: u64) -> Result<Vec<VerificationReport>, ZooError> {
    const J_MIN: i64 = -14;
    const J_MAX: i64 = 15;
    const M_MAX: i64 = 4;
    let mut rng = generator(rng_seed);
    let mut y: BTreeMap<(i64, i64), Rational> = BTreeMap::new();
    for m in 0..=M_MAX {
        for j in J_MIN..=J_MAX {
            let v = if m == 0 || j <= -6 {
                random_rational(&mut rng)
            } else {
                (&y[&(j - 2, m)] * &y[&(j, m - 1)] + &y[&(j - 1, m)] * &y[&(j - 1, m - 1)])
                    / &y[&(j - 2, m - 1)]
            };
            y.insert((j, m), v);
        }
    }
    let class_of = |lb: &Label| (lb.idx[0] - lb.idx[1], lb.idx[2]);

    let parent = make_model(&ModelSpec::Hm { n: 1, w1: 8, w2: 10, h: 5 })?;
    let init: Vec<Rational> = parent
        .schedule
        .xlabels
        .iter()
        .map(|lb| y[&class_of(lb)].clone())
        .collect();
    let traj = run_board(&parent, init, None)?;

    let mut classes = VerificationReport::new("reduction HM/(1,0,1): board reproduces the class values");
    for (lb, v) in &traj.x {
        match (v.as_rat(), y.get(&class_of(lb))) {
            (Some(r), Some(expect)) => classes.record(format!("label {lb}"), r, expect),
            _ => classes.skip(),
        }
    }

    // Fold by (j, m) and check the dKdV bilinear equation on the folded map.
    let mut folded: BTreeMap<(i64, i64), Rational> = BTreeMap::new();
    for (lb, v) in &traj.x {
        if let Some(r) = v.as_rat() {
            folded.entry(class_of(lb)).or_insert_with(|| r.clone());
        }
    }
    let mut bilinear = VerificationReport::new("reduction HM/(1,0,1): folded values satisfy the dKdV bilinear equation");
    for (&(j, m), v) in &folded {
        let need = [
            (j + 2, m + 1),
            (j, m + 1),
            (j + 2, m),
            (j + 1, m + 1),
            (j + 1, m),
        ];
        let vals: Option<Vec<&Rational>> = need.iter().map(|k| folded.get(k)).collect();
        let Some(w) = vals else {
            bilinear.skip();
            continue;
        };
        let lhs = w[0] * v;
        let rhs = w[1] * w[2] + w[3] * w[4];
        bilinear.record(format!("(j,m)=({j},{m})"), &lhs, &rhs);
    }

    // Child dKdV board seeded label-for-label from the class values.
    let child = make_model(&ModelSpec::DKdV { n: 1, m: 1, w: 6, h: 4 })?;
    let child_init: Vec<Rational> = child
        .schedule
        .xlabels
        .iter()
        .map(|lb| y[&(lb.idx[0], lb.idx[1])].clone())
        .collect();
    let child_traj = run_board(&child, child_init, Some(2))?;
    let mut matches = VerificationReport::new("reduction HM/(1,0,1): dKdV board matches label-for-label");
    for (lb, v) in &child_traj.x {
        match (v.as_rat(), y.get(&(lb.idx[0], lb.idx[1]))) {
            (Some(r), Some(expect)) => matches.record(format!("label {lb}"), r, expect),
            _ => matches.skip(),
        }
    }

    Ok(vec![classes.finish(), bilinear.finish(), matches.finish()])
}

/// Both stated reduction correspondences.
pub fn check_reduction_correspondence(rng_seed: u64) -> Result<Vec<VerificationReport>, ZooError> {
    let mut out = check_hm_to_dkdv(rng_seed)?;
    out.extend(check_dkdv_to_qpi(rng_seed.wrapping_add(1))?);
    Ok(out)
}
