//! The `verify` subcommand: generate trajectories for a model and run the
//! selected exact identity checks, printing human-readable lines plus the
//! JSON report document. The process exit code is 0 iff every selected
//! report passes.

use model_zoo::{make_model, CoeffData, Model, ModelSpec, PainleveKind};
use seed_dynamics::{run_schedule, ScheduleKind, Seed, Trajectory};
use verify::{
    check_bilinear, check_bilinear_with_coefficients, check_laurent, check_painleve,
    random_rationals, reports_to_json, VerificationReport, GENERATOR_NAME,
};

/// Symbolic mutation budget for `--laurent` on cyclic schedules: Laurent
/// polynomials of the Somos-type models grow superpolynomially with the
/// mutation count, so the CLI check caps the symbolic prefix.
const LAURENT_CAP: usize = 12;

#[derive(Clone, Copy, Default)]
pub struct CheckFlags {
    pub all: bool,
    pub bilinear: bool,
    pub conservation: bool,
    pub painleve: bool,
    pub laurent: bool,
    pub coefficients: bool,
}

pub struct VerifyConfig {
    pub spec: ModelSpec,
    pub checks: CheckFlags,
    pub random_seed: u64,
    pub sweeps: usize,
}

fn clamp_sweeps(model: &Model, sweeps: usize) -> usize {
    match model.schedule.available_sweeps() {
        Some(avail) => sweeps.min(avail),
        None => sweeps,
    }
}

/// Mutation count of the first `steps` user-facing time steps: one batch
/// per step on cyclic schedules, whole board sweeps on finite ones.
fn mutations_in(model: &Model, steps: usize) -> usize {
    match &model.schedule.kind {
        ScheduleKind::Cyclic(batches) => batches
            .iter()
            .cycle()
            .take(steps)
            .map(Vec::len)
            .sum::<usize>(),
        ScheduleKind::Finite(all) => all
            .iter()
            .take(steps)
            .flatten()
            .map(Vec::len)
            .sum::<usize>(),
    }
}

fn run_x_trajectory(model: &Model, seed: u64, sweeps: usize) -> Result<Trajectory, String> {
    let x = random_rationals(seed, model.n());
    let s = Seed::numeric(model.quiver.clone(), x, None).map_err(|e| e.to_string())?;
    run_schedule(&s, &model.schedule, sweeps).map_err(|e| e.to_string())
}

fn run_y_trajectory(model: &Model, seed: u64, sweeps: usize) -> Result<Trajectory, String> {
    let x = vec![exact_arith::rat_int(1); model.n()];
    let y = random_rationals(seed, model.n());
    let s = Seed::numeric(model.quiver.clone(), x, Some(y)).map_err(|e| e.to_string())?;
    run_schedule(&s, &model.schedule, sweeps).map_err(|e| e.to_string())
}

fn print_report(r: &VerificationReport) {
    let verdict = if r.pass() { "PASS" } else { "FAIL" };
    println!(
        "{verdict} {}: {} checked, {} skipped",
        r.identity, r.checked, r.skipped
    );
    for w in &r.warnings {
        println!("  warning: {w}");
    }
    if let Some(f) = r.failures.first() {
        println!(
            "  first failure at {}: lhs {} != rhs {}",
            f.location, f.lhs, f.rhs
        );
    }
}

/// Runs the selected checks; `Ok(true)` iff everything passes.
pub fn cmd_verify(cfg: &VerifyConfig) -> Result<bool, String> {
    let model = make_model(&cfg.spec).map_err(|e| e.to_string())?;
    let kind = PainleveKind::of(&model);
    let is_dmkdv = matches!(model.spec, ModelSpec::DmKdV { .. });

    let f = cfg.checks;
    let bilinear = f.bilinear || f.all;
    let laurent = f.laurent || f.all;
    let conservation = f.conservation || (f.all && kind.is_some());
    let painleve = f.painleve || (f.all && kind.is_some());
    let coefficients = f.coefficients || (f.all && is_dmkdv);
    if !(bilinear || laurent || conservation || painleve || coefficients) {
        return Err(
            "select checks: --all, --bilinear, --conservation, --painleve, --laurent, --coefficients"
                .into(),
        );
    }
    if (conservation || painleve) && kind.is_none() {
        return Err(format!(
            "--conservation/--painleve apply to the q-Painleve models, not {}",
            model.name
        ));
    }
    if coefficients && !is_dmkdv {
        return Err(format!(
            "--coefficients is stated for the dmKdV board, not {}",
            model.name
        ));
    }

    let sweeps = clamp_sweeps(&model, crate::schedule_cycles(&model, cfg.sweeps));
    println!("model: {}", model.name);
    println!(
        "random data: generator {GENERATOR_NAME}, seed {}",
        cfg.random_seed
    );
    println!("sweeps: {sweeps}");

    let mut reports: Vec<VerificationReport> = Vec::new();
    if bilinear {
        let traj = run_x_trajectory(&model, cfg.random_seed, sweeps)?;
        reports.push(check_bilinear(&model, &traj));
    }
    if conservation || painleve {
        let kind = kind.expect("checked above");
        let traj = run_y_trajectory(&model, cfg.random_seed, sweeps)?;
        let d = CoeffData::from_trajectory(&traj);
        for r in check_painleve(kind, &d, &model.name) {
            let conservation_part =
                r.identity.contains("conserved") || r.identity.contains("monitor");
            if (conservation && conservation_part) || (painleve && !conservation_part) {
                reports.push(r);
            }
        }
    }
    if coefficients {
        let traj = run_y_trajectory(&model, cfg.random_seed, sweeps)?;
        reports.extend(check_bilinear_with_coefficients(&model, &traj));
    }
    if laurent {
        let steps = match model.schedule.kind {
            ScheduleKind::Cyclic(_) => cfg.sweeps,
            ScheduleKind::Finite(_) => sweeps,
        };
        let requested = mutations_in(&model, steps);
        if requested > LAURENT_CAP {
            println!("note: capping the symbolic run at {LAURENT_CAP} of {requested} mutations");
        }
        let check = check_laurent(&model, requested.min(LAURENT_CAP)).map_err(|e| e.to_string())?;
        reports.extend(check.reports);
    }

    for r in &reports {
        print_report(r);
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&reports_to_json(&reports)).map_err(|e| e.to_string())?
    );
    Ok(reports.iter().all(VerificationReport::pass))
}
