//! Command-line surface for the exact cluster-dynamics library: list the
//! model catalog, run mutation schedules, verify the stated identities, and
//! reduce lattice quivers along a vector.
//!
//! All arithmetic is exact; every run is reproducible from its stated
//! generator seed, and identical configurations produce byte-identical
//! outputs. Vertex indices are 1-based in all user-facing formats.

mod catalog;
mod list;
mod reduce;
mod run;
mod verify_cmd;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use exact_arith::parse_rational;

use crate::run::{RunConfig, SeedMode};
use crate::verify_cmd::{CheckFlags, VerifyConfig};

#[derive(Parser)]
#[command(
    name = "qpain",
    version,
    about = "Exact cluster-algebra dynamics: quiver mutation, lattice boards, \
             q-Painleve models and their mechanical verification"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the model catalog (sizes, schedules, pedigrees).
    List {
        /// Machine-readable catalog.
        #[arg(long)]
        json: bool,
    },
    /// Run a mutation schedule and export the trajectory.
    Run {
        /// Model name: qPI, qPII, qPIII, qPVI, dKdV, HM, dmKdV, dToda.
        model: String,
        /// Lattice parameter N (boards).
        #[arg(long = "N", default_value_t = 1)]
        n: u32,
        /// Lattice parameter M (boards).
        #[arg(long = "M", default_value_t = 1)]
        m: u32,
        /// Board window, WxH or W1xW2xH (boards only).
        #[arg(long)]
        window: Option<String>,
        /// Number of schedule sweeps (clamped to the board depth).
        #[arg(long, default_value_t = 1)]
        sweeps: usize,
        /// All-ones initial cluster (default).
        #[arg(long)]
        ones: bool,
        /// Random positive rational initial cluster from this generator seed.
        #[arg(long, conflicts_with_all = ["ones", "coeffs", "file"])]
        random_seed: Option<u64>,
        /// Coefficient mode: comma-separated rationals, the recurrence
        /// values the first sweep's mutations must see.
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["ones", "file"])]
        coeffs: Option<String>,
        /// Initial data from a JSON file {"x": [...], "y": [...]}.
        #[arg(long, conflicts_with = "ones")]
        file: Option<PathBuf>,
        /// Symbolic coefficient-free run (Laurent polynomials).
        #[arg(long)]
        symbolic: bool,
        /// Directory for trajectory.csv, seed.json and summary.txt.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the stated identities on generated trajectories
    /// (exit code 0 iff every selected report passes).
    Verify {
        /// Model name: qPI, qPII, qPIII, qPVI, dKdV, HM, dmKdV, dToda.
        model: String,
        #[arg(long = "N", default_value_t = 1)]
        n: u32,
        #[arg(long = "M", default_value_t = 1)]
        m: u32,
        #[arg(long)]
        window: Option<String>,
        /// Every check applicable to the model.
        #[arg(long)]
        all: bool,
        /// Bilinear exchange relations over the recorded labels.
        #[arg(long)]
        bilinear: bool,
        /// Conserved quantities and monitor step laws (q-Painleve models).
        #[arg(long)]
        conservation: bool,
        /// Coefficient recurrences and constant-form equations (q-Painleve).
        #[arg(long)]
        painleve: bool,
        /// Laurent property of a symbolic run, cross-checked numerically.
        #[arg(long)]
        laurent: bool,
        /// Coefficient sum and nonautonomous bilinear identity (dmKdV).
        #[arg(long)]
        coefficients: bool,
        /// Generator seed for the random initial data.
        #[arg(long, default_value_t = 1)]
        random_seed: u64,
        /// Number of schedule sweeps (clamped to the board depth).
        #[arg(long, default_value_t = 4)]
        sweeps: usize,
    },
    /// Reduce a lattice model along a vector; names the child when the
    /// reduction is one of the certified pedigrees.
    Reduce {
        /// Parent model name: dKdV, HM, dmKdV, dToda.
        model: String,
        #[arg(long = "N", default_value_t = 1)]
        n: u32,
        #[arg(long = "M", default_value_t = 1)]
        m: u32,
        #[arg(long)]
        window: Option<String>,
        /// Reduction vector, comma-separated integers in lattice-coordinate
        /// order (e.g. 1,0,1 or 2,-2).
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        /// Directory for quiver.json and quiver.dot.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Number of schedule cycles realizing `sweeps` user-facing time steps: in
/// the cyclic q-Painleve schedules one step is one mutation batch (the
/// recurrence step n -> n+1), so the cycle count rounds up; windowed boards already
/// count whole sweeps.
pub(crate) fn schedule_cycles(model: &model_zoo::Model, sweeps: usize) -> usize {
    match &model.schedule.kind {
        seed_dynamics::ScheduleKind::Cyclic(batches) if !batches.is_empty() => {
            sweeps.div_ceil(batches.len())
        }
        _ => sweeps,
    }
}

fn parse_coeff_list(text: &str) -> Result<Vec<exact_arith::Rational>, String> {
    text.split(',')
        .map(|p| parse_rational(p.trim()).map_err(|e| format!("--coeffs: {e}")))
        .collect()
}

fn dispatch(cmd: Cmd) -> Result<bool, String> {
    match cmd {
        Cmd::List { json } => list::cmd_list(json).map(|()| true),
        Cmd::Run {
            model,
            n,
            m,
            window,
            sweeps,
            ones: _,
            random_seed,
            coeffs,
            file,
            symbolic,
            out,
        } => {
            let spec = catalog::resolve_spec(&model, n, m, window.as_deref())?;
            let mode = match (random_seed, coeffs, file) {
                (Some(s), None, None) => SeedMode::Random(s),
                (None, Some(c), None) => SeedMode::Coeffs(parse_coeff_list(&c)?),
                (None, None, Some(f)) => SeedMode::File(f),
                (None, None, None) => SeedMode::Ones,
                _ => unreachable!("clap conflicts_with rules"),
            };
            run::cmd_run(&RunConfig {
                spec,
                sweeps,
                mode,
                symbolic,
                out,
            })
            .map(|()| true)
        }
        Cmd::Verify {
            model,
            n,
            m,
            window,
            all,
            bilinear,
            conservation,
            painleve,
            laurent,
            coefficients,
            random_seed,
            sweeps,
        } => {
            let spec = catalog::resolve_spec(&model, n, m, window.as_deref())?;
            verify_cmd::cmd_verify(&VerifyConfig {
                spec,
                checks: CheckFlags {
                    all,
                    bilinear,
                    conservation,
                    painleve,
                    laurent,
                    coefficients,
                },
                random_seed,
                sweeps,
            })
        }
        Cmd::Reduce {
            model,
            n,
            m,
            window,
            v,
            out,
        } => {
            let spec = catalog::resolve_spec(&model, n, m, window.as_deref())?;
            let v = catalog::parse_int_vector(&v)?;
            reduce::cmd_reduce(&spec, &v, out.as_deref()).map(|()| true)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match dispatch(cli.cmd) {
        Ok(true) => {}
        Ok(false) => std::process::exit(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}
