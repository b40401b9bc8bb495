//! The `run` subcommand: build a seed, run the model's mutation schedule,
//! print the trajectory summary and optionally export CSV/JSON artifacts.

use std::path::{Path, PathBuf};

use exact_arith::{parse_rational, Rational};
use model_zoo::{make_model, ones_seed, seed_from_recurrence_data, symbolic_seed, Model, ModelSpec};
use seed_dynamics::{run_schedule, seed_to_json, trajectory_to_csv, Seed, Trajectory};
use verify::{random_rationals, GENERATOR_NAME};

/// How the initial data is produced.
pub enum SeedMode {
    /// All cluster variables one, coefficient-free.
    Ones,
    /// Random positive rational cluster from the named generator.
    Random(u64),
    /// Coefficient mode: the recurrence values the first sweep must see.
    Coeffs(Vec<Rational>),
    /// Initial data from a JSON file `{"x": [...], "y": [...]}`.
    File(PathBuf),
}

pub struct RunConfig {
    pub spec: ModelSpec,
    pub sweeps: usize,
    pub mode: SeedMode,
    pub symbolic: bool,
    pub out: Option<PathBuf>,
}

fn parse_values(vals: &[serde_json::Value], what: &str) -> Result<Vec<Rational>, String> {
    vals.iter()
        .map(|v| {
            let s = v
                .as_str()
                .map(str::to_string)
                .or_else(|| v.as_i64().map(|i| i.to_string()))
                .ok_or_else(|| format!("{what} entries must be strings or integers"))?;
            parse_rational(&s).map_err(|e| format!("{what}: {e}"))
        })
        .collect()
}

fn seed_from_file(model: &Model, path: &Path) -> Result<Seed, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let doc: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let x = parse_values(
        doc.get("x")
            .and_then(|v| v.as_array())
            .ok_or("seed file needs an \"x\" array")?,
        "x",
    )?;
    let y = match doc.get("y").and_then(|v| v.as_array()) {
        Some(arr) => Some(parse_values(arr, "y")?),
        None => None,
    };
    Seed::numeric(model.quiver.clone(), x, y).map_err(|e| e.to_string())
}

fn build_seed(model: &Model, cfg: &RunConfig) -> Result<Seed, String> {
    if cfg.symbolic {
        if !matches!(cfg.mode, SeedMode::Ones) {
            return Err("--symbolic runs take no initial data (the cluster is the variable set)".into());
        }
        return Ok(symbolic_seed(model));
    }
    match &cfg.mode {
        SeedMode::Ones => ones_seed(model, false).map_err(|e| e.to_string()),
        SeedMode::Random(s) => {
            let x = random_rationals(*s, model.n());
            Seed::numeric(model.quiver.clone(), x, None).map_err(|e| e.to_string())
        }
        SeedMode::Coeffs(data) => seed_from_recurrence_data(model, data).map_err(|e| e.to_string()),
        SeedMode::File(path) => seed_from_file(model, path),
    }
}

fn mode_text(cfg: &RunConfig) -> String {
    let base = match &cfg.mode {
        SeedMode::Ones => "all ones".to_string(),
        SeedMode::Random(s) => format!("random, generator {GENERATOR_NAME}, seed {s}"),
        SeedMode::Coeffs(data) => {
            let v: Vec<String> = data.iter().map(|d| d.to_string()).collect();
            format!("recurrence coefficients {}", v.join(","))
        }
        SeedMode::File(p) => format!("file {}", p.display()),
    };
    if cfg.symbolic {
        "symbolic (coefficient-free Laurent polynomials)".to_string()
    } else {
        base
    }
}

fn summary(model: &Model, cfg: &RunConfig, sweeps: usize, traj: &Trajectory) -> String {
    let mut out = String::new();
    out.push_str(&format!("model: {}\n", model.name));
    out.push_str(&format!("initial data: {}\n", mode_text(cfg)));
    out.push_str(&format!("sweeps: {sweeps}\n"));
    for st in &traj.steps {
        out.push_str(&format!(
            "sweep {}, vertex {}: {} = {}",
            st.sweep + 1,
            st.vertex + 1,
            st.label,
            st.value
        ));
        if let Some((lb, d)) = &st.coefficient {
            out.push_str(&format!("  [y {lb} = {d}]"));
        }
        out.push('\n');
    }
    let xs: Vec<String> = traj.x.values().map(|v| v.to_string()).collect();
    out.push_str(&format!("x ledger: {}\n", xs.join(", ")));
    if !traj.y.is_empty() {
        let ys: Vec<String> = traj.y.values().map(|v| v.to_string()).collect();
        out.push_str(&format!("y ledger: {}\n", ys.join(", ")));
    }
    out
}

pub fn cmd_run(cfg: &RunConfig) -> Result<(), String> {
    let model = make_model(&cfg.spec).map_err(|e| e.to_string())?;
    let seed = build_seed(&model, cfg)?;
    let mut cycles = crate::schedule_cycles(&model, cfg.sweeps);
    let mut display_sweeps = cfg.sweeps;
    if let Some(avail) = model.schedule.available_sweeps() {
        if cycles > avail {
            println!("note: {} provides {avail} sweeps; clamping", model.name);
            cycles = avail;
            display_sweeps = avail;
        }
    }
    let traj = run_schedule(&seed, &model.schedule, cycles).map_err(|e| e.to_string())?;
    let text = summary(&model, cfg, display_sweeps, &traj);
    print!("{text}");

    if let Some(dir) = &cfg.out {
        std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
        let mut csv = String::new();
        csv.push_str(&format!("# model: {}\n", model.name));
        csv.push_str(&format!("# initial data: {}\n", mode_text(cfg)));
        csv.push_str(&format!("# sweeps: {display_sweeps}\n"));
        csv.push_str(&trajectory_to_csv(&traj));
        let seed_doc = serde_json::json!({
            "model": model.name,
            "initial data": mode_text(cfg),
            "sweeps": display_sweeps,
            "initial_seed": seed_to_json(&seed),
            "final_seed": seed_to_json(&traj.final_seed),
        });
        let writes = [
            ("trajectory.csv", csv),
            (
                "seed.json",
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&seed_doc).map_err(|e| e.to_string())?
                ),
            ),
            ("summary.txt", text),
        ];
        for (name, content) in writes {
            let path = dir.join(name);
            std::fs::write(&path, content).map_err(|e| format!("{}: {e}", path.display()))?;
            println!("wrote {}", path.display());
        }
    }
    Ok(())
}
