//! The `list` subcommand: the model catalog with sizes, schedules and
//! reduction pedigrees.

use model_zoo::{catalog_specs, make_model, model_to_json, Model};
use seed_dynamics::ScheduleKind;

fn schedule_text(model: &Model) -> String {
    match &model.schedule.kind {
        ScheduleKind::Cyclic(batches) => {
            let shown: Vec<String> = batches
                .iter()
                .map(|b| {
                    let v: Vec<String> = b.iter().map(|k| (k + 1).to_string()).collect();
                    format!("({})", v.join(","))
                })
                .collect();
            format!("batch {}", shown.join(""))
        }
        ScheduleKind::Finite(sweeps) => {
            let mutations: usize = sweeps.iter().flatten().map(Vec::len).sum();
            format!("{} sweeps, {} mutations", sweeps.len(), mutations)
        }
    }
}

fn entry_text(model: &Model) -> String {
    let mut line = format!(
        "{} ({} vertices, {}",
        model.name,
        model.n(),
        schedule_text(model)
    );
    if let Some(p) = &model.pedigree {
        line.push_str(&format!(", pedigree: {}", p.describe()));
    }
    line.push(')');
    line
}

pub fn cmd_list(json: bool) -> Result<(), String> {
    let models: Result<Vec<Model>, _> = catalog_specs().iter().map(make_model).collect();
    let models = models.map_err(|e| e.to_string())?;
    if json {
        let entries: Vec<serde_json::Value> = models.iter().map(model_to_json).collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::Value::Array(entries))
                .map_err(|e| e.to_string())?
        );
    } else {
        for model in &models {
            println!("{}", entry_text(model));
        }
    }
    Ok(())
}
