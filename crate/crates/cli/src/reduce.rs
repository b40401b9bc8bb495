//! The `reduce` subcommand: reduce a lattice model along a vector. When the
//! (parent, vector) pair is one of the certified pedigrees the child is
//! named (and its quiver emitted after re-certifying the fold); otherwise a
//! generic window reduction of the lattice stencil is emitted.

use std::path::Path;

use model_zoo::{certify_pedigree, lattice_spec, make_model, pedigrees, ModelSpec};
use quiver_core::{quiver_to_dot, quiver_to_json, Quiver, SiteMap};

use crate::catalog::child_spec;

fn parent_label(spec: &ModelSpec) -> Result<String, String> {
    match spec {
        ModelSpec::DKdV { n, m, .. } => Ok(format!("dKdV({n},{m})")),
        ModelSpec::DmKdV { n, m, .. } => Ok(format!("dmKdV({n},{m})")),
        ModelSpec::Hm { n, .. } => Ok(format!("HM({n})")),
        ModelSpec::DToda { .. } => Ok("dToda".into()),
        _ => Err("reduce applies to the lattice models (dKdV, HM, dmKdV, dToda)".into()),
    }
}

fn emit(q: &Quiver, sites: Option<&SiteMap>, out: Option<&Path>) -> Result<(), String> {
    let json = format!(
        "{}\n",
        serde_json::to_string_pretty(&quiver_to_json(q)).map_err(|e| e.to_string())?
    );
    let dot = quiver_to_dot(q, sites);
    match out {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
            for (name, content) in [("quiver.json", json), ("quiver.dot", dot)] {
                let path = dir.join(name);
                std::fs::write(&path, content).map_err(|e| format!("{}: {e}", path.display()))?;
                println!("wrote {}", path.display());
            }
        }
        None => {
            print!("{json}");
            print!("{dot}");
        }
    }
    Ok(())
}

pub fn cmd_reduce(spec: &ModelSpec, v: &[i64], out: Option<&Path>) -> Result<(), String> {
    if v.is_empty() || v.iter().all(|&x| x == 0) {
        return Err("the reduction vector must be nonzero".into());
    }
    let parent = parent_label(spec)?;
    let vtext: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    let vtext = vtext.join(",");

    if let Some(p) = pedigrees()
        .into_iter()
        .find(|p| p.parent == parent && p.vector == v)
    {
        certify_pedigree(&p.child)
            .map_err(|e| format!("pedigree certification failed: {e}"))?;
        let child = make_model(&child_spec(&p.child)?).map_err(|e| e.to_string())?;
        println!("{parent} / ({vtext}) \u{2245} {}", p.child);
        println!("fold re-certified against the stored child quiver");
        return emit(&child.quiver, child.sites.as_ref(), out);
    }

    let lattice = lattice_spec(spec)
        .ok_or_else(|| format!("{parent} has no lattice stencil to reduce"))?;
    // Lattice axes are (n, m) resp. (n, m, l); vector components are read in
    // the same order. A 2-component dmKdV vector lifts component-preserving
    // (third axis 0); the certified component-flipping reductions are the
    // pedigrees handled above.
    let vv = if lattice.dimension == 3 && v.len() == 2 {
        vec![v[0], v[1], 0]
    } else {
        v.to_vec()
    };
    let (quiver, sites) = quiver_core::reduce(&lattice, &vv).map_err(|e| e.to_string())?;
    println!(
        "{parent} / ({vtext}): no certified catalog child; generic window reduction with {} classes",
        quiver.n()
    );
    emit(&quiver, Some(&sites), out)
}
