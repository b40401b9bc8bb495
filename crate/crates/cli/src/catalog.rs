//! Model-name and window resolution shared by the subcommands.

use model_zoo::ModelSpec;

/// Parses a window string `WxH` or `W1xW2xH` into positive integers.
fn parse_window(text: &str, arity: usize) -> Result<Vec<i64>, String> {
    let parts: Result<Vec<i64>, _> = text.split('x').map(str::parse).collect();
    let parts = parts.map_err(|_| format!("cannot parse window {text:?} (expected e.g. 6x4)"))?;
    if parts.len() != arity || parts.iter().any(|&p| p <= 0) {
        return Err(format!(
            "window {text:?} must give {arity} positive sizes separated by 'x'"
        ));
    }
    Ok(parts)
}

fn window_or(window: Option<&str>, arity: usize, default: &[i64]) -> Result<Vec<i64>, String> {
    match window {
        Some(w) => parse_window(w, arity),
        None => Ok(default.to_vec()),
    }
}

/// Resolves a user-facing model name (plus `--N`, `--M`, `--window`) to a
/// catalog spec. Matching is case-insensitive on the names
/// qPI, qPII, qPIII, qPVI, dKdV, HM, dmKdV, dToda.
pub fn resolve_spec(
    name: &str,
    n: u32,
    m: u32,
    window: Option<&str>,
) -> Result<ModelSpec, String> {
    let lname = name.to_lowercase();
    let reject_window = |spec: ModelSpec| -> Result<ModelSpec, String> {
        if window.is_some() {
            return Err(format!("{name} is not a windowed lattice model"));
        }
        Ok(spec)
    };
    match lname.as_str() {
        "qpi" => reject_window(ModelSpec::QPI),
        "qpii" => reject_window(ModelSpec::QPII),
        "qpiii" => reject_window(ModelSpec::QPIII),
        "qpvi" => reject_window(ModelSpec::QPVI),
        "dkdv" => {
            let w = window_or(window, 2, &[6, 4])?;
            Ok(ModelSpec::DKdV { n, m, w: w[0], h: w[1] })
        }
        "hm" => {
            let w = window_or(window, 3, &[5, 6, 4])?;
            Ok(ModelSpec::Hm { n, w1: w[0], w2: w[1], h: w[2] })
        }
        "dmkdv" => {
            let w = window_or(window, 2, &[6, 4])?;
            Ok(ModelSpec::DmKdV { n, m, w: w[0], h: w[1] })
        }
        "dtoda" => {
            let w = window_or(window, 2, &[8, 5])?;
            Ok(ModelSpec::DToda { w: w[0], h: w[1] })
        }
        _ => Err(format!(
            "unknown model {name:?}; available: qPI, qPII, qPIII, qPVI, dKdV, HM, dmKdV, dToda"
        )),
    }
}

/// The catalog spec behind a pedigree child name.
pub fn child_spec(child: &str) -> Result<ModelSpec, String> {
    match child {
        "qPI" => Ok(ModelSpec::QPI),
        "qPII" => Ok(ModelSpec::QPII),
        "qPIII" => Ok(ModelSpec::QPIII),
        "qPVI" => Ok(ModelSpec::QPVI),
        "dKdV(1,1)" => Ok(ModelSpec::DKdV { n: 1, m: 1, w: 6, h: 4 }),
        "dmKdV(1,1)" => Ok(ModelSpec::DmKdV { n: 1, m: 1, w: 6, h: 4 }),
        "dToda" => Ok(ModelSpec::DToda { w: 8, h: 5 }),
        other => Err(format!("no catalog entry for pedigree child {other:?}")),
    }
}

/// Parses a comma-separated integer vector (components may be negative).
pub fn parse_int_vector(text: &str) -> Result<Vec<i64>, String> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| format!("cannot parse vector component {p:?}"))
        })
        .collect()
}
