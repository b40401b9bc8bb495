use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::quiver::{Quiver, QuiverError};

/// Serializes a quiver to the interchange format:
/// `{"n": N, "arrows": [[i, j, mult], ...], "frozen": [...]}` with 1-based
/// vertex indices, one entry per ordered pair `i < j` with a nonzero net
/// multiplicity (signed: negative means the arrows point `j -> i`).
pub fn quiver_to_json(q: &Quiver) -> Value {
    let n = q.n();
    let mut arrows = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if q.lambda[i][j] != 0 {
                arrows.push(json!([i + 1, j + 1, q.lambda[i][j]]));
            }
        }
    }
    let frozen: Vec<Value> = q.frozen.iter().map(|&v| json!(v + 1)).collect();
    json!({ "n": n, "arrows": arrows, "frozen": frozen })
}

fn get_u64(v: &Value) -> Option<u64> {
    v.as_u64()
}

/// Parses a quiver from the interchange format produced by
/// [`quiver_to_json`]; shape and range problems are reported as messages.
pub fn quiver_from_json(v: &Value) -> Result<Quiver, String> {
    let n = v
        .get("n")
        .and_then(get_u64)
        .ok_or("missing or invalid \"n\"")? as usize;
    let arrows = v
        .get("arrows")
        .and_then(Value::as_array)
        .ok_or("missing or invalid \"arrows\"")?;
    let mut lambda = vec![vec![0i64; n]; n];
    for a in arrows {
        let t = a.as_array().ok_or("arrow entry is not an array")?;
        if t.len() != 3 {
            return Err("arrow entry must be [i, j, mult]".into());
        }
        let i = t[0].as_u64().ok_or("arrow source must be a positive integer")? as usize;
        let j = t[1].as_u64().ok_or("arrow target must be a positive integer")? as usize;
        let m = t[2].as_i64().ok_or("arrow multiplicity must be an integer")?;
        if i < 1 || i > n || j < 1 || j > n || i == j {
            return Err(format!("arrow [{i}, {j}] out of range for n = {n}"));
        }
        lambda[i - 1][j - 1] += m;
        lambda[j - 1][i - 1] -= m;
    }
    let mut frozen = BTreeSet::new();
    if let Some(f) = v.get("frozen") {
        let f = f.as_array().ok_or("\"frozen\" must be an array")?;
        for x in f {
            let x = x.as_u64().ok_or("frozen entry must be a positive integer")? as usize;
            if x < 1 || x > n {
                return Err(format!("frozen vertex {x} out of range for n = {n}"));
            }
            frozen.insert(x - 1);
        }
    }
    Quiver::new(lambda, frozen).map_err(|e: QuiverError| e.to_string())
}
