use crate::lattice::SiteMap;
use crate::quiver::Quiver;

/// Renders a quiver in Graphviz DOT format. Mutable vertices are circles,
/// frozen vertices boxes; an edge is drawn in the direction of the positive
/// net multiplicity and labeled with it when greater than one. If a site map
/// is given, vertices are labeled with their lattice sites.
pub fn quiver_to_dot(q: &Quiver, sites: Option<&SiteMap>) -> String {
    let n = q.n();
    let mut out = String::from("digraph quiver {\n");
    for v in 0..n {
        let shape = if q.is_frozen(v) { "box" } else { "circle" };
        let label = match sites {
            Some(m) => {
                let coords: Vec<String> = m.sites[v].iter().map(|c| c.to_string()).collect();
                format!("({})", coords.join(","))
            }
            None => (v + 1).to_string(),
        };
        out.push_str(&format!(
            "  v{} [label=\"{}\", shape={}];\n",
            v + 1,
            label,
            shape
        ));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let m = q.lambda[i][j];
            if m == 0 {
                continue;
            }
            let (src, dst, mult) = if m > 0 { (i, j, m) } else { (j, i, -m) };
            if mult == 1 {
                out.push_str(&format!("  v{} -> v{};\n", src + 1, dst + 1));
            } else {
                out.push_str(&format!(
                    "  v{} -> v{} [label=\"{}\"];\n",
                    src + 1,
                    dst + 1,
                    mult
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}
