//! Finite-window boards for the lattice models.
//!
//! A board is built by a staged bootstrap: sites are the reduction-flow
//! orbits intersecting the window, each carrying a phase (how many times it
//! has been mutated). A site is ready when its forward neighbors are one
//! phase ahead, its backward neighbors are at the same phase, and the next
//! produced label still lies in the window. At a site's first mutation the
//! arrows it must present (the model's exchange pattern) determine its
//! initial row; the assembled static quiver is then replayed from scratch,
//! asserting the exact exchange pattern before every mutation. The replay is
//! the certification that the assembled boundary arrows are consistent: the
//! figures defining the window boundaries are not available in text form,
//! and the bilinear exchange pattern is the oracle.

use std::collections::BTreeMap;

use quiver_core::{mutate_quiver, Quiver};
use seed_dynamics::Label;

use crate::ZooError;

/// A lattice site in flow-orbit coordinates.
pub type Site = Vec<i64>;

/// Window geometry of one lattice model: sites, dependency structure, and
/// the label each (site, phase) pair carries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Geometry {
    /// dKdV board, sites s = n - 2m, labels (n, m).
    DKdV { w: i64, h: i64 },
    /// HM board, sites (u, w) = (n - m, l + m), labels (n, l, m).
    Hm { w1: i64, w2: i64, h: i64 },
    /// dmKdV board, sites (s, p) with s = n - m and component parity p;
    /// labels w_n^m / x_n^m by component (p + m) mod 2.
    DmKdV { w: i64, h: i64 },
    /// dToda ladder, sites (a, m) with a the parity of n; labels (n, m).
    DToda { w: i64, h: i64 },
}

fn div_ceil(a: i64, b: i64) -> i64 {
    (a + b - 1).div_euclid(b)
}

impl Geometry {
    pub fn sites(&self) -> Vec<Site> {
        match *self {
            Geometry::DKdV { w, h } => (-2 * (h - 1)..=w - 1).map(|s| vec![s]).collect(),
            Geometry::Hm { w1, w2, h } => {
                let lo = -(w2 / 2);
                let hi = w2 - w2 / 2; // exclusive
                (-(h - 1)..=w1 - 1)
                    .flat_map(|u| (lo..hi).map(move |w| vec![u, w]))
                    .collect()
            }
            Geometry::DmKdV { w, h } => (-(h - 1)..=w - 1)
                .flat_map(|s| (0..2).map(move |p| vec![s, p]))
                .collect(),
            Geometry::DToda { h, .. } => (0..h)
                .flat_map(|m| (0..2).map(move |a| vec![a, m]))
                .collect(),
        }
    }

    /// The exchange pattern required at a site's mutation: neighbor site ->
    /// net multiplicity (unclipped; callers drop sites outside the window).
    pub fn req(&self, v: &Site) -> BTreeMap<Site, i64> {
        match *self {
            Geometry::DKdV { .. } => {
                let s = v[0];
                BTreeMap::from([
                    (vec![s - 2], 1),
                    (vec![s + 2], 1),
                    (vec![s - 1], -1),
                    (vec![s + 1], -1),
                ])
            }
            Geometry::Hm { .. } => {
                let (u, w) = (v[0], v[1]);
                BTreeMap::from([
                    (vec![u - 1, w + 1], 1),
                    (vec![u + 1, w - 1], 1),
                    (vec![u - 1, w], -1),
                    (vec![u + 1, w], -1),
                ])
            }
            Geometry::DmKdV { .. } => {
                let (s, p) = (v[0], v[1]);
                BTreeMap::from([
                    (vec![s - 1, p], -1),
                    (vec![s + 1, p], -1),
                    (vec![s - 1, 1 - p], 1),
                    (vec![s + 1, 1 - p], 1),
                ])
            }
            Geometry::DToda { h, .. } => {
                let (a, m) = (v[0], v[1]);
                let mut r = BTreeMap::from([(vec![1 - a, m], -2)]);
                if m + 1 < h {
                    r.insert(vec![a, m + 1], 1);
                }
                if m > 0 {
                    r.insert(vec![a, m - 1], 1);
                }
                r
            }
        }
    }

    /// Sites that must be one phase ahead before this site may mutate.
    pub fn ahead(&self, v: &Site) -> Vec<Site> {
        match *self {
            Geometry::DKdV { .. } => vec![vec![v[0] - 1], vec![v[0] - 2]],
            Geometry::Hm { .. } => vec![vec![v[0] - 1, v[1] + 1], vec![v[0] - 1, v[1]]],
            Geometry::DmKdV { .. } => vec![vec![v[0] - 1, 0], vec![v[0] - 1, 1]],
            Geometry::DToda { .. } => {
                let (a, m) = (v[0], v[1]);
                if a == 0 {
                    vec![vec![0, m - 1]]
                } else {
                    vec![vec![1, m - 1], vec![0, m]]
                }
            }
        }
    }

    /// Sites that must be at the same phase before this site may mutate.
    pub fn behind(&self, v: &Site) -> Vec<Site> {
        match *self {
            Geometry::DKdV { .. } => vec![vec![v[0] + 1], vec![v[0] + 2]],
            Geometry::Hm { .. } => vec![vec![v[0] + 1, v[1] - 1], vec![v[0] + 1, v[1]]],
            Geometry::DmKdV { .. } => vec![vec![v[0] + 1, 0], vec![v[0] + 1, 1]],
            Geometry::DToda { .. } => {
                let (a, m) = (v[0], v[1]);
                if a == 0 {
                    vec![vec![0, m + 1], vec![1, m]]
                } else {
                    vec![vec![1, m + 1]]
                }
            }
        }
    }

    /// Initial phase of a site (time-zero data sits at this phase).
    pub fn entry(&self, v: &Site) -> i64 {
        match *self {
            Geometry::DKdV { .. } => div_ceil(-v[0], 2).max(0),
            Geometry::Hm { .. } | Geometry::DmKdV { .. } => (-v[0]).max(0),
            Geometry::DToda { h, .. } => (h - 2 - v[1]).max(0),
        }
    }

    /// Whether the site can hold a value at the given phase (its label stays
    /// inside the window).
    pub fn canhold(&self, v: &Site, m: i64) -> bool {
        match *self {
            Geometry::DKdV { w, h } => {
                let n = v[0] + 2 * m;
                (0..=w - 1).contains(&n) && (0..=h - 1).contains(&m)
            }
            Geometry::Hm { w1, w2, h } => {
                let lo = -(w2 / 2);
                let hi = w2 - w2 / 2;
                (0..=w1 - 1).contains(&(v[0] + m))
                    && (0..=h - 1).contains(&m)
                    && (lo..hi).contains(&(v[1] - m))
            }
            Geometry::DmKdV { w, h } => {
                (0..=w - 1).contains(&(v[0] + m)) && (0..=h - 1).contains(&m)
            }
            Geometry::DToda { w, .. } => m >= 0 && v[0] + 2 * m <= w - 1,
        }
    }

    /// The label carried by a site at a phase.
    pub fn label(&self, v: &Site, m: i64) -> Label {
        match *self {
            Geometry::DKdV { .. } => Label::new("", vec![v[0] + 2 * m, m]),
            Geometry::Hm { .. } => Label::new("", vec![v[0] + m, v[1] - m, m]),
            Geometry::DmKdV { .. } => {
                let family = if (v[1] + m).rem_euclid(2) == 0 { "w" } else { "x" };
                Label::new(family, vec![v[0] + m, m])
            }
            Geometry::DToda { .. } => Label::new("", vec![v[0] + 2 * m, v[1]]),
        }
    }
}

/// A bootstrapped, replay-certified finite board.
#[derive(Clone, Debug)]
pub struct Board {
    pub geometry: Geometry,
    pub sites: Vec<Site>,
    /// Static initial quiver; sites that never mutate are frozen.
    pub quiver: Quiver,
    /// Per-sweep singleton batches in dependency order (a sweep ends when a
    /// site would mutate a second time).
    pub sweeps: Vec<Vec<Vec<usize>>>,
    /// Initial label of every site (at its entry phase).
    pub labels: Vec<Label>,
}

pub fn build_board(geometry: Geometry) -> Result<Board, ZooError> {
    let sites = geometry.sites();
    let index: BTreeMap<Site, usize> = sites
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();
    let ns = sites.len();
    let mut phase: Vec<i64> = sites.iter().map(|v| geometry.entry(v)).collect();

    let ready = |phase: &[i64], i: usize| -> bool {
        let v = &sites[i];
        if !geometry.canhold(v, phase[i] + 1) {
            return false;
        }
        geometry.ahead(v).iter().all(|t| {
            index
                .get(t)
                .is_some_and(|&j| phase[j] == phase[i] + 1)
        }) && geometry.behind(v).iter().all(|t| {
            index
                .get(t)
                .is_some_and(|&j| phase[j] == phase[i])
        })
    };

    // Bootstrap pass: solve each site's initial row at its first mutation.
    let mut lambda = vec![vec![0i64; ns]; ns];
    let mut solved: Vec<Option<BTreeMap<usize, i64>>> = vec![None; ns];
    let mut events: Vec<usize> = Vec::new();
    loop {
        let Some(u) = (0..ns).find(|&i| ready(&phase, i)) else {
            break;
        };
        let req: BTreeMap<usize, i64> = geometry
            .req(&sites[u])
            .into_iter()
            .filter_map(|(t, m)| index.get(&t).map(|&j| (j, m)))
            .collect();
        if solved[u].is_none() {
            let mut init = BTreeMap::new();
            for j in 0..ns {
                let want = req.get(&j).copied().unwrap_or(0);
                let diff = want - lambda[u][j];
                if diff != 0 {
                    init.insert(j, diff);
                    lambda[u][j] += diff;
                    lambda[j][u] -= diff;
                }
            }
            solved[u] = Some(init);
        }
        let row: BTreeMap<usize, i64> = (0..ns)
            .filter(|&j| lambda[u][j] != 0)
            .map(|j| (j, lambda[u][j]))
            .collect();
        let want: BTreeMap<usize, i64> = req.iter().filter(|(_, &m)| m != 0).map(|(&j, &m)| (j, m)).collect();
        if row != want {
            return Err(ZooError::BoardCertification(format!(
                "bootstrap row mismatch at site {:?} phase {}",
                sites[u], phase[u]
            )));
        }
        let q = Quiver::new(lambda, Default::default())
            .map_err(|e| ZooError::BoardCertification(e.to_string()))?;
        lambda = mutate_quiver(&q, u)
            .map_err(|e| ZooError::BoardCertification(e.to_string()))?
            .lambda;
        phase[u] += 1;
        events.push(u);
        if events.len() > 100_000 {
            return Err(ZooError::BoardCertification("bootstrap overrun".into()));
        }
    }

    // Assemble the static quiver from the solved rows, checking pairwise
    // consistency (each bond is claimed by up to two sites).
    let mut claims: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for (s, init) in solved.iter().enumerate() {
        let Some(init) = init else { continue };
        for (&t, &m) in init {
            let (key, val) = if s < t { ((s, t), m) } else { ((t, s), -m) };
            if let Some(&prev) = claims.get(&key) {
                if prev != val {
                    return Err(ZooError::BoardCertification(format!(
                        "conflicting arrow claims between sites {:?} and {:?}",
                        sites[key.0], sites[key.1]
                    )));
                }
            } else {
                claims.insert(key, val);
            }
        }
    }
    let mut lambda = vec![vec![0i64; ns]; ns];
    for (&(a, b), &m) in &claims {
        lambda[a][b] = m;
        lambda[b][a] = -m;
    }
    let frozen: std::collections::BTreeSet<usize> = (0..ns)
        .filter(|i| !events.contains(i))
        .collect();
    let quiver = Quiver::new(lambda, frozen)
        .map_err(|e| ZooError::BoardCertification(e.to_string()))?;

    // Replay with the static quiver: every mutation must present the exact
    // exchange pattern. This certifies the assembled board.
    let mut phase: Vec<i64> = sites.iter().map(|v| geometry.entry(v)).collect();
    let mut q = quiver.clone();
    for &u in &events {
        debug_assert!(ready(&phase, u));
        let want: BTreeMap<usize, i64> = geometry
            .req(&sites[u])
            .into_iter()
            .filter_map(|(t, m)| index.get(&t).map(|&j| (j, m)))
            .filter(|&(_, m)| m != 0)
            .collect();
        let row: BTreeMap<usize, i64> = (0..ns)
            .filter(|&j| q.lambda[u][j] != 0)
            .map(|j| (j, q.lambda[u][j]))
            .collect();
        if row != want {
            return Err(ZooError::BoardCertification(format!(
                "replay row mismatch at site {:?} phase {}",
                sites[u], phase[u]
            )));
        }
        q = mutate_quiver(&q, u).map_err(|e| ZooError::BoardCertification(e.to_string()))?;
        phase[u] += 1;
    }

    // Chunk the event list into sweeps: a sweep ends when a site repeats.
    let mut sweeps: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut current: Vec<Vec<usize>> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for &u in &events {
        if seen.contains(&u) {
            sweeps.push(std::mem::take(&mut current));
            seen.clear();
        }
        seen.insert(u);
        current.push(vec![u]);
    }
    if !current.is_empty() {
        sweeps.push(current);
    }

    let labels = sites
        .iter()
        .map(|v| geometry.label(v, geometry.entry(v)))
        .collect();
    Ok(Board {
        geometry,
        sites,
        quiver,
        sweeps,
        labels,
    })
}
