//! The model catalog: named constructors bundling quiver, schedule,
//! labeling and pedigree for every model.

use std::collections::BTreeMap;

use exact_arith::{rat_int, Rational};
use quiver_core::{LatticeSpec, Quiver, SiteMap};
use seed_dynamics::{Label, MutationSchedule, RelabelRule, ScheduleKind, Seed};

use crate::bootstrap::{build_board, Geometry};
use crate::folds::{pedigrees, Pedigree};
use crate::matrices;
use crate::ZooError;

/// A model request: which catalog entry, with window parameters for the
/// lattice boards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelSpec {
    /// dKdV board on a w x h label window (implemented for N = M = 1).
    DKdV { n: u32, m: u32, w: i64, h: i64 },
    /// HM board on a w1 x w2 x h label window.
    Hm { n: u32, w1: i64, w2: i64, h: i64 },
    /// dmKdV board on a w x h label window (implemented for N = M = 1).
    DmKdV { n: u32, m: u32, w: i64, h: i64 },
    /// dToda ladder on a w x h label window.
    DToda { w: i64, h: i64 },
    QPI,
    QPII,
    QPIII,
    QPVI,
}

/// A constructed model: quiver, schedule (with initial labels and relabel
/// rule), optional site map and lattice stencil, and reduction pedigree.
#[derive(Clone, Debug)]
pub struct Model {
    pub name: String,
    pub spec: ModelSpec,
    pub quiver: Quiver,
    pub schedule: MutationSchedule,
    /// Site coordinates per vertex for windowed boards.
    pub sites: Option<SiteMap>,
    /// The model's translation-invariant exchange stencil (lattice models).
    pub lattice: Option<LatticeSpec>,
    pub pedigree: Option<Pedigree>,
}

impl Model {
    pub fn n(&self) -> usize {
        self.quiver.n()
    }

    /// Number of mutable (non-frozen) vertices.
    pub fn mutable_count(&self) -> usize {
        (0..self.n()).filter(|&v| !self.quiver.is_frozen(v)).count()
    }
}

fn pedigree_for(child: &str) -> Option<Pedigree> {
    pedigrees().into_iter().find(|p| p.child == child)
}

/// The exchange stencil of each lattice model in label coordinates, as a
/// [`LatticeSpec`] usable with the generic reduction machinery. Window
/// bounds are per label axis.
pub fn lattice_spec(spec: &ModelSpec) -> Option<LatticeSpec> {
    let s = |offsets: &[(&[i64], i64)], window: Vec<(i64, i64)>, quotient: Option<Vec<i64>>| {
        LatticeSpec {
            dimension: window.len(),
            window,
            stencil: offsets
                .iter()
                .map(|&(o, m)| (o.to_vec(), m))
                .collect(),
            quotient,
        }
    };
    match *spec {
        ModelSpec::DKdV { w, h, .. } => Some(s(
            &[(&[0, 1], 1), (&[2, 0], 1), (&[1, 0], -1), (&[1, 1], -1)],
            vec![(0, w - 1), (0, h - 1)],
            None,
        )),
        ModelSpec::Hm { w1, w2, h, .. } => Some(s(
            &[
                (&[0, 1, 0], 1),
                (&[1, 0, -1], 1),
                (&[0, 1, -1], -1),
                (&[1, 0, 0], -1),
            ],
            vec![(0, w1 - 1), (-(w2 / 2), w2 - w2 / 2 - 1), (0, h - 1)],
            None,
        )),
        ModelSpec::DmKdV { w, h, .. } => Some(s(
            &[
                (&[0, 1, 0], 1),
                (&[1, 0, -1], 1),
                (&[0, 1, -1], -1),
                (&[1, 0, 0], -1),
            ],
            vec![(0, w - 1), (0, 1), (0, h - 1)],
            Some(vec![0, 0, 2]),
        )),
        ModelSpec::DToda { w, h } => Some(s(
            &[(&[0, 1], 1), (&[2, -1], 1), (&[1, 0], -2)],
            vec![(0, w - 1), (0, h - 1)],
            None,
        )),
        _ => None,
    }
}

fn painleve_model(
    name: &str,
    spec: ModelSpec,
    quiver: Quiver,
    batches: Vec<Vec<usize>>,
    x_families: &[&str],
    y_families: &[&str],
    shift: i64,
) -> Model {
    let n = quiver.n();
    let mut x_map = BTreeMap::new();
    let mut y_map = BTreeMap::new();
    let fam_count = x_families.len();
    // Each family relabels to the family its vertex carries next; the swap
    // tables in `next_family` are the displayed seed-chain renamings.
    for &f in x_families {
        x_map.insert(f.to_string(), (next_family(name, f).to_string(), vec![shift]));
    }
    for &f in y_families {
        y_map.insert(f.to_string(), (next_family(name, f).to_string(), vec![shift]));
    }
    let xlabels: Vec<Label> = (0..n)
        .map(|v| Label::new(x_families[v % fam_count], vec![(v / fam_count) as i64]))
        .collect();
    let ylabels: Vec<Label> = (0..n)
        .map(|v| Label::new(y_families[v % fam_count], vec![(v / fam_count) as i64]))
        .collect();
    Model {
        name: name.into(),
        spec,
        quiver,
        schedule: MutationSchedule {
            kind: ScheduleKind::Cyclic(batches),
            relabel: RelabelRule { x_map, y_map },
            xlabels,
            ylabels,
        },
        sites: None,
        lattice: None,
        pedigree: pedigree_for(name),
    }
}

/// The per-model family renamings of the displayed seed chains: q-PIII swaps
/// w/x (and y/z) at mutated vertices; q-PVI maps w->X, x->W, W->x, X->w
/// (and y->Z, z->Y, Y->z, Z->y).
fn next_family(model: &str, f: &str) -> &'static str {
    match (model, f) {
        ("qPI", _) | ("qPII", _) => "",
        ("qPIII", "w") => "x",
        ("qPIII", "x") => "w",
        ("qPIII", "y") => "z",
        ("qPIII", "z") => "y",
        ("qPVI", "w") => "X",
        ("qPVI", "x") => "W",
        ("qPVI", "W") => "x",
        ("qPVI", "X") => "w",
        ("qPVI", "y") => "Z",
        ("qPVI", "z") => "Y",
        ("qPVI", "Y") => "z",
        ("qPVI", "Z") => "y",
        _ => unreachable!("unknown family {f} for {model}"),
    }
}

/// Builds a model from its catalog entry.
pub fn make_model(spec: &ModelSpec) -> Result<Model, ZooError> {
    match spec {
        ModelSpec::QPI => Ok(painleve_model(
            "qPI",
            spec.clone(),
            matrices::qpi_quiver(),
            vec![vec![0], vec![1], vec![2], vec![3]],
            &[""],
            &[""],
            4,
        )),
        ModelSpec::QPII => Ok(painleve_model(
            "qPII",
            spec.clone(),
            matrices::qpii_quiver(),
            vec![vec![0], vec![1], vec![2], vec![3], vec![4]],
            &[""],
            &[""],
            5,
        )),
        ModelSpec::QPIII => Ok(painleve_model(
            "qPIII",
            spec.clone(),
            matrices::qpiii_quiver(),
            vec![vec![0, 1], vec![2, 3], vec![4, 5]],
            &["w", "x"],
            &["y", "z"],
            3,
        )),
        ModelSpec::QPVI => Ok(painleve_model(
            "qPVI",
            spec.clone(),
            matrices::qpvi_quiver(),
            vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]],
            &["w", "x", "W", "X"],
            &["y", "z", "Y", "Z"],
            2,
        )),
        ModelSpec::DKdV { n, m, w, h } => {
            if (*n, *m) != (1, 1) {
                return Err(ZooError::UnsupportedParameters(format!(
                    "dKdV board is implemented for N = M = 1 (got N={n}, M={m}); \
                     generalized dKdV quivers enter through the train profiles"
                )));
            }
            board_model(
                format!("dKdV(1,1) {w}x{h}"),
                spec.clone(),
                Geometry::DKdV { w: *w, h: *h },
                RelabelRule::shift(vec![2, 1]),
                pedigree_for("dKdV(1,1)"),
            )
        }
        ModelSpec::Hm { n, w1, w2, h } => {
            if *n == 0 {
                return Err(ZooError::UnsupportedParameters("HM needs N >= 1".into()));
            }
            board_model(
                format!("HM({n}) {w1}x{w2}x{h}"),
                spec.clone(),
                Geometry::Hm {
                    w1: *w1,
                    w2: *w2,
                    h: *h,
                },
                RelabelRule::shift(vec![1, -1, 1]),
                None,
            )
        }
        ModelSpec::DmKdV { n, m, w, h } => {
            if (*n, *m) != (1, 1) {
                return Err(ZooError::UnsupportedParameters(format!(
                    "dmKdV board is implemented for N = M = 1 (got N={n}, M={m}); \
                     generalized dmKdV quivers enter through the chain profiles"
                )));
            }
            let mut x_map = BTreeMap::new();
            x_map.insert("w".to_string(), ("x".to_string(), vec![1, 1]));
            x_map.insert("x".to_string(), ("w".to_string(), vec![1, 1]));
            board_model(
                format!("dmKdV(1,1) {w}x{h}"),
                spec.clone(),
                Geometry::DmKdV { w: *w, h: *h },
                RelabelRule {
                    x_map: x_map.clone(),
                    y_map: x_map,
                },
                pedigree_for("dmKdV(1,1)"),
            )
        }
        ModelSpec::DToda { w, h } => board_model(
            format!("dToda {w}x{h}"),
            spec.clone(),
            Geometry::DToda { w: *w, h: *h },
            RelabelRule::shift(vec![2, 0]),
            pedigree_for("dToda"),
        ),
    }
}

fn board_model(
    name: String,
    spec: ModelSpec,
    geometry: Geometry,
    relabel: RelabelRule,
    pedigree: Option<Pedigree>,
) -> Result<Model, ZooError> {
    let board = build_board(geometry)?;
    let lattice = lattice_spec(&spec);
    let labels = board.labels.clone();
    Ok(Model {
        name,
        spec,
        quiver: board.quiver.clone(),
        schedule: MutationSchedule {
            kind: ScheduleKind::Finite(board.sweeps.clone()),
            relabel,
            xlabels: labels.clone(),
            ylabels: labels,
        },
        sites: Some(SiteMap::from_sites(board.sites.clone())),
        lattice,
        pedigree,
    })
}

/// All-ones seed; coefficients all one when `with_coeffs`.
pub fn ones_seed(model: &Model, with_coeffs: bool) -> Result<Seed, ZooError> {
    let n = model.n();
    let x = vec![rat_int(1); n];
    let y = with_coeffs.then(|| vec![rat_int(1); n]);
    Seed::numeric(model.quiver.clone(), x, y).map_err(ZooError::from)
}

/// Symbolic coefficient-free seed.
pub fn symbolic_seed(model: &Model) -> Seed {
    Seed::symbolic(model.quiver.clone())
}

/// Numeric coefficient-free seed from per-vertex values.
pub fn numeric_seed(model: &Model, x: Vec<Rational>) -> Result<Seed, ZooError> {
    Seed::numeric(model.quiver.clone(), x, None).map_err(ZooError::from)
}

/// Coefficient-mode seed whose recorded coefficient diagonal reproduces the
/// given recurrence data: `data[t]` is the value the t-th mutation of the
/// first cycle must see at its vertex. The seed coefficients are obtained by
/// dividing out the multiplier each vertex accumulates from the earlier
/// mutations of the cycle (with the data values in place of the unknown
/// coefficients, which is exact because the diagonal is forced). Cluster
/// variables are all ones.
pub fn seed_from_recurrence_data(model: &Model, data: &[Rational]) -> Result<Seed, ZooError> {
    use num::{One, Zero};
    let n = model.n();
    let order: Vec<usize> = match &model.schedule.kind {
        ScheduleKind::Cyclic(batches) => batches.iter().flatten().copied().collect(),
        ScheduleKind::Finite(_) => {
            return Err(ZooError::UnsupportedParameters(
                "recurrence data seeding applies to the cyclic (Painleve) schedules".into(),
            ))
        }
    };
    if data.len() != order.len() {
        return Err(ZooError::UnsupportedParameters(format!(
            "need {} data values (one per mutation of a sweep), got {}",
            order.len(),
            data.len()
        )));
    }
    if let Some(d) = data.iter().find(|d| d.is_zero() || **d == -Rational::one()) {
        return Err(ZooError::UnsupportedParameters(format!(
            "recurrence data must avoid 0 and -1, got {d}"
        )));
    }
    let mut quiver = model.quiver.clone();
    let mut mult = vec![Rational::one(); n];
    let mut y = vec![Rational::one(); n];
    for (t, &k) in order.iter().enumerate() {
        let d = &data[t];
        y[k] = d / &mult[k];
        let one = Rational::one();
        let d_inv_plus_1 = d.recip() + &one;
        let d_plus_1 = d + &one;
        for i in 0..n {
            if i == k {
                continue;
            }
            let l = quiver.lambda[k][i];
            if l > 0 {
                mult[i] = &mult[i] / seed_dynamics::rat_pow(&d_inv_plus_1, l as u32);
            } else if l < 0 {
                mult[i] = &mult[i] * seed_dynamics::rat_pow(&d_plus_1, (-l) as u32);
            }
        }
        quiver = quiver_core::mutate_quiver(&quiver, k)?;
    }
    Seed::numeric(model.quiver.clone(), vec![rat_int(1); n], Some(y)).map_err(ZooError::from)
}

/// Catalog of all models a CLI can list (lattice boards at a small default
/// window).
pub fn catalog_specs() -> Vec<ModelSpec> {
    vec![
        ModelSpec::DKdV { n: 1, m: 1, w: 6, h: 4 },
        ModelSpec::Hm { n: 1, w1: 5, w2: 6, h: 4 },
        ModelSpec::Hm { n: 2, w1: 5, w2: 6, h: 4 },
        ModelSpec::DmKdV { n: 1, m: 1, w: 6, h: 4 },
        ModelSpec::DToda { w: 8, h: 5 },
        ModelSpec::QPI,
        ModelSpec::QPII,
        ModelSpec::QPIII,
        ModelSpec::QPVI,
    ]
}

/// Catalog entry as JSON: quiver, schedule batches, labels, pedigree.
pub fn model_to_json(model: &Model) -> serde_json::Value {
    use serde_json::json;
    let batches = |b: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
        b.iter()
            .map(|batch| batch.iter().map(|v| v + 1).collect())
            .collect()
    };
    let schedule = match &model.schedule.kind {
        ScheduleKind::Cyclic(b) => json!({ "cyclic": batches(b) }),
        ScheduleKind::Finite(sweeps) => json!({
            "sweeps": sweeps.iter().map(batches).collect::<Vec<_>>(),
        }),
    };
    json!({
        "name": model.name,
        "vertices": model.n(),
        "mutable": model.mutable_count(),
        "quiver": quiver_core::quiver_to_json(&model.quiver),
        "schedule": schedule,
        "labels": model
            .schedule
            .xlabels
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>(),
        "pedigree": model.pedigree.as_ref().map(|p| p.describe()),
    })
}
