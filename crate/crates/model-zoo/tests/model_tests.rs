//! Catalog-level tests: pedigree certifications, mutation periodicity of the
//! Painleve quivers, frozen coefficient-dynamics oracles, and the structural
//! invariants of the labeled schedules.

use exact_arith::{rat, rat_int, Rational};
use model_zoo::{
    bilinear_to_painleve, catalog_specs, certify_pedigree, conserved_quantities, even_odd_split,
    make_model, model_to_json, monitor_laws, ones_seed, painleve_recurrence, painleve_rhs,
    pedigrees, proof_monitors, qpiii_even_odd_checks, seed_from_recurrence_data, CoeffData,
    ModelSpec, PainleveKind,
};
use quiver_core::is_mutation_periodic;
use seed_dynamics::{run_schedule, Label, ScheduleKind, Seed};

fn ints(vals: &[i64]) -> Vec<Rational> {
    vals.iter().map(|&v| rat_int(v)).collect()
}

fn assert_all_hold(checks: &[model_zoo::IdentityCheck]) {
    for c in checks {
        assert!(
            c.holds(),
            "{} at n={} failed: {} != {}",
            c.name,
            c.index,
            c.lhs,
            c.rhs
        );
    }
}

#[test]
fn seven_pedigrees_certify() {
    let ps = pedigrees();
    assert_eq!(ps.len(), 7);
    for p in &ps {
        certify_pedigree(&p.child).unwrap_or_else(|e| panic!("{}: {e}", p.describe()));
    }
}

#[test]
fn painleve_quivers_are_mutation_periodic() {
    for (spec, nu) in [
        (ModelSpec::QPI, model_zoo::qpi_nu()),
        (ModelSpec::QPII, model_zoo::qpii_nu()),
        (ModelSpec::QPIII, model_zoo::qpiii_nu()),
        (ModelSpec::QPVI, model_zoo::qpvi_nu()),
    ] {
        let model = make_model(&spec).unwrap();
        let seq: Vec<usize> = match &model.schedule.kind {
            ScheduleKind::Cyclic(batches) => batches.iter().flatten().copied().collect(),
            _ => unreachable!(),
        };
        // Only the first batch mutates per period: period is one batch, the
        // permutation carries the rest forward -- for qPI/qPII that is one
        // vertex, for qPIII two, for qPVI four.
        let period = match &model.schedule.kind {
            ScheduleKind::Cyclic(batches) => batches[0].clone(),
            _ => unreachable!(),
        };
        assert!(
            is_mutation_periodic(&model.quiver, &period, &nu).unwrap(),
            "{} is not mutation-periodic under its batch + permutation",
            model.name
        );
        // A full cycle of batches returns the quiver exactly.
        let mut q = model.quiver.clone();
        for &k in &seq {
            q = quiver_core::mutate_quiver(&q, k).unwrap();
        }
        assert_eq!(q, model.quiver, "{} full cycle is not the identity", model.name);
    }
}

/// [DERIVED] qPI from diagonal data (1, 2, 3, 4): the recurrence gives
/// y_4 = (4+1)(2+1) / ((1/3+1)^2 * 1) = 135/16, and the conserved
/// quantities are c1 = 9/2, c2 = 8/9.
#[test]
fn qpi_oracle_from_data_1234() {
    let model = make_model(&ModelSpec::QPI).unwrap();
    let seed = seed_from_recurrence_data(&model, &ints(&[1, 2, 3, 4])).unwrap();
    let traj = run_schedule(&seed, &model.schedule, 3).unwrap();
    let d = CoeffData::from_trajectory(&traj);
    // The forced diagonal is reproduced verbatim.
    for (n, v) in [1i64, 2, 3, 4].iter().enumerate() {
        assert_eq!(d.get("", n as i64).unwrap(), &rat_int(*v));
    }
    assert_eq!(d.get("", 4).unwrap(), &rat(135, 16));
    for n in [0, 1] {
        let c = conserved_quantities(PainleveKind::QPI, &d, n).unwrap();
        assert_eq!(c["c1"], rat(9, 2), "c1 at n={n}");
        assert_eq!(c["c2"], rat(8, 9), "c2 at n={n}");
    }
    for n in 0..8 {
        assert_all_hold(&painleve_recurrence(PainleveKind::QPI, &d, n).unwrap());
        assert_all_hold(&monitor_laws(PainleveKind::QPI, &d, n).unwrap());
    }
    for n in 1..10 {
        assert_all_hold(&painleve_rhs(PainleveKind::QPI, &d, n, 0).unwrap());
    }
}

/// [DERIVED] qPI with the all-ones diagonal stays at 1 forever; c1 = 1 and
/// c2 = v_0 = 1/2.
#[test]
fn qpi_all_ones() {
    let model = make_model(&ModelSpec::QPI).unwrap();
    let seed = seed_from_recurrence_data(&model, &ints(&[1, 1, 1, 1])).unwrap();
    let traj = run_schedule(&seed, &model.schedule, 2).unwrap();
    let d = CoeffData::from_trajectory(&traj);
    for n in 0..=8 {
        assert_eq!(d.get("", n).unwrap(), &rat_int(1), "y_{n} drifted from 1");
    }
    let c = conserved_quantities(PainleveKind::QPI, &d, 0).unwrap();
    assert_eq!(c["c1"], rat_int(1));
    assert_eq!(c["c2"], rat(1, 2));
}

/// [DERIVED] qPII all-ones diagonal: v_n = 1/2 throughout, so the
/// even-power constants are c1^2 = 1, c2^4 = (1/4)^2 = 1/16, c3^4 = 1.
#[test]
fn qpii_all_ones() {
    let model = make_model(&ModelSpec::QPII).unwrap();
    let seed = seed_from_recurrence_data(&model, &ints(&[1, 1, 1, 1, 1])).unwrap();
    let traj = run_schedule(&seed, &model.schedule, 2).unwrap();
    let d = CoeffData::from_trajectory(&traj);
    for n in 0..=10 {
        assert_eq!(d.get("", n).unwrap(), &rat_int(1));
    }
    let c = conserved_quantities(PainleveKind::QPII, &d, 0).unwrap();
    assert_eq!(c["c1^2"], rat_int(1));
    assert_eq!(c["c2^4"], rat(1, 16));
    assert_eq!(c["c3^4"], rat_int(1));
}

/// [DERIVED] qPIII all-ones diagonal: every conserved quantity equals 1
/// (t_n = 1, u_n = v_n = 1).
#[test]
fn qpiii_all_ones() {
    let model = make_model(&ModelSpec::QPIII).unwrap();
    let seed = seed_from_recurrence_data(&model, &ints(&[1; 6])).unwrap();
    let traj = run_schedule(&seed, &model.schedule, 2).unwrap();
    let d = CoeffData::from_trajectory(&traj);
    let c = conserved_quantities(PainleveKind::QPIII, &d, 0).unwrap();
    for key in ["c1^2", "c2^2", "c3^4", "c4^4"] {
        assert_eq!(c[key], rat_int(1), "{key}");
    }
}

/// [DERIVED] qPVI all-ones diagonal: every conserved quantity equals 1.
#[test]
fn qpvi_all_ones() {
    let model = make_model(&ModelSpec::QPVI).unwrap();
    let seed = seed_from_recurrence_data(&model, &ints(&[1; 8])).unwrap();
    let traj = run_schedule(&seed, &model.schedule, 2).unwrap();
    let d = CoeffData::from_trajectory(&traj);
    let c = conserved_quantities(PainleveKind::QPVI, &d, 0).unwrap();
    for key in ["c1^2", "c2", "c3^4", "c4^4", "c5^4", "c6^4"] {
        assert_eq!(c[key], rat_int(1), "{key}");
    }
}

/// Every identity holds on a generic coefficient trajectory (not a forced
/// diagonal): raw recurrences, monitor laws, constant-form equations, and
/// the constancy of the conserved quantities.
#[test]
fn generic_trajectories_satisfy_all_identities() {
    let cases: Vec<(ModelSpec, PainleveKind, Vec<Rational>)> = vec![
        (ModelSpec::QPI, PainleveKind::QPI, ints(&[2, 3, 5, 7])),
        (ModelSpec::QPII, PainleveKind::QPII, ints(&[2, 3, 5, 7, 11])),
        (
            ModelSpec::QPIII,
            PainleveKind::QPIII,
            ints(&[2, 3, 5, 7, 11, 13]),
        ),
        (
            ModelSpec::QPVI,
            PainleveKind::QPVI,
            ints(&[2, 3, 5, 7, 11, 13, 17, 19]),
        ),
    ];
    for (spec, kind, ys) in cases {
        let model = make_model(&spec).unwrap();
        let seed = Seed::numeric(model.quiver.clone(), vec![rat_int(1); model.n()], Some(ys))
            .unwrap();
        let traj = run_schedule(&seed, &model.schedule, 5).unwrap();
        let d = CoeffData::from_trajectory(&traj);
        let fams: Vec<&str> = match kind {
            PainleveKind::QPI | PainleveKind::QPII => vec![""],
            PainleveKind::QPIII => vec!["y", "z"],
            PainleveKind::QPVI => vec!["y", "z", "Y", "Z"],
        };
        let len = d.contiguous_len(&fams);
        assert!(len >= 8, "{}: only {len} contiguous indices", model.name);
        let window: i64 = match kind {
            PainleveKind::QPI => 5,
            PainleveKind::QPII => 6,
            PainleveKind::QPIII => 4,
            PainleveKind::QPVI => 3,
        };
        for n in 0..(len - window) {
            assert_all_hold(&painleve_recurrence(kind, &d, n).unwrap());
            assert_all_hold(&monitor_laws(kind, &d, n).unwrap());
        }
        for n in 1..(len - window) {
            assert_all_hold(&painleve_rhs(kind, &d, n, 0).unwrap());
        }
        let c0 = conserved_quantities(kind, &d, 0).unwrap();
        let c1 = conserved_quantities(kind, &d, 1).unwrap();
        assert_eq!(c0, c1, "{}: conserved quantities drift", model.name);
        let m0 = proof_monitors(kind, &d, 0).unwrap();
        assert!(!m0.is_empty());
        if kind == PainleveKind::QPIII {
            for n in 0..2 {
                assert_all_hold(&qpiii_even_odd_checks(&d, n, 0).unwrap());
            }
        }
    }
}

/// The seed-chain ledger within the first sweep: the t-th mutation consumes
/// the coefficient labeled y_t, whose value is exactly the forced diagonal
/// datum, and produces the cluster variable labeled t + period.
#[test]
fn qpi_seed_chain_ledger() {
    let model = make_model(&ModelSpec::QPI).unwrap();
    let data = ints(&[2, 3, 5, 7]);
    let seed = seed_from_recurrence_data(&model, &data).unwrap();
    let traj = run_schedule(&seed, &model.schedule, 1).unwrap();
    assert_eq!(traj.steps.len(), 4);
    for (t, step) in traj.steps.iter().enumerate() {
        let (ylabel, yval) = step.coefficient.as_ref().unwrap();
        assert_eq!(ylabel, &Label::new("", vec![t as i64]));
        assert_eq!(yval, &data[t]);
        assert_eq!(step.label, Label::new("", vec![t as i64 + 4]));
        assert_eq!(step.vertex, t);
    }
}

/// The bilinear-to-Painleve transformation: the all-ones coefficient-free
/// qPI run (the Somos-type ledger) maps to a sequence solving qPI.
#[test]
fn qpi_transform_from_bilinear() {
    let model = make_model(&ModelSpec::QPI).unwrap();
    let seed = ones_seed(&model, false).unwrap();
    let traj = run_schedule(&seed, &model.schedule, 3).unwrap();
    let ys = bilinear_to_painleve(PainleveKind::QPI, &traj).unwrap();
    assert!(ys.len() >= 10);
    // [DERIVED] x = 1,1,1,1,2,3,7,... gives y_0 = 1, y_1 = 1, y_2 = 2*1/1 = 2.
    assert_eq!(ys[0], rat_int(1));
    assert_eq!(ys[2], rat_int(2));
    let d = CoeffData::from_sequence(&ys);
    for n in 0..(ys.len() as i64 - 5) {
        assert_all_hold(&painleve_recurrence(PainleveKind::QPI, &d, n).unwrap());
    }
    let c0 = conserved_quantities(PainleveKind::QPI, &d, 0).unwrap();
    let c1 = conserved_quantities(PainleveKind::QPI, &d, 1).unwrap();
    assert_eq!(c0, c1);
    let (f, g) = even_odd_split(&ys);
    assert_eq!(f[1], ys[2]);
    assert_eq!(g[0], ys[1]);
}

#[test]
fn catalog_builds_and_describes() {
    let specs = catalog_specs();
    assert_eq!(specs.len(), 9);
    let names: Vec<String> = specs
        .iter()
        .map(|s| make_model(s).unwrap().name)
        .collect();
    assert_eq!(
        names,
        [
            "dKdV(1,1) 6x4",
            "HM(1) 5x6x4",
            "HM(2) 5x6x4",
            "dmKdV(1,1) 6x4",
            "dToda 8x5",
            "qPI",
            "qPII",
            "qPIII",
            "qPVI"
        ]
    );
    let qpvi = make_model(&ModelSpec::QPVI).unwrap();
    assert_eq!(
        qpvi.pedigree.as_ref().unwrap().describe(),
        "dmKdV(1,1) / (2,-2)"
    );
    let j = model_to_json(&qpvi);
    assert_eq!(j["vertices"], 8);
    assert_eq!(j["schedule"]["cyclic"][0], serde_json::json!([1, 2, 3, 4]));
    assert_eq!(j["labels"][0], "w,0");
}

/// Every lattice board runs a full all-ones coefficient-free sweep; the
/// first mutation of the dKdV board produces the value 2 (two unit
/// exchange monomials).
#[test]
fn boards_run_all_ones() {
    for spec in catalog_specs() {
        let model = make_model(&spec).unwrap();
        if let ScheduleKind::Finite(sweeps) = &model.schedule.kind {
            assert!(!sweeps.is_empty(), "{} has no sweeps", model.name);
            let seed = ones_seed(&model, false).unwrap();
            let traj = run_schedule(&seed, &model.schedule, 1).unwrap();
            assert!(!traj.steps.is_empty());
            if model.name.starts_with("dKdV") {
                assert_eq!(traj.steps[0].value.as_rat().unwrap(), &rat_int(2));
            }
        }
    }
}

/// The recurrence-data seeding reproduces arbitrary diagonal data verbatim
/// for the batched models too.
#[test]
fn recurrence_data_forces_the_diagonal() {
    for (spec, data) in [
        (ModelSpec::QPII, ints(&[2, 3, 5, 7, 11])),
        (ModelSpec::QPVI, ints(&[2, 3, 5, 7, 11, 13, 17, 19])),
    ] {
        let model = make_model(&spec).unwrap();
        let seed = seed_from_recurrence_data(&model, &data).unwrap();
        let traj = run_schedule(&seed, &model.schedule, 1).unwrap();
        for (t, step) in traj.steps.iter().take(data.len()).enumerate() {
            let (_, yval) = step.coefficient.as_ref().unwrap();
            assert_eq!(yval, &data[t], "{} datum {t}", model.name);
        }
    }
}
