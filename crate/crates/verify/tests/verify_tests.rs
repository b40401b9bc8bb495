//! Verifier tests: every catalog identity passes on generated data, the
//! reports have the stated shape, and the checkers genuinely fail on
//! corrupted data (no vacuous passes).

use exact_arith::{rat, rat_int};
use model_zoo::{catalog_specs, make_model, CoeffData, ModelSpec, PainleveKind};
use seed_dynamics::{run_schedule, Seed, Value};
use verify::{
    check_bilinear, check_bilinear_with_coefficients, check_dkdv_to_qpi, check_hm_to_dkdv,
    check_laurent, check_painleve, random_rationals, report_to_json, reports_to_json,
    VerificationReport,
};

fn assert_pass(r: &VerificationReport) {
    assert!(
        r.pass(),
        "{} failed: checked={} skipped={} failures={:?} warnings={:?}",
        r.identity,
        r.checked,
        r.skipped,
        r.failures.first(),
        r.warnings
    );
}

#[test]
fn bilinear_passes_on_every_catalog_model() {
    for (i, spec) in catalog_specs().iter().enumerate() {
        let model = make_model(spec).unwrap();
        let x = random_rationals(100 + i as u64, model.n());
        let seed = Seed::numeric(model.quiver.clone(), x, None).unwrap();
        let sweeps = model.schedule.available_sweeps().unwrap_or(4);
        let traj = run_schedule(&seed, &model.schedule, sweeps).unwrap();
        let report = check_bilinear(&model, &traj);
        assert_pass(&report);
        assert!(report.checked >= 4, "{}: only {}", model.name, report.checked);
    }
}

#[test]
fn bilinear_fails_on_corrupted_data() {
    let model = make_model(&ModelSpec::QPI).unwrap();
    let seed = Seed::numeric(model.quiver.clone(), vec![rat_int(1); 4], None).unwrap();
    let mut traj = run_schedule(&seed, &model.schedule, 2).unwrap();
    let key = traj.x.keys().last().unwrap().clone();
    traj.x.insert(key, Value::Rat(rat(355, 113)));
    let report = check_bilinear(&model, &traj);
    assert!(!report.pass());
    assert!(!report.failures.is_empty());
}

#[test]
fn dmkdv_coefficient_checks_pass() {
    let model = make_model(&ModelSpec::DmKdV { n: 1, m: 1, w: 6, h: 4 }).unwrap();
    let y = random_rationals(7, model.n());
    let seed = Seed::numeric(model.quiver.clone(), vec![rat_int(1); model.n()], Some(y)).unwrap();
    let sweeps = model.schedule.available_sweeps().unwrap();
    let traj = run_schedule(&seed, &model.schedule, sweeps).unwrap();
    let reports = check_bilinear_with_coefficients(&model, &traj);
    assert_eq!(reports.len(), 2);
    for r in &reports {
        assert_pass(r);
    }
}

#[test]
fn painleve_checks_pass_on_random_coefficients() {
    for (spec, kind) in [
        (ModelSpec::QPI, PainleveKind::QPI),
        (ModelSpec::QPII, PainleveKind::QPII),
        (ModelSpec::QPIII, PainleveKind::QPIII),
        (ModelSpec::QPVI, PainleveKind::QPVI),
    ] {
        let model = make_model(&spec).unwrap();
        let y = random_rationals(11, model.n());
        let seed =
            Seed::numeric(model.quiver.clone(), vec![rat_int(1); model.n()], Some(y)).unwrap();
        let traj = run_schedule(&seed, &model.schedule, 6).unwrap();
        let d = CoeffData::from_trajectory(&traj);
        for r in check_painleve(kind, &d, &model.name) {
            assert_pass(&r);
        }
    }
}

#[test]
fn reduction_correspondences_pass() {
    for r in check_hm_to_dkdv(3).unwrap() {
        assert_pass(&r);
        assert!(r.checked >= 8, "{}: only {}", r.identity, r.checked);
    }
    for r in check_dkdv_to_qpi(3).unwrap() {
        assert_pass(&r);
        assert!(r.checked >= 8, "{}: only {}", r.identity, r.checked);
    }
}

#[test]
fn laurent_checks_pass() {
    let qpi = make_model(&ModelSpec::QPI).unwrap();
    let check = check_laurent(&qpi, 6).unwrap();
    for r in &check.reports {
        assert_pass(r);
        assert_eq!(r.checked, 6);
    }
    assert_eq!(check.polys.len(), 6);
    // [DERIVED] the first qPI exchange is x1' = (x3^2 + x2 x4) / x1.
    assert_eq!(check.polys[0].num_terms(), 2);

    let dkdv = make_model(&ModelSpec::DKdV { n: 1, m: 1, w: 6, h: 4 }).unwrap();
    let total: usize = 1_000; // capped to the finite schedule
    let check = check_laurent(&dkdv, total).unwrap();
    for r in &check.reports {
        assert_pass(r);
    }
}

#[test]
fn report_json_shape() {
    let mut r = VerificationReport::new("demo");
    r.record("one", &rat_int(2), &rat_int(2));
    r.record("two", &rat_int(2), &rat(1, 2));
    r.skip();
    let j = report_to_json(&r);
    assert_eq!(j["identity"], "demo");
    assert_eq!(j["pass"], false);
    assert_eq!(j["checked"], 2);
    assert_eq!(j["skipped"], 1);
    assert_eq!(j["failures"][0]["location"], "two");
    assert_eq!(j["failures"][0]["lhs"], "2");
    assert_eq!(j["failures"][0]["rhs"], "1/2");

    let empty = VerificationReport::new("empty").finish();
    assert!(!empty.pass());
    assert!(!empty.warnings.is_empty());
    let j = reports_to_json(&[empty]);
    assert_eq!(j["pass"], false);
}
