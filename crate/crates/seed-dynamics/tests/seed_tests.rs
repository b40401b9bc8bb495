use std::collections::BTreeSet;

use exact_arith::{rat, rat_int, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quiver_core::Quiver;
use seed_dynamics::{
    extract_bilinear_coefficients, mutate_seed, mutate_seed_free, run_schedule, seed_to_json,
    trajectory_to_csv, Label, MutationSchedule, RelabelRule, ScheduleKind, Seed, SeedError,
    Value,
};

fn q_pi() -> Quiver {
    let lambda = vec![
        vec![0, -1, 2, -1],
        vec![1, 0, -3, 2],
        vec![-2, 3, 0, -1],
        vec![1, -2, 1, 0],
    ];
    Quiver::new(lambda, BTreeSet::new()).unwrap()
}

fn ones(n: usize) -> Vec<Rational> {
    vec![rat_int(1); n]
}

fn random_seed(rng: &mut ChaCha8Rng, n: usize, coeffs: bool) -> Seed {
    let mut lambda = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let m = rng.gen_range(-3..=3);
            lambda[i][j] = m;
            lambda[j][i] = -m;
        }
    }
    let quiver = Quiver::new(lambda, BTreeSet::new()).unwrap();
    let r = |rng: &mut ChaCha8Rng| rat(rng.gen_range(1..=20), rng.gen_range(1..=20));
    let x = (0..n).map(|_| r(rng)).collect();
    let y = coeffs.then(|| (0..n).map(|_| r(rng)).collect());
    Seed::numeric(quiver, x, y).unwrap()
}

#[test]
fn arrowless_coefficient_mutation_is_fixed_at_ones() {
    let seed = Seed::numeric(Quiver::arrowless(3), ones(3), Some(ones(3))).unwrap();
    let m = mutate_seed(&seed, 1).unwrap();
    assert_eq!(m.x[1], Value::Rat(rat_int(1)));
    assert_eq!(m.y.as_ref().unwrap()[1], rat_int(1));
}

#[test]
fn qpi_all_ones_coefficient_mutation() {
    // x_1' = (x_3^2 + 1 * x_2 x_4) / ((1 + 1) x_1) = 1 at the all-ones seed
    let seed = Seed::numeric(q_pi(), ones(4), Some(ones(4))).unwrap();
    let m = mutate_seed(&seed, 0).unwrap();
    assert_eq!(m.x[0], Value::Rat(rat_int(1)));
    assert_eq!(m.y.as_ref().unwrap()[0], rat_int(1));
}

#[test]
fn coefficient_mutation_is_involutive_on_200_random_seeds() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..200 {
        let n = rng.gen_range(2..=8);
        let seed = random_seed(&mut rng, n, true);
        let k = rng.gen_range(0..n);
        let back = mutate_seed(&mutate_seed(&seed, k).unwrap(), k).unwrap();
        assert_eq!(back, seed);
    }
}

#[test]
fn free_mutation_is_involutive() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.gen_range(2..=8);
        let seed = random_seed(&mut rng, n, false);
        let k = rng.gen_range(0..n);
        let back = mutate_seed_free(&mutate_seed_free(&seed, k).unwrap(), k).unwrap();
        assert_eq!(back, seed);
    }
}

#[test]
fn disconnected_mutations_commute_on_full_seeds() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..200 {
        let n = rng.gen_range(3..=8);
        let mut seed = random_seed(&mut rng, n, true);
        let i = rng.gen_range(0..n);
        let j = (i + 1 + rng.gen_range(0..n - 1)) % n;
        seed.quiver.lambda[i][j] = 0;
        seed.quiver.lambda[j][i] = 0;
        let a = mutate_seed(&mutate_seed(&seed, i).unwrap(), j).unwrap();
        let b = mutate_seed(&mutate_seed(&seed, j).unwrap(), i).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn free_all_ones_gives_two() {
    let seed = Seed::numeric(q_pi(), ones(4), None).unwrap();
    let m = mutate_seed_free(&seed, 0).unwrap();
    assert_eq!(m.x[0], Value::Rat(rat_int(2)));
}

#[test]
fn symbolic_qpi_first_mutation_is_laurent() {
    // x_5 = (x_3^2 + x_2 x_4) / x_1, a 2-term Laurent polynomial
    let seed = Seed::symbolic(q_pi());
    let m = mutate_seed_free(&seed, 0).unwrap();
    let p = m.x[0].as_poly().unwrap();
    assert_eq!(p.num_terms(), 2);
    assert_eq!(p.to_string(), "x1^-1*x3^2 + x1^-1*x2*x4");
}

#[test]
fn extract_bilinear_coefficient_pairs() {
    let mk = |yv: Rational| {
        Seed::numeric(Quiver::arrowless(1), ones(1), Some(vec![yv])).unwrap()
    };
    assert_eq!(
        extract_bilinear_coefficients(&mk(rat_int(1)), 0).unwrap(),
        (rat(1, 2), rat(1, 2))
    );
    assert_eq!(
        extract_bilinear_coefficients(&mk(rat_int(3)), 0).unwrap(),
        (rat(3, 4), rat(1, 4))
    );
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..50 {
        let y = rat(rng.gen_range(1..=20), rng.gen_range(1..=20));
        let (a, b) = extract_bilinear_coefficients(&mk(y), 0).unwrap();
        assert_eq!(a + b, rat_int(1));
    }
}

#[test]
fn mutation_error_cases() {
    let seed = Seed::numeric(Quiver::from_arrows(2, &[(0, 1, 1)], &[1]), ones(2), None).unwrap();
    assert!(matches!(mutate_seed_free(&seed, 1), Err(SeedError::Frozen(1))));
    assert!(matches!(mutate_seed_free(&seed, 7), Err(SeedError::OutOfRange(7))));
    assert!(matches!(mutate_seed(&seed, 0), Err(SeedError::NoCoefficients)));
    let zero = Seed::numeric(
        Quiver::arrowless(1),
        vec![rat_int(0)],
        None,
    )
    .unwrap();
    assert!(matches!(mutate_seed_free(&zero, 0), Err(SeedError::ZeroX(0))));
    let neg = Seed::numeric(Quiver::arrowless(1), ones(1), Some(vec![rat_int(-1)])).unwrap();
    assert!(matches!(mutate_seed(&neg, 0), Err(SeedError::MinusOneY(0))));
}

fn qpi_schedule() -> MutationSchedule {
    MutationSchedule {
        kind: ScheduleKind::Cyclic(vec![vec![0], vec![1], vec![2], vec![3]]),
        relabel: RelabelRule::shift(vec![4]),
        xlabels: (0..4).map(Label::n).collect(),
        ylabels: (0..4).map(Label::n).collect(),
    }
}

// [DERIVED] Somos-4 from all ones: 1,1,1,1,2,3,7,23,59,314,1529,8209
#[test]
fn qpi_free_schedule_reproduces_somos4() {
    let seed = Seed::numeric(q_pi(), ones(4), None).unwrap();
    let traj = run_schedule(&seed, &qpi_schedule(), 2).unwrap();
    let expect: Vec<i64> = vec![1, 1, 1, 1, 2, 3, 7, 23, 59, 314, 1529, 8209];
    for (n, e) in expect.iter().enumerate() {
        assert_eq!(
            traj.x.get(&Label::n(n as i64)).unwrap(),
            &Value::Rat(rat_int(*e)),
            "x_{n}"
        );
    }
    assert_eq!(traj.steps.len(), 8);
}

#[test]
fn zero_sweeps_records_only_initial_labels() {
    let seed = Seed::numeric(q_pi(), ones(4), Some(ones(4))).unwrap();
    let traj = run_schedule(&seed, &qpi_schedule(), 0).unwrap();
    assert_eq!(traj.x.len(), 4);
    // coefficient lookahead records the first batch's coefficient label only
    assert_eq!(traj.y.len(), 1);
    assert!(traj.steps.is_empty());
}

#[test]
fn qpi_coefficient_schedule_all_ones_fixed_point() {
    let seed = Seed::numeric(q_pi(), ones(4), Some(ones(4))).unwrap();
    let traj = run_schedule(&seed, &qpi_schedule(), 2).unwrap();
    // [DERIVED] the cluster variables stay at 1 (each exchange gives
    // (1 + y)/((y + 1) * 1) = 1); the raw all-ones coefficient seed is not a
    // fixed point of the coefficient rule, but the recorded diagonal starts
    // at y_0 = 1 and every (a, b) pair sums to 1.
    for n in 0..12 {
        assert_eq!(traj.x.get(&Label::n(n)).unwrap(), &Value::Rat(rat_int(1)));
    }
    assert_eq!(traj.y.get(&Label::n(0)).unwrap(), &rat_int(1));
    assert_eq!(traj.y.len(), 9);
    for (_, (a, b)) in &traj.coeff_pairs {
        assert_eq!(a + b, rat_int(1));
    }
}

#[test]
fn replay_is_deterministic() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let x: Vec<Rational> = (0..4).map(|_| rat(rng.gen_range(1..=20), rng.gen_range(1..=20))).collect();
    let y: Vec<Rational> = (0..4).map(|_| rat(rng.gen_range(1..=20), rng.gen_range(1..=20))).collect();
    let seed = Seed::numeric(q_pi(), x, Some(y)).unwrap();
    let t1 = run_schedule(&seed, &qpi_schedule(), 5).unwrap();
    let t2 = run_schedule(&seed, &qpi_schedule(), 5).unwrap();
    assert_eq!(t1.x, t2.x);
    assert_eq!(t1.y, t2.y);
    assert_eq!(trajectory_to_csv(&t1), trajectory_to_csv(&t2));
}

#[test]
fn batch_adjacency_is_rejected() {
    let schedule = MutationSchedule {
        kind: ScheduleKind::Cyclic(vec![vec![0, 1]]),
        relabel: RelabelRule::shift(vec![4]),
        xlabels: (0..4).map(Label::n).collect(),
        ylabels: (0..4).map(Label::n).collect(),
    };
    let seed = Seed::numeric(q_pi(), ones(4), None).unwrap();
    assert!(matches!(
        run_schedule(&seed, &schedule, 1),
        Err(SeedError::BatchAdjacency(0, 1))
    ));
}

#[test]
fn finite_schedule_sweep_limit() {
    let schedule = MutationSchedule {
        kind: ScheduleKind::Finite(vec![vec![vec![0]]]),
        relabel: RelabelRule::shift(vec![4]),
        xlabels: (0..4).map(Label::n).collect(),
        ylabels: (0..4).map(Label::n).collect(),
    };
    let seed = Seed::numeric(q_pi(), ones(4), None).unwrap();
    assert!(run_schedule(&seed, &schedule, 1).is_ok());
    assert!(matches!(
        run_schedule(&seed, &schedule, 2),
        Err(SeedError::SweepsExceeded(1, 2))
    ));
}

#[test]
fn csv_and_json_formats() {
    let seed = Seed::numeric(q_pi(), vec![rat_int(1), rat(3, 2), rat_int(2), rat_int(5)], None)
        .unwrap();
    let traj = run_schedule(&seed, &qpi_schedule(), 0).unwrap();
    let csv = trajectory_to_csv(&traj);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "label,kind,value");
    assert_eq!(lines[1], "\"0\",x,1");
    assert_eq!(lines[2], "\"1\",x,3/2");

    let j = seed_to_json(&seed);
    assert_eq!(j["x"][1], "3/2");
    assert_eq!(j["quiver"]["n"], 4);
    assert!(j["y"].is_null());
}

#[test]
fn multi_family_labels_display() {
    let l = Label::new("w", vec![3, 1]);
    assert_eq!(l.to_string(), "w,3,1");
    assert_eq!(Label::n(5).to_string(), "5");
}
