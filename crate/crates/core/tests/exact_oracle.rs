//! The floating-point solver against exact rational elimination.

use rand::{Rng, SeedableRng};
use squarewave::linsolve::{inf_norm, solve, SolverOptions};
use squarewave::oracle::{run_length_sign, solve_exact, solve_exact_f64};
use squarewave::{sign_at, SignPattern};

#[test]
fn eight_point_system_has_exact_paper_solution() {
    use num_rational::BigRational;
    let rhs = [84.0, -152.0, 63.0, 98.0, -35.0, 0.0, 145.0, -14.0];
    let exact = solve_exact(&rhs).unwrap();
    let want = [170.5, -38.5, -100.5, -135.5, 195.0, -135.5, 10.5, 118.0];
    for (x, w) in exact.iter().zip(want) {
        assert_eq!(*x, BigRational::from_float(w).unwrap());
    }
}

#[test]
fn small_systems_match_rational_elimination() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    let opts = SolverOptions::default();
    for n in 1..=10 {
        let pattern = SignPattern::new(n).unwrap();
        for _ in 0..100 {
            let rhs: Vec<f64> = (0..n).map(|_| rng.random_range(-100.0..=100.0)).collect();
            let exact = solve_exact_f64(&rhs).expect("nonsingular");
            let (got, _) = solve(&pattern, &rhs, &opts).unwrap();
            for (g, e) in got.iter().zip(&exact) {
                assert!((g - e).abs() <= 1e-12, "n = {n}: {g} vs {e}");
            }
        }
    }
}

#[test]
fn six_by_six_random_rhs() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(6);
    let rhs: Vec<f64> = (0..6).map(|_| rng.random_range(-100.0..=100.0)).collect();
    let exact = solve_exact_f64(&rhs).unwrap();
    let (got, _) = solve(
        &SignPattern::new(6).unwrap(),
        &rhs,
        &SolverOptions::default(),
    )
    .unwrap();
    assert!(got.iter().zip(&exact).all(|(g, e)| (g - e).abs() <= 1e-12));
}

#[test]
fn oracle_sign_agrees_with_library_rule() {
    for n in 1..=64 {
        for i in 1..=n {
            for j in 1..=n {
                assert_eq!(sign_at(n, i, j).unwrap().as_i8(), run_length_sign(n, i, j));
            }
        }
    }
}

#[test]
fn residual_stays_small_as_n_grows() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    let opts = SolverOptions::default();
    for n in [1usize, 2, 3, 31, 100, 257, 512, 1024] {
        let rhs: Vec<f64> = (0..n).map(|_| rng.random_range(-100.0..=100.0)).collect();
        let (_, report) = solve(&SignPattern::new(n).unwrap(), &rhs, &opts).unwrap();
        assert!(
            report.residual_inf_norm <= 1e-9 * inf_norm(&rhs).max(1.0),
            "n = {n}: {report:?}"
        );
    }
}

#[test]
fn residual_small_at_n_4096() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(4096);
    let rhs: Vec<f64> = (0..4096)
        .map(|_| rng.random_range(-100.0..=100.0))
        .collect();
    let (_, report) = solve(
        &SignPattern::new(4096).unwrap(),
        &rhs,
        &SolverOptions::default(),
    )
    .unwrap();
    assert!(
        report.residual_inf_norm <= 1e-9 * inf_norm(&rhs).max(1.0),
        "{report:?}"
    );
}

#[test]
fn solve_is_bit_reproducible() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(3);
    let rhs: Vec<f64> = (0..300).map(|_| rng.random_range(-100.0..=100.0)).collect();
    let pattern = SignPattern::new(300).unwrap();
    let opts = SolverOptions::default();
    let (a, _) = solve(&pattern, &rhs, &opts).unwrap();
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let (b, _) = single.install(|| solve(&pattern, &rhs, &opts)).unwrap();
    let quad = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap();
    let (c, _) = quad.install(|| solve(&pattern, &rhs, &opts)).unwrap();
    let bits = |v: &[f64]| v.iter().map(|x| x.to_bits()).collect::<Vec<_>>();
    assert_eq!(bits(&a), bits(&b));
    assert_eq!(bits(&a), bits(&c));
}
