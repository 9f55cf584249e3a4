use squarewave_wasm::demo;

const SERIES: [f64; 8] = [84.0, -152.0, 63.0, 98.0, -35.0, 0.0, 145.0, -14.0];

#[test]
fn pattern_for_two() {
    assert_eq!(demo::sign_pattern(2).unwrap(), [1, 1, 1, -1]);
    assert_eq!(demo::sign_pattern(8).unwrap().len(), 64);
    assert!(demo::sign_pattern(0).is_err());
}

#[test]
fn analysis_of_eight_points() {
    let view = demo::analyze(&SERIES, 2.0).unwrap();
    assert!((view.coefficients[0] - 170.5).abs() < 1e-9);
    assert!((view.coefficients[7] - 118.0).abs() < 1e-9);
    assert_eq!(view.frequencies[7], 2.0);
    assert!(view.max_abs_error < 1e-10);
    assert!(demo::analyze(&[], 2.0).is_err());
    assert!(demo::analyze(&SERIES, -1.0).is_err());
}

#[test]
fn partial_reconstruction_converges() {
    let none = demo::partial_reconstruction(&SERIES, 2.0, 0).unwrap();
    assert!(none.iter().all(|&v| v == 0.0));
    let first = demo::partial_reconstruction(&SERIES, 2.0, 1).unwrap();
    assert!(first.iter().all(|&v| (v - 170.5).abs() < 1e-9));
    let all = demo::partial_reconstruction(&SERIES, 2.0, 8).unwrap();
    for (a, b) in all.iter().zip(SERIES) {
        assert!((a - b).abs() < 1e-9);
    }
    let last = demo::train(&SERIES, 2.0, 8).unwrap();
    assert!((last[1] + 118.0).abs() < 1e-9);
}

#[test]
fn generated_series_is_reproducible() {
    let a = demo::generate_series(3, 64, 32.0).unwrap();
    assert_eq!(a, demo::generate_series(3, 64, 32.0).unwrap());
    assert!(a.iter().all(|v| v.abs() <= 99.99999));
    assert!(demo::analyze(&a, 2.0).unwrap().max_abs_error < 1e-9);
}
