#![allow(dead_code)]

use std::path::Path;
use std::process::{Command, Output};

pub const SERIES: [f64; 8] = [84.0, -152.0, 63.0, 98.0, -35.0, 0.0, 145.0, -14.0];
pub const COEFFS: [f64; 8] = [170.5, -38.5, -100.5, -135.5, 195.0, -135.5, 10.5, 118.0];

pub fn swt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_swt"))
        .args(args)
        .output()
        .expect("swt runs")
}

pub fn swt_ok(args: &[&str]) -> Output {
    let out = swt(args);
    assert!(
        out.status.success(),
        "swt {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

pub fn write_series(path: &Path, values: &[f64]) {
    let body: String = values.iter().map(|v| format!("{v}\n")).collect();
    std::fs::write(path, body).unwrap();
}

pub fn read_series(path: &Path) -> Vec<f64> {
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(|l| l.parse().unwrap())
        .collect()
}

pub fn read_json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

pub fn s(path: &Path) -> &str {
    path.to_str().unwrap()
}
