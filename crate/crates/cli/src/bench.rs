//! Timing table for the dense solve path.

use std::time::Instant;

use squarewave::linsolve::{self, LuFactors};
use squarewave::{DigitStream, SignPattern, SolverOptions};

use crate::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub assemble_seconds: f64,
    pub factorize_seconds: f64,
    pub refine_seconds: f64,
    pub residual_inf_norm: f64,
    pub peak_bytes: usize,
}

/// Dense matrix plus the handful of length-`n` work vectors.
pub fn peak_bytes_estimate(n: usize) -> usize {
    8 * (n * n + 6 * n)
}

/// Runs every size `repeats` times on a fixed pseudo-random right-hand side
/// and keeps the fastest timing per phase. All sizes are checked against
/// the cap before any work starts.
pub fn run(
    sizes: &[usize],
    repeats: usize,
    options: &SolverOptions,
) -> Result<Vec<BenchRow>, CliError> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(CliError::Usage(
            "--sizes must list counts of at least 1".into(),
        ));
    }
    if let Some(&n) = sizes.iter().find(|&&n| n > options.max_n_dense) {
        return Err(squarewave::Error::CapExceeded {
            n,
            cap: options.max_n_dense,
        }
        .into());
    }
    let repeats = repeats.max(1);
    let mut rows = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let pattern = SignPattern::new(n)?;
        let mut stream = DigitStream::new(n as u64);
        let rhs: Vec<f64> = (0..n).map(|_| stream.next_value()).collect();

        let mut row = BenchRow {
            n,
            assemble_seconds: f64::INFINITY,
            factorize_seconds: f64::INFINITY,
            refine_seconds: f64::INFINITY,
            residual_inf_norm: 0.0,
            peak_bytes: peak_bytes_estimate(n),
        };
        for _ in 0..repeats {
            let t = Instant::now();
            let matrix = linsolve::assemble_dense(&pattern, options)?;
            row.assemble_seconds = row.assemble_seconds.min(t.elapsed().as_secs_f64());

            let t = Instant::now();
            let factors = LuFactors::factor(matrix, options.resolved_pivot_tolerance(n))?;
            row.factorize_seconds = row.factorize_seconds.min(t.elapsed().as_secs_f64());

            let t = Instant::now();
            let mut x = factors.solve(&rhs)?;
            linsolve::refine(&pattern, &factors, &rhs, &mut x, options.refinement_steps)?;
            row.refine_seconds = row.refine_seconds.min(t.elapsed().as_secs_f64());

            row.residual_inf_norm = linsolve::inf_norm(&linsolve::residual(&pattern, &rhs, &x)?);
        }
        rows.push(row);
    }
    Ok(rows)
}

pub fn render_table(rows: &[BenchRow]) -> String {
    let mut out = format!(
        "{:>8} {:>12} {:>12} {:>12} {:>12} {:>12}\n",
        "n", "assemble_s", "factorize_s", "refine_s", "residual", "peak_MiB"
    );
    for r in rows {
        out.push_str(&format!(
            "{:>8} {:>12.6} {:>12.6} {:>12.6} {:>12.3e} {:>12.1}\n",
            r.n,
            r.assemble_seconds,
            r.factorize_seconds,
            r.refine_seconds,
            r.residual_inf_norm,
            r.peak_bytes as f64 / (1024.0 * 1024.0)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_size() {
        let rows = run(&[1], 1, &SolverOptions::default()).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].residual_inf_norm, 0.0);
        assert!(render_table(&rows).lines().count() == 2);
    }

    #[test]
    fn cap_checked_up_front() {
        let err = run(&[8, 20_000], 1, &SolverOptions::default()).unwrap_err();
        assert_eq!(err.exit_code(), 4);
        assert!(run(&[], 1, &SolverOptions::default()).is_err());
    }

    #[test]
    fn residuals_small() {
        let rows = run(&[256, 1024], 1, &SolverOptions::default()).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows.iter().all(|r| r.residual_inf_norm <= 1e-9));
    }
}
