//! Solving the signed system `sum_j sign(i, j) * c_j = v_i`.
//!
//! The matrix is materialized once for an LU factorization with partial
//! pivoting. Residuals for iterative refinement and for the final report
//! come from [`apply_sign_matrix`], which walks the sign runs directly and
//! never touches the dense copy.

use crate::error::{Error, Result};
use crate::waves::SignPattern;

/// Default cap on `n` for dense materialization (`n^2` f64 entries).
pub const DEFAULT_MAX_N_DENSE: usize = 12_000;

#[derive(Debug, Clone, PartialEq)]
pub struct SolverOptions {
    /// Smallest admissible pivot magnitude. `None` resolves to
    /// `1e-12 * n * max|a_ij|`, and every entry of the sign matrix is 1 in
    /// magnitude.
    pub pivot_tolerance: Option<f64>,
    pub refinement_steps: usize,
    pub max_n_dense: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            pivot_tolerance: None,
            refinement_steps: 2,
            max_n_dense: DEFAULT_MAX_N_DENSE,
        }
    }
}

impl SolverOptions {
    pub fn resolved_pivot_tolerance(&self, n: usize) -> f64 {
        self.pivot_tolerance.unwrap_or(1e-12 * n as f64)
    }

    fn check_cap(&self, n: usize) -> Result<()> {
        if n > self.max_n_dense {
            Err(Error::CapExceeded {
                n,
                cap: self.max_n_dense,
            })
        } else {
            Ok(())
        }
    }
}

/// Diagnostics of one [`solve`] call.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub min_pivot: f64,
    /// `max_i |(A c - v)_i|`, recomputed matrix-free after refinement.
    pub residual_inf_norm: f64,
    pub refinement_steps_used: usize,
    pub elapsed_seconds: f64,
}

/// Row-major square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 1-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[(i - 1) * self.n + (j - 1)]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[(i - 1) * self.n..i * self.n]
    }

    pub fn mul_vec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        Ok(self
            .data
            .chunks_exact(self.n)
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }
}

/// Materializes the pattern as a dense `n x n` matrix of `+-1.0`.
pub fn assemble_dense(pattern: &SignPattern, options: &SolverOptions) -> Result<DenseMatrix> {
    let n = pattern.n();
    options.check_cap(n)?;
    let mut data = vec![0.0; n * n];
    for j in 1..=n {
        for (rows, sign) in pattern.column_runs(j)? {
            let value = sign.as_f64();
            for r in rows {
                data[r * n + (j - 1)] = value;
            }
        }
    }
    Ok(DenseMatrix { n, data })
}

/// `y = S x` for the sign matrix `S`, computed from the run structure with
/// additions and subtractions only.
///
/// Each `y_i` accumulates its terms in ascending column order with a
/// compensated (two-sum) running error, so the result is bit-reproducible
/// and close to the correctly rounded sum even for large `n`. Refinement
/// residuals rely on that accuracy.
pub fn apply_sign_matrix(pattern: &SignPattern, x: &[f64]) -> Result<Vec<f64>> {
    let n = pattern.n();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    let mut sum = vec![0.0; n];
    let mut err = vec![0.0; n];
    for (j, &xj) in x.iter().enumerate() {
        for (rows, sign) in pattern.column_runs(j + 1)? {
            let term = if sign.is_plus() { xj } else { -xj };
            for (s, e) in sum[rows.clone()].iter_mut().zip(&mut err[rows]) {
                let t = *s + term;
                let back = t - *s;
                *e += (*s - (t - back)) + (term - back);
                *s = t;
            }
        }
    }
    Ok(sum.iter().zip(&err).map(|(s, e)| s + e).collect())
}

/// In-place LU factorization `P A = L U` with unit lower-triangular `L`.
#[derive(Debug, Clone)]
pub struct LuFactors {
    n: usize,
    lu: Vec<f64>,
    /// `perm[k]` is the original row now stored at position `k`.
    perm: Vec<usize>,
    min_pivot: f64,
}

impl LuFactors {
    /// Factors `matrix`, choosing at each step the largest-magnitude entry in
    /// the pivot column (first such row on ties). Fails with
    /// [`Error::SingularSystem`] when that entry is below `pivot_tolerance`.
    pub fn factor(matrix: DenseMatrix, pivot_tolerance: f64) -> Result<Self> {
        let DenseMatrix { n, data: mut lu } = matrix;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut min_pivot = f64::INFINITY;

        for k in 0..n {
            let mut best = k;
            let mut best_abs = lu[k * n + k].abs();
            for r in k + 1..n {
                let a = lu[r * n + k].abs();
                if a > best_abs {
                    best = r;
                    best_abs = a;
                }
            }
            if best_abs.is_nan() || best_abs < pivot_tolerance {
                return Err(Error::SingularSystem {
                    pivot_index: k + 1,
                    magnitude: best_abs,
                    tolerance: pivot_tolerance,
                });
            }
            min_pivot = min_pivot.min(best_abs);
            if best != k {
                swap_rows(&mut lu, n, k, best);
                perm.swap(k, best);
            }
            eliminate_below(&mut lu, n, k);
        }

        Ok(Self {
            n,
            lu,
            perm,
            min_pivot,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn min_pivot(&self) -> f64 {
        self.min_pivot
    }

    /// Solves `A x = b` with the stored factors.
    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        let n = self.n;
        if b.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: b.len(),
            });
        }
        let mut x: Vec<f64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            let row = &self.lu[i * n..i * n + i];
            let dot: f64 = row.iter().zip(&x[..i]).map(|(l, v)| l * v).sum();
            x[i] -= dot;
        }
        for i in (0..n).rev() {
            let row = &self.lu[i * n..(i + 1) * n];
            let dot: f64 = row[i + 1..]
                .iter()
                .zip(&x[i + 1..])
                .map(|(u, v)| u * v)
                .sum();
            x[i] = (x[i] - dot) / row[i];
        }
        Ok(x)
    }
}

fn swap_rows(data: &mut [f64], n: usize, a: usize, b: usize) {
    let (lo, hi) = (a.min(b), a.max(b));
    let (head, tail) = data.split_at_mut(hi * n);
    head[lo * n..(lo + 1) * n].swap_with_slice(&mut tail[..n]);
}

/// Rows below `k` are updated independently; each row's arithmetic is the
/// same whether or not the rows run in parallel.
fn eliminate_below(lu: &mut [f64], n: usize, k: usize) {
    let (head, tail) = lu.split_at_mut((k + 1) * n);
    let pivot_row = &head[k * n..];
    let pivot = pivot_row[k];
    let update = |row: &mut [f64]| {
        let factor = row[k] / pivot;
        row[k] = factor;
        if factor != 0.0 {
            for (a, p) in row[k + 1..].iter_mut().zip(&pivot_row[k + 1..]) {
                *a -= factor * p;
            }
        }
    };

    #[cfg(feature = "parallel")]
    {
        const PAR_MIN_WORK: usize = 1 << 15;
        let rows = n - k - 1;
        if rows * (n - k) >= PAR_MIN_WORK {
            use rayon::prelude::*;
            tail.par_chunks_exact_mut(n).for_each(update);
            return;
        }
    }
    tail.chunks_exact_mut(n).for_each(update);
}

/// Runs up to `steps` rounds of iterative refinement on `x`, using the
/// matrix-free residual `b - S x`. Returns the number of rounds performed;
/// stops early once the residual is exactly zero.
pub fn refine(
    pattern: &SignPattern,
    factors: &LuFactors,
    b: &[f64],
    x: &mut [f64],
    steps: usize,
) -> Result<usize> {
    let mut used = 0;
    for _ in 0..steps {
        let r = residual(pattern, b, x)?;
        if r.iter().all(|&v| v == 0.0) {
            break;
        }
        let d = factors.solve(&r)?;
        x.iter_mut().zip(&d).for_each(|(xi, di)| *xi += di);
        used += 1;
    }
    Ok(used)
}

/// `b - S x`.
pub fn residual(pattern: &SignPattern, b: &[f64], x: &[f64]) -> Result<Vec<f64>> {
    let ax = apply_sign_matrix(pattern, x)?;
    if b.len() != ax.len() {
        return Err(Error::DimensionMismatch {
            expected: ax.len(),
            found: b.len(),
        });
    }
    Ok(b.iter().zip(&ax).map(|(bi, ai)| bi - ai).collect())
}

pub fn inf_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Solves `S c = rhs` for the sign matrix of `pattern`.
pub fn solve(
    pattern: &SignPattern,
    rhs: &[f64],
    options: &SolverOptions,
) -> Result<(Vec<f64>, SolveReport)> {
    let n = pattern.n();
    if rhs.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: rhs.len(),
        });
    }
    if let Some(index) = rhs.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFiniteValue { index: index + 1 });
    }
    let clock = crate::clock::Stopwatch::start();

    let matrix = assemble_dense(pattern, options)?;
    let factors = LuFactors::factor(matrix, options.resolved_pivot_tolerance(n))?;
    let mut x = factors.solve(rhs)?;
    let used = refine(pattern, &factors, rhs, &mut x, options.refinement_steps)?;
    let residual_inf_norm = inf_norm(&residual(pattern, rhs, &x)?);

    let report = SolveReport {
        min_pivot: factors.min_pivot(),
        residual_inf_norm,
        refinement_steps_used: used,
        elapsed_seconds: clock.elapsed_seconds(),
    };
    Ok((x, report))
}
