//! Browser bindings for the demo page in `www/`.
//!
//! The page exposes three interactive views: the sign pattern for a chosen
//! `n`, the dyad spectrum of an entered or generated series, and the
//! reconstruction from only the lowest-frequency `k` trains. The `wasm_bindgen`
//! exports are thin wrappers over the plain functions in [`demo`], which are
//! what the native tests exercise.

use wasm_bindgen::prelude::*;

pub mod demo {
    use squarewave::transform::{partial_inverse, train_samples};
    use squarewave::{
        forward, generate, inverse, reconstruction_report, GridSpec, Result, SignPattern,
        SolverOptions, TimeSeries,
    };

    /// Largest `n` the page will analyze; the dense factorization is cubic
    /// and runs on the browser's main thread.
    pub const MAX_DEMO_N: usize = 1024;

    /// Row-major `n x n` signs, `+1` / `-1`.
    pub fn sign_pattern(n: usize) -> Result<Vec<i8>> {
        let pattern = SignPattern::new(n)?;
        let mut cells = Vec::with_capacity(n * n);
        for i in 1..=n {
            cells.extend(pattern.row(i)?.into_iter().map(|s| s.as_i8()));
        }
        Ok(cells)
    }

    #[derive(Debug, Clone, PartialEq)]
    pub struct AnalysisView {
        pub frequencies: Vec<f64>,
        pub coefficients: Vec<f64>,
        pub max_abs_error: f64,
        pub residual_inf_norm: f64,
    }

    fn options() -> SolverOptions {
        SolverOptions {
            max_n_dense: MAX_DEMO_N,
            ..SolverOptions::default()
        }
    }

    pub fn analyze(values: &[f64], delta_t: f64) -> Result<AnalysisView> {
        let grid = GridSpec::from_delta_t(values.len(), delta_t)?;
        let series = TimeSeries::new(values.to_vec(), grid)?;
        let (spectrum, solve) = forward(&series, &options())?;
        let report = reconstruction_report(&series, &inverse(&spectrum))?;
        Ok(AnalysisView {
            frequencies: spectrum.frequencies(),
            coefficients: spectrum.coefficients(),
            max_abs_error: report.max_abs_error,
            residual_inf_norm: solve.residual_inf_norm,
        })
    }

    /// Series rebuilt from trains `1..=keep` only.
    pub fn partial_reconstruction(values: &[f64], delta_t: f64, keep: usize) -> Result<Vec<f64>> {
        let grid = GridSpec::from_delta_t(values.len(), delta_t)?;
        let series = TimeSeries::new(values.to_vec(), grid)?;
        let (spectrum, _) = forward(&series, &options())?;
        Ok(partial_inverse(&spectrum, |i| i <= keep).into_values())
    }

    /// Midpoint samples of train `i` in the analysis of `values`.
    pub fn train(values: &[f64], delta_t: f64, i: usize) -> Result<Vec<f64>> {
        let grid = GridSpec::from_delta_t(values.len(), delta_t)?;
        let series = TimeSeries::new(values.to_vec(), grid)?;
        let (spectrum, _) = forward(&series, &options())?;
        train_samples(&spectrum, i)
    }

    pub fn generate_series(seed: u64, n: usize, f_s: f64) -> Result<Vec<f64>> {
        let grid = GridSpec::from_sampling_rate(n, f_s)?;
        Ok(generate(seed, grid).series.into_values())
    }
}

fn js_err(e: squarewave::Error) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen]
pub struct Analysis {
    inner: demo::AnalysisView,
}

#[wasm_bindgen]
impl Analysis {
    #[wasm_bindgen(getter)]
    pub fn frequencies(&self) -> Vec<f64> {
        self.inner.frequencies.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn coefficients(&self) -> Vec<f64> {
        self.inner.coefficients.clone()
    }

    #[wasm_bindgen(getter, js_name = maxAbsError)]
    pub fn max_abs_error(&self) -> f64 {
        self.inner.max_abs_error
    }

    #[wasm_bindgen(getter, js_name = residualInfNorm)]
    pub fn residual_inf_norm(&self) -> f64 {
        self.inner.residual_inf_norm
    }
}

#[wasm_bindgen(js_name = signPattern)]
pub fn sign_pattern(n: usize) -> Result<Vec<i8>, JsError> {
    demo::sign_pattern(n).map_err(js_err)
}

#[wasm_bindgen]
pub fn analyze(values: &[f64], delta_t: f64) -> Result<Analysis, JsError> {
    if values.len() > demo::MAX_DEMO_N {
        return Err(JsError::new(&format!(
            "the demo analyzes at most {} values",
            demo::MAX_DEMO_N
        )));
    }
    demo::analyze(values, delta_t)
        .map(|inner| Analysis { inner })
        .map_err(js_err)
}

#[wasm_bindgen(js_name = partialReconstruction)]
pub fn partial_reconstruction(
    values: &[f64],
    delta_t: f64,
    keep: usize,
) -> Result<Vec<f64>, JsError> {
    demo::partial_reconstruction(values, delta_t, keep).map_err(js_err)
}

#[wasm_bindgen]
pub fn train(values: &[f64], delta_t: f64, i: usize) -> Result<Vec<f64>, JsError> {
    demo::train(values, delta_t, i).map_err(js_err)
}

#[wasm_bindgen(js_name = generateSeries)]
pub fn generate_series(seed: u32, n: usize, f_s: f64) -> Result<Vec<f64>, JsError> {
    demo::generate_series(u64::from(seed), n, f_s).map_err(js_err)
}
