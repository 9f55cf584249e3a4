//! Forward and inverse square wave transform.

use crate::error::{Error, Result};
use crate::linsolve::{self, SolveReport, SolverOptions};
use crate::waves::{self, GridSpec};

/// Uniformly sampled values on a grid. The unit is an opaque label.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    values: Vec<f64>,
    grid: GridSpec,
    unit: Option<String>,
}

impl TimeSeries {
    pub fn new(values: Vec<f64>, grid: GridSpec) -> Result<Self> {
        if values.len() != grid.n() {
            return Err(Error::DimensionMismatch {
                expected: grid.n(),
                found: values.len(),
            });
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue { index: index + 1 });
        }
        Ok(Self {
            values,
            grid,
            unit: None,
        })
    }

    pub fn with_unit(mut self, unit: impl Into<String>) -> Self {
        self.unit = Some(unit.into());
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn unit(&self) -> Option<&str> {
        self.unit.as_deref()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// One `(frequency; coefficient)` pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dyad {
    pub index: usize,
    pub frequency: f64,
    pub coefficient: f64,
}

/// All `n` dyads of an analysis, ascending by train index.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    grid: GridSpec,
    dyads: Vec<Dyad>,
    unit: Option<String>,
}

impl Spectrum {
    /// Builds the spectrum for `coefficients[i - 1] = C_i`, filling in the
    /// train frequencies from the grid.
    pub fn from_coefficients(grid: GridSpec, coefficients: &[f64]) -> Result<Self> {
        if coefficients.len() != grid.n() {
            return Err(Error::DimensionMismatch {
                expected: grid.n(),
                found: coefficients.len(),
            });
        }
        if let Some(index) = coefficients.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue { index: index + 1 });
        }
        let dyads = grid
            .trains()
            .zip(coefficients)
            .map(|(train, &coefficient)| Dyad {
                index: train.index,
                frequency: train.frequency,
                coefficient,
            })
            .collect();
        Ok(Self {
            grid,
            dyads,
            unit: None,
        })
    }

    /// Validates externally supplied dyads: exactly `n` of them, indices
    /// `1..=n` in order, finite coefficients, and frequencies equal to the
    /// grid's train frequencies within `1e-9` relative.
    pub fn from_dyads(grid: GridSpec, dyads: Vec<Dyad>) -> Result<Self> {
        if dyads.len() != grid.n() {
            return Err(Error::InvalidSpectrum(format!(
                "expected {} dyads, found {}",
                grid.n(),
                dyads.len()
            )));
        }
        for (pos, (dyad, train)) in dyads.iter().zip(grid.trains()).enumerate() {
            if dyad.index != pos + 1 {
                return Err(Error::InvalidSpectrum(format!(
                    "dyad at position {} has index {}",
                    pos + 1,
                    dyad.index
                )));
            }
            if !dyad.coefficient.is_finite() {
                return Err(Error::NonFiniteValue { index: pos + 1 });
            }
            if (dyad.frequency - train.frequency).abs() > 1e-9 * train.frequency {
                return Err(Error::InvalidSpectrum(format!(
                    "dyad {} has frequency {} but the grid gives {}",
                    dyad.index, dyad.frequency, train.frequency
                )));
            }
        }
        Ok(Self {
            grid,
            dyads,
            unit: None,
        })
    }

    pub fn with_unit(mut self, unit: Option<String>) -> Self {
        self.unit = unit;
        self
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn dyads(&self) -> &[Dyad] {
        &self.dyads
    }

    pub fn unit(&self) -> Option<&str> {
        self.unit.as_deref()
    }

    pub fn coefficients(&self) -> Vec<f64> {
        self.dyads.iter().map(|d| d.coefficient).collect()
    }

    pub fn frequencies(&self) -> Vec<f64> {
        self.dyads.iter().map(|d| d.frequency).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReconstructionReport {
    pub max_abs_error: f64,
    /// 1-based; the first index attaining the maximum.
    pub index_of_max: usize,
    pub rms_error: f64,
}

/// Decomposes `series` into its `n` square-wave trains.
pub fn forward(series: &TimeSeries, options: &SolverOptions) -> Result<(Spectrum, SolveReport)> {
    let grid = *series.grid();
    let (coefficients, report) = linsolve::solve(&grid.pattern(), series.values(), options)?;
    let spectrum = Spectrum::from_coefficients(grid, &coefficients)?
        .with_unit(series.unit().map(str::to_owned));
    Ok((spectrum, report))
}

/// Sums the trains back at every subinterval midpoint.
pub fn inverse(spectrum: &Spectrum) -> TimeSeries {
    let grid = *spectrum.grid();
    let values = linsolve::apply_sign_matrix(&grid.pattern(), &spectrum.coefficients())
        .expect("spectrum holds exactly n coefficients");
    TimeSeries {
        values,
        grid,
        unit: spectrum.unit.clone(),
    }
}

/// Reconstructs from the subset of trains selected by `keep(i)` (1-based).
pub fn partial_inverse(spectrum: &Spectrum, keep: impl Fn(usize) -> bool) -> TimeSeries {
    let grid = *spectrum.grid();
    let coefficients: Vec<f64> = spectrum
        .dyads()
        .iter()
        .map(|d| if keep(d.index) { d.coefficient } else { 0.0 })
        .collect();
    let values = linsolve::apply_sign_matrix(&grid.pattern(), &coefficients)
        .expect("spectrum holds exactly n coefficients");
    TimeSeries {
        values,
        grid,
        unit: spectrum.unit.clone(),
    }
}

/// Samples of train `i` at every midpoint.
pub fn train_samples(spectrum: &Spectrum, i: usize) -> Result<Vec<f64>> {
    let grid = spectrum.grid();
    let c = spectrum
        .dyads()
        .get(i.wrapping_sub(1))
        .ok_or(Error::IndexOutOfRange {
            index: i,
            n: grid.n(),
        })?
        .coefficient;
    (1..=grid.n())
        .map(|k| waves::sample_train(grid, i, c, k))
        .collect()
}

pub fn reconstruction_report(
    original: &TimeSeries,
    reconstructed: &TimeSeries,
) -> Result<ReconstructionReport> {
    if original.len() != reconstructed.len() {
        return Err(Error::DimensionMismatch {
            expected: original.len(),
            found: reconstructed.len(),
        });
    }
    if original.grid() != reconstructed.grid() {
        return Err(Error::InvalidGrid(
            "original and reconstructed series use different grids".into(),
        ));
    }
    let mut max_abs_error = 0.0;
    let mut index_of_max = 1;
    let mut sum_sq = 0.0;
    for (k, (a, b)) in original
        .values()
        .iter()
        .zip(reconstructed.values())
        .enumerate()
    {
        let e = (a - b).abs();
        if e > max_abs_error {
            max_abs_error = e;
            index_of_max = k + 1;
        }
        sum_sq += e * e;
    }
    let rms_error = (sum_sq / original.len() as f64).sqrt();
    Ok(ReconstructionReport {
        max_abs_error,
        index_of_max,
        // sqrt(mean(e^2)) <= max|e| mathematically; keep it so after rounding
        rms_error: rms_error.min(max_abs_error),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SERIES: [f64; 8] = [84.0, -152.0, 63.0, 98.0, -35.0, 0.0, 145.0, -14.0];
    const COEFFS: [f64; 8] = [170.5, -38.5, -100.5, -135.5, 195.0, -135.5, 10.5, 118.0];

    fn eight() -> TimeSeries {
        TimeSeries::new(SERIES.to_vec(), GridSpec::from_delta_t(8, 2.0).unwrap()).unwrap()
    }

    #[test]
    fn forward_eight_point() {
        let (spectrum, report) = forward(&eight(), &SolverOptions::default()).unwrap();
        for (d, c) in spectrum.dyads().iter().zip(COEFFS) {
            assert!((d.coefficient - c).abs() < 1e-12);
        }
        let shown: Vec<String> = spectrum
            .frequencies()
            .iter()
            .map(|f| format!("{f:.6}"))
            .collect();
        assert_eq!(
            shown,
            [
                "0.250000", "0.285714", "0.333333", "0.400000", "0.500000", "0.666667", "1.000000",
                "2.000000"
            ]
        );
        assert!(report.residual_inf_norm < 1e-12);
    }

    #[test]
    fn frequencies_share_the_train_path() {
        let (spectrum, _) = forward(&eight(), &SolverOptions::default()).unwrap();
        for d in spectrum.dyads() {
            assert_eq!(
                d.frequency,
                waves::train_frequency(spectrum.grid(), d.index).unwrap()
            );
        }
    }

    #[test]
    fn constant_and_zero_series() {
        for n in [1usize, 2, 5, 16, 33] {
            let grid = GridSpec::from_delta_t(n, 1.5).unwrap();
            let s = TimeSeries::new(vec![-3.25; n], grid).unwrap();
            let (spec, _) = forward(&s, &SolverOptions::default()).unwrap();
            let c = spec.coefficients();
            assert!((c[0] + 3.25).abs() < 1e-12);
            assert!(c[1..].iter().all(|v| v.abs() < 1e-12), "n = {n}: {c:?}");

            let z = TimeSeries::new(vec![0.0; n], grid).unwrap();
            let (spec, _) = forward(&z, &SolverOptions::default()).unwrap();
            assert!(spec.coefficients().iter().all(|&v| v == 0.0));
        }
    }

    #[test]
    fn single_sample() {
        let grid = GridSpec::from_delta_t(1, 5.0).unwrap();
        let s = TimeSeries::new(vec![42.0], grid).unwrap();
        let (spec, _) = forward(&s, &SolverOptions::default()).unwrap();
        assert_eq!(
            spec.dyads(),
            &[Dyad {
                index: 1,
                frequency: 0.1,
                coefficient: 42.0
            }]
        );
    }

    #[test]
    fn inverse_rows() {
        let grid = GridSpec::from_delta_t(8, 2.0).unwrap();
        let spec = Spectrum::from_coefficients(grid, &COEFFS).unwrap();
        let v = inverse(&spec);
        assert_eq!(v.values()[0], 84.0);
        assert_eq!(v.values()[1], -152.0);
        assert_eq!(v.values(), SERIES);

        let zero = Spectrum::from_coefficients(grid, &[0.0; 8]).unwrap();
        assert_eq!(inverse(&zero).values(), [0.0; 8]);
    }

    #[test]
    fn partial_reconstruction_sums_trains() {
        let grid = GridSpec::from_delta_t(8, 2.0).unwrap();
        let spec = Spectrum::from_coefficients(grid, &COEFFS).unwrap();
        let only_last = partial_inverse(&spec, |i| i == 8);
        assert_eq!(only_last.values(), train_samples(&spec, 8).unwrap());
        assert_eq!(partial_inverse(&spec, |_| true), inverse(&spec));
        assert!(train_samples(&spec, 0).is_err());
        assert!(train_samples(&spec, 9).is_err());
    }

    #[test]
    fn reports() {
        let g1 = GridSpec::from_delta_t(8, 2.0).unwrap();
        let r = reconstruction_report(&eight(), &eight()).unwrap();
        assert_eq!(
            r,
            ReconstructionReport {
                max_abs_error: 0.0,
                index_of_max: 1,
                rms_error: 0.0
            }
        );

        let g2 = GridSpec::from_delta_t(2, 1.0).unwrap();
        let a = TimeSeries::new(vec![1.0, 2.0], g2).unwrap();
        let b = TimeSeries::new(vec![1.0, 2.5], g2).unwrap();
        let r = reconstruction_report(&a, &b).unwrap();
        assert_eq!(r.max_abs_error, 0.5);
        assert_eq!(r.index_of_max, 2);
        assert!((r.rms_error - 0.353553).abs() < 1e-6);

        let c = TimeSeries::new(vec![0.0; 8], g1).unwrap();
        assert!(matches!(
            reconstruction_report(&a, &c),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn series_validation() {
        let g = GridSpec::from_delta_t(3, 1.0).unwrap();
        assert!(matches!(
            TimeSeries::new(vec![1.0], g),
            Err(Error::DimensionMismatch {
                expected: 3,
                found: 1
            })
        ));
        assert_eq!(
            TimeSeries::new(vec![1.0, f64::INFINITY, 0.0], g),
            Err(Error::NonFiniteValue { index: 2 })
        );
    }

    #[test]
    fn dyad_validation() {
        let g = GridSpec::from_delta_t(2, 1.0).unwrap();
        let good = Spectrum::from_coefficients(g, &[1.0, 2.0]).unwrap();
        assert!(Spectrum::from_dyads(g, good.dyads().to_vec()).is_ok());

        let mut swapped = good.dyads().to_vec();
        swapped.swap(0, 1);
        assert!(Spectrum::from_dyads(g, swapped).is_err());

        let mut bad_f = good.dyads().to_vec();
        bad_f[1].frequency *= 1.01;
        assert!(Spectrum::from_dyads(g, bad_f).is_err());

        assert!(Spectrum::from_dyads(g, good.dyads()[..1].to_vec()).is_err());
    }
}
