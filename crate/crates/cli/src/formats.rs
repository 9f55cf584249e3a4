//! On-disk formats.
//!
//! Series files are plain text, one decimal value per line, with an optional
//! `value` header. Spectrum files are JSON documents holding the grid, the
//! unit label and one record per dyad. Numbers are written in shortest
//! round-trip form; the `display` field carries the six-decimal rendering.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use squarewave::{Dyad, GridSpec, ReconstructionReport, SolveReport, Spectrum};

use crate::CliError;

/// Parses a series file body. Blank lines are ignored; errors carry 1-based
/// line numbers.
pub fn parse_series(text: &str, path: &Path) -> Result<Vec<f64>, CliError> {
    let mut values = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let token = line.trim();
        if token.is_empty() {
            continue;
        }
        if values.is_empty() && token.eq_ignore_ascii_case("value") {
            continue;
        }
        let value: f64 = token.parse().map_err(|_| {
            CliError::parse(
                path,
                format!("line {}: not a number: {token:?}", lineno + 1),
            )
        })?;
        if !value.is_finite() {
            return Err(CliError::parse(
                path,
                format!("line {}: non-finite value {token:?}", lineno + 1),
            ));
        }
        values.push(value);
    }
    if values.is_empty() {
        return Err(CliError::parse(path, "no values found"));
    }
    Ok(values)
}

/// Shortest round-trip decimal; negative zero is written as `0`.
pub fn format_value(v: f64) -> String {
    if v == 0.0 {
        "0".to_owned()
    } else {
        format!("{v}")
    }
}

pub fn render_series(values: &[f64]) -> String {
    let mut out = String::with_capacity(values.len() * 12);
    for &v in values {
        out.push_str(&format_value(v));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumFile {
    pub n: usize,
    pub delta_t_s: f64,
    pub f_s_hz: f64,
    #[serde(default)]
    pub unit: String,
    pub dyads: Vec<DyadRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DyadRecord {
    pub i: usize,
    pub f_hz: f64,
    pub c: f64,
    #[serde(default)]
    pub display: String,
}

pub fn display_dyad(f_hz: f64, c: f64) -> String {
    format!("({f_hz:.6}; {c:.6})")
}

impl SpectrumFile {
    pub fn from_spectrum(spectrum: &Spectrum) -> Self {
        let grid = spectrum.grid();
        Self {
            n: grid.n(),
            delta_t_s: grid.delta_t(),
            f_s_hz: grid.f_s(),
            unit: spectrum.unit().unwrap_or_default().to_owned(),
            dyads: spectrum
                .dyads()
                .iter()
                .map(|d| DyadRecord {
                    i: d.index,
                    f_hz: d.frequency,
                    c: d.coefficient,
                    display: display_dyad(d.frequency, d.coefficient),
                })
                .collect(),
        }
    }

    /// Validates the document against the spectrum invariants.
    pub fn to_spectrum(&self, path: &Path) -> Result<Spectrum, CliError> {
        let grid = GridSpec::new(self.n, self.delta_t_s, self.f_s_hz)
            .map_err(|e| CliError::parse(path, e.to_string()))?;
        let dyads = self
            .dyads
            .iter()
            .map(|r| Dyad {
                index: r.i,
                frequency: r.f_hz,
                coefficient: r.c,
            })
            .collect();
        let spectrum =
            Spectrum::from_dyads(grid, dyads).map_err(|e| CliError::parse(path, e.to_string()))?;
        let unit = (!self.unit.is_empty()).then(|| self.unit.clone());
        Ok(spectrum.with_unit(unit))
    }

    pub fn parse(text: &str, path: &Path) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::parse(path, e.to_string()))
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("spectrum serializes");
        s.push('\n');
        s
    }
}

/// Two-column `f_hz,c` CSV for bar plots of the spectrum.
pub fn render_plotdata(spectrum: &Spectrum) -> String {
    let mut out = String::from("f_hz,c\n");
    for d in spectrum.dyads() {
        let _ = writeln!(
            out,
            "{},{}",
            format_value(d.frequency),
            format_value(d.coefficient)
        );
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub max_abs_error: f64,
    pub index_of_max: usize,
    pub rms_error: f64,
    pub min_pivot: f64,
    pub residual_inf_norm: f64,
    pub refinement_steps_used: usize,
}

impl AnalysisReport {
    pub fn new(n: usize, reconstruction: &ReconstructionReport, solve: &SolveReport) -> Self {
        Self {
            n,
            max_abs_error: reconstruction.max_abs_error,
            index_of_max: reconstruction.index_of_max,
            rms_error: reconstruction.rms_error,
            min_pivot: solve.min_pivot,
            residual_inf_norm: solve.residual_inf_norm,
            refinement_steps_used: solve.refinement_steps_used,
        }
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
