use std::fs;
use std::path::{Path, PathBuf};

use squarewave::{forward, inverse, reconstruction_report, GridSpec, SolverOptions, TimeSeries};

use crate::formats::{self, AnalysisReport, SpectrumFile};
use crate::{CliError, MAX_N_DENSE_ENV};

/// How the user pinned the time axis; the other quantity follows from
/// `n = f_s * delta_t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TimeBase {
    DeltaT(f64),
    SamplingRate(f64),
}

impl TimeBase {
    pub fn grid(self, n: usize) -> squarewave::Result<GridSpec> {
        match self {
            TimeBase::DeltaT(dt) => GridSpec::from_delta_t(n, dt),
            TimeBase::SamplingRate(fs) => GridSpec::from_sampling_rate(n, fs),
        }
    }
}

/// Default solver options, with the dense cap taken from the environment
/// when set.
pub fn solver_options() -> Result<SolverOptions, CliError> {
    let mut options = SolverOptions::default();
    if let Ok(raw) = std::env::var(MAX_N_DENSE_ENV) {
        options.max_n_dense = raw
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{MAX_N_DENSE_ENV}={raw:?} is not a count")))?;
    }
    Ok(options)
}

fn read_input(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::parse(path, e.to_string()))
}

fn write_output(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Write {
        path: path.to_owned(),
        source,
    })
}

pub struct AnalyzeArgs {
    pub input: PathBuf,
    pub time_base: TimeBase,
    pub out: PathBuf,
    pub report: Option<PathBuf>,
    pub unit: Option<String>,
}

pub fn analyze(args: &AnalyzeArgs, options: &SolverOptions) -> Result<AnalysisReport, CliError> {
    let values = formats::parse_series(&read_input(&args.input)?, &args.input)?;
    let grid = args
        .time_base
        .grid(values.len())
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let mut series = TimeSeries::new(values, grid)?;
    if let Some(unit) = &args.unit {
        series = series.with_unit(unit.clone());
    }

    let (spectrum, solve) = forward(&series, options)?;
    let reconstruction = reconstruction_report(&series, &inverse(&spectrum))?;
    let report = AnalysisReport::new(grid.n(), &reconstruction, &solve);

    write_output(&args.out, &SpectrumFile::from_spectrum(&spectrum).render())?;
    if let Some(path) = &args.report {
        write_output(path, &report.render())?;
    }
    println!(
        "n = {}  delta_t = {} s  f_s = {} Hz  max|V - V_comp| = {:e}  residual = {:e}  solve {:.3} s",
        grid.n(),
        grid.delta_t(),
        grid.f_s(),
        report.max_abs_error,
        report.residual_inf_norm,
        solve.elapsed_seconds
    );
    Ok(report)
}

pub fn reconstruct(input: &Path, out: &Path) -> Result<(), CliError> {
    let spectrum = SpectrumFile::parse(&read_input(input)?, input)?.to_spectrum(input)?;
    write_output(out, &formats::render_series(inverse(&spectrum).values()))
}

pub fn generate(seed: u64, n: usize, f_s: f64, out: &Path) -> Result<GridSpec, CliError> {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let grid = GridSpec::from_sampling_rate(n, f_s).map_err(|e| CliError::Usage(e.to_string()))?;
    let generated = squarewave::generate(seed, grid);
    write_output(out, &formats::render_series(generated.series.values()))?;
    println!("delta_t = {} s", grid.delta_t());
    Ok(grid)
}

pub fn plotdata(input: &Path, out: &Path) -> Result<(), CliError> {
    let spectrum = SpectrumFile::parse(&read_input(input)?, input)?.to_spectrum(input)?;
    write_output(out, &formats::render_plotdata(&spectrum))
}
