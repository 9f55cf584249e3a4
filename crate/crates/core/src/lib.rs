//! Square wave decomposition of uniformly sampled time series.
//!
//! A series of `n` samples is written as the sum of `n` trains of square
//! waves. Train `i` has half-wave length `n - i + 1` subintervals and
//! frequency `n / (2 delta_t (n - i + 1))`; its amplitude `C_i` comes from
//! the `n x n` signed linear system `sum_j sign(i, j) C_j = V_i`. The
//! transform reports the `(f_i; C_i)` dyads and reconstructs the series
//! from them.
//!
//! ```
//! use squarewave::{forward, inverse, GridSpec, SolverOptions, TimeSeries};
//!
//! let grid = GridSpec::from_delta_t(8, 2.0)?;
//! let series = TimeSeries::new(vec![84.0, -152.0, 63.0, 98.0, -35.0, 0.0, 145.0, -14.0], grid)?;
//! let (spectrum, _report) = forward(&series, &SolverOptions::default())?;
//! assert!((spectrum.dyads()[0].coefficient - 170.5).abs() < 1e-9);
//! assert_eq!(inverse(&spectrum).values()[0], 84.0);
//! # Ok::<(), squarewave::Error>(())
//! ```

mod clock;
pub mod error;
pub mod linsolve;
#[cfg(feature = "oracle")]
pub mod oracle;
pub mod series_gen;
pub mod transform;
pub mod waves;

pub use error::{Error, Result};
pub use linsolve::{apply_sign_matrix, assemble_dense, solve, SolveReport, SolverOptions};
pub use series_gen::{generate, DigitStream, GeneratedSeries};
pub use transform::{
    forward, inverse, reconstruction_report, Dyad, ReconstructionReport, Spectrum, TimeSeries,
};
pub use waves::{
    half_wave_length, sample_train, sign_at, train_frequency, GridSpec, Sign, SignPattern,
    TrainDescriptor,
};
