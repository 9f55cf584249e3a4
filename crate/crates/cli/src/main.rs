use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use squarewave_cli::commands::{self, AnalyzeArgs, TimeBase};
use squarewave_cli::{bench, CliError};

/// Square wave analysis of uniformly sampled time series.
#[derive(Debug, Parser)]
#[command(name = "swt", version)]
struct Cli {
    /// Bound the worker threads used by the factorization.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct TimeBaseArgs {
    /// Length of the sampled interval, seconds.
    #[arg(long = "delta-t")]
    delta_t: Option<f64>,
    /// Sampling frequency, hertz.
    #[arg(long)]
    fs: Option<f64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decompose a series into its dyad spectrum.
    Analyze {
        input: PathBuf,
        #[command(flatten)]
        time_base: TimeBaseArgs,
        /// Spectrum file to write.
        #[arg(long)]
        out: PathBuf,
        /// Optional round-trip error and solver report.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Unit label carried into the spectrum, e.g. `mV`.
        #[arg(long)]
        unit: Option<String>,
    },
    /// Rebuild a series from a spectrum file.
    Reconstruct {
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write a synthetic series from the seeded digit generator.
    Generate {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        fs: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Time assembly, factorization and refinement for several sizes.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        repeats: usize,
    },
    /// Export `f_hz,c` rows of a spectrum for bar plotting.
    Plotdata {
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Analyze {
            input,
            time_base,
            out,
            report,
            unit,
        } => {
            let time_base = match (time_base.delta_t, time_base.fs) {
                (Some(dt), None) => TimeBase::DeltaT(dt),
                (None, Some(fs)) => TimeBase::SamplingRate(fs),
                _ => unreachable!("clap enforces exactly one time base"),
            };
            let args = AnalyzeArgs {
                input,
                time_base,
                out,
                report,
                unit,
            };
            commands::analyze(&args, &commands::solver_options()?)?;
        }
        Command::Reconstruct { input, out } => commands::reconstruct(&input, &out)?,
        Command::Generate { seed, n, fs, out } => {
            commands::generate(seed, n, fs, &out)?;
        }
        Command::Bench { sizes, repeats } => {
            let rows = bench::run(&sizes, repeats, &commands::solver_options()?)?;
            print!("{}", bench::render_table(&rows));
        }
        Command::Plotdata { input, out } => commands::plotdata(&input, &out)?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.threads {
        Some(threads) => match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(|| run(cli.command)),
            Err(e) => Err(CliError::Usage(format!("--threads {threads}: {e}"))),
        },
        None => run(cli.command),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("swt: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
