//! Library side of the `swt` command-line tool: file formats and the
//! command implementations, kept out of `main.rs` so they can be tested.

pub mod bench;
pub mod commands;
pub mod formats;

use std::path::{Path, PathBuf};

use thiserror::Error;

/// Environment variable overriding the dense materialization cap.
pub const MAX_N_DENSE_ENV: &str = "SWT_MAX_N_DENSE";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {message}", path.display())]
    Parse { path: PathBuf, message: String },

    #[error("{0}")]
    Usage(String),

    #[error("{}: {source}", path.display())]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error(transparent)]
    Core(#[from] squarewave::Error),
}

impl CliError {
    pub fn parse(path: &Path, message: impl Into<String>) -> Self {
        CliError::Parse {
            path: path.to_owned(),
            message: message.into(),
        }
    }

    /// 2 for bad input, 3 for a singular system, 4 when the dense cap is
    /// exceeded, 1 for I/O failures on output.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Usage(_) => 2,
            CliError::Write { .. } => 1,
            CliError::Core(squarewave::Error::SingularSystem { .. }) => 3,
            CliError::Core(squarewave::Error::CapExceeded { .. }) => 4,
            CliError::Core(_) => 2,
        }
    }
}
