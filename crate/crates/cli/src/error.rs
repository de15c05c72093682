use std::io;
use std::path::PathBuf;

use pid_core::ErrorKind;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Format { path: PathBuf, message: String },
    #[error(transparent)]
    Core(#[from] pid_core::Error),
    #[error("{path}: {error}")]
    Io { path: PathBuf, error: io::Error },
    #[error("writing output: {0}")]
    Output(io::Error),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, error: io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            error,
        }
    }

    pub fn format(path: impl Into<PathBuf>, message: impl ToString) -> Self {
        CliError::Format {
            path: path.into(),
            message: message.to_string(),
        }
    }

    /// 2 malformed input, 3 invalid pmf, 4 failed consistency check, 5 IO.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Format { .. } => 2,
            CliError::Core(e) => match e.kind() {
                ErrorKind::Input => 2,
                ErrorKind::Distribution => 3,
                ErrorKind::Consistency => 4,
            },
            CliError::Io { .. } | CliError::Output(_) => 5,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
