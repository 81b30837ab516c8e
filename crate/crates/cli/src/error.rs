use std::fmt;
use std::path::PathBuf;

use confined_hydrogen::Error;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Solver(Error),
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    /// Number of failed checks.
    Verification(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Solver(_) | CliError::Io { .. } => 2,
            CliError::Verification(_) => 3,
        }
    }

    pub fn io(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> CliError {
        let path = path.into();
        move |source| CliError::Io { path, source }
    }
}

/// Bad quantum numbers and bad config files are the caller's mistake;
/// everything else comes from the numerics.
impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::Config(_) => CliError::Usage(e.to_string()),
            other => CliError::Solver(other),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Solver(e) => write!(f, "solver failure: {e}"),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Verification(n) => write!(f, "{n} verification check(s) failed"),
        }
    }
}

impl std::error::Error for CliError {}
