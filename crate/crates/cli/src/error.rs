use std::process::ExitCode;

use sharpbound::ParseError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Precondition(#[from] sharpbound::Error),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    /// Verification ran and found violations; the report is already written.
    #[error("verification failed: {0} violation(s)")]
    Violations(usize),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Violations(_) => ExitCode::from(1),
            _ => ExitCode::from(2),
        }
    }
}
