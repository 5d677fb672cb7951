use std::path::PathBuf;

use thiserror::Error;

use matcomp::error::{CompletionError, MatrixError, OracleError, StructureError};

/// Failures of the tool, each with a fixed exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid data: {0}")]
    Invalid(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse(_) => 100,
            CliError::Invalid(_) => 101,
            CliError::Budget(_) => 102,
            CliError::Internal(_) => 103,
        }
    }
}

impl From<MatrixError> for CliError {
    fn from(e: MatrixError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<StructureError> for CliError {
    fn from(e: StructureError) -> Self {
        match e {
            StructureError::Inconsistent(_) => CliError::Internal(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<CompletionError> for CliError {
    fn from(e: CompletionError) -> Self {
        match e {
            CompletionError::Internal(_) => CliError::Internal(e.to_string()),
            CompletionError::Structure(s) => s.into(),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            OracleError::Structure(s) => s.into(),
            OracleError::Completion(c) => c.into(),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}
