//! Library half of the `cquat` command-line tool: the `.cqm` format, JSON
//! result documents and the subcommand implementations.

pub mod commands;
pub mod cqm;
pub mod report;

use std::path::Path;

use thiserror::Error;

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    /// The computation ran but the mathematical request cannot be met
    /// (singular matrix, unconverged eigensolver, failed self-test).
    Math = 1,
    /// Bad arguments, unreadable or malformed input, incompatible shapes.
    Usage = 2,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: String,
        source: cqm::ParseError,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit(&self) -> Exit {
        Exit::Usage
    }
}

/// Reads and parses a `.cqm` file.
pub fn load(path: &Path) -> Result<cqm::CqmFile, CliError> {
    let shown = path.display().to_string();
    let src = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    cqm::parse(&src).map_err(|source| CliError::Parse { path: shown, source })
}

/// Exit status for a library error: shape problems are usage errors,
/// everything else is a mathematical failure.
pub fn classify(err: &cquat::Error) -> Exit {
    use cquat::Error::*;
    match err {
        Shape { .. } | NotSquare { .. } | InvalidConjugation(_) | NonFinite => Exit::Usage,
        NotInvertible { .. } | NotInEtaImage { .. } | NoConvergence { .. } | TooLarge { .. } => Exit::Math,
    }
}
