use std::io;
use std::path::PathBuf;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const NEGATIVE: i32 = 1;
    pub const DOMAIN: i32 = 2;
    pub const USAGE: i32 = 64;
    pub const PARSE: i32 = 65;
    pub const NO_INPUT: i32 = 66;
    pub const IO: i32 = 74;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Domain(#[from] affframe::Error),
    /// A negative answer that should still be reported, such as a shape
    /// mismatch in `equiv`.
    #[error("{0}")]
    Negative(String),
    /// A configured safety bound would be exceeded.
    #[error("{0}")]
    Limit(String),
    #[error("{}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Parse(_) => exit::PARSE,
            CliError::Domain(_) => exit::DOMAIN,
            CliError::Negative(_) => exit::NEGATIVE,
            CliError::Limit(_) => exit::DOMAIN,
            CliError::Read { .. } => exit::NO_INPUT,
            CliError::Write { .. } => exit::IO,
        }
    }

    pub fn parse_at(line: usize, message: impl std::fmt::Display) -> Self {
        CliError::Parse(format!("line {line}: {message}"))
    }
}
