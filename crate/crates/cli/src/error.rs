use std::path::PathBuf;

use crate::groupfile::ParseError;

/// Everything that ends a run with exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: {error}", path.display())]
    Parse { path: PathBuf, error: ParseError },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("no group named {0:?} in the corpus")]
    UnknownGroup(String),
    #[error(transparent)]
    Engine(#[from] tisub_core::Error),
}
