//! Corpus sweeps, report formats and group files on top of `tisub-core`.

pub mod config;
pub mod error;
pub mod explain;
pub mod groupfile;
pub mod output;
pub mod sweep;

pub use config::{OutputFormat, PrimeSelection, RunConfig, CONFIG_ENV};
pub use error::CliError;
pub use groupfile::{load_groups, parse_groups};
pub use sweep::{assemble_corpus, run_sweep, SweepOutcome};
