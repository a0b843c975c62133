//! Run configuration: defaults, then the TOML config file, then flags.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Deserialize;
use tisub_core::theorem::TheoremId;
use tisub_core::LatticeLimits;

use crate::error::CliError;

/// Environment variable naming the default config file.
pub const CONFIG_ENV: &str = "TISUB_CONFIG";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimeSelection {
    All,
    Only(u64),
}

impl PrimeSelection {
    pub fn admits(self, p: u64) -> bool {
        match self {
            PrimeSelection::All => true,
            PrimeSelection::Only(q) => p == q,
        }
    }
}

impl FromStr for PrimeSelection {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("all") {
            return Ok(PrimeSelection::All);
        }
        match s.parse::<u64>() {
            Ok(p) if tisub_core::group::is_prime(p) => Ok(PrimeSelection::Only(p)),
            _ => Err(CliError::Config(format!("primes must be \"all\" or a prime, got {s:?}"))),
        }
    }
}

impl fmt::Display for PrimeSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeSelection::All => f.write_str("all"),
            PrimeSelection::Only(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub max_order: usize,
    pub theorems: Vec<TheoremId>,
    pub primes: PrimeSelection,
    pub corpus_files: Vec<PathBuf>,
    pub output_format: OutputFormat,
    pub parallelism: usize,
    pub fail_fast: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_order: LatticeLimits::default().max_order,
            theorems: TheoremId::ALL.to_vec(),
            primes: PrimeSelection::All,
            corpus_files: Vec::new(),
            output_format: OutputFormat::Text,
            parallelism: std::thread::available_parallelism().map_or(1, |n| n.get()),
            fail_fast: false,
        }
    }
}

/// The config file; every key is optional.
#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct ConfigFile {
    max_order: Option<usize>,
    theorems: Option<Vec<String>>,
    primes: Option<toml::Value>,
    corpus_files: Option<Vec<PathBuf>>,
    output_format: Option<OutputFormat>,
    parallelism: Option<usize>,
    fail_fast: Option<bool>,
}

impl RunConfig {
    /// Overlays a TOML config file. Relative corpus paths are resolved
    /// against the file's directory.
    pub fn apply_file(&mut self, path: &Path) -> Result<(), CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let file: ConfigFile =
            toml::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        if let Some(v) = file.max_order {
            self.max_order = v;
        }
        if let Some(ts) = file.theorems {
            self.theorems = parse_theorems(&ts.join(","))?;
        }
        if let Some(p) = file.primes {
            self.primes = match p {
                toml::Value::String(s) => s.parse()?,
                toml::Value::Integer(i) => i.to_string().parse()?,
                other => return Err(CliError::Config(format!("primes: unexpected value {other}"))),
            };
        }
        if let Some(files) = file.corpus_files {
            let base = path.parent().unwrap_or(Path::new("."));
            self.corpus_files = files.into_iter().map(|f| base.join(f)).collect();
        }
        if let Some(f) = file.output_format {
            self.output_format = f;
        }
        if let Some(j) = file.parallelism {
            self.parallelism = j;
        }
        if let Some(b) = file.fail_fast {
            self.fail_fast = b;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let cap = LatticeLimits::default().max_order;
        if self.max_order == 0 || self.max_order > cap {
            return Err(CliError::Config(format!("max_order must be between 1 and {cap}")));
        }
        if self.parallelism == 0 {
            return Err(CliError::Config("parallelism must be at least 1".into()));
        }
        if self.theorems.is_empty() {
            return Err(CliError::Config("no theorems selected".into()));
        }
        Ok(())
    }
}

/// `T1,T5,...`; duplicates are dropped and the result is in canonical order.
pub fn parse_theorems(list: &str) -> Result<Vec<TheoremId>, CliError> {
    let mut out = Vec::new();
    for part in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let t: TheoremId = part
            .parse()
            .map_err(|_| CliError::Config(format!("unknown theorem {part:?}")))?;
        out.push(t);
    }
    out.sort();
    out.dedup();
    Ok(out)
}
