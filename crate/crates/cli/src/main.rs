use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tisub::config::parse_theorems;
use tisub::output::{render_coverage, render_csv, render_json, render_summary, render_text};
use tisub::{assemble_corpus, run_sweep, CliError, OutputFormat, PrimeSelection, RunConfig, CONFIG_ENV};
use tisub_core::theorem::TheoremId;

#[derive(Parser)]
#[command(name = "tisub", version, about = "Check TI / subnormal subgroup classifications over a corpus of finite groups")]
struct Cli {
    /// TOML file with default settings
    #[arg(long, global = true, env = CONFIG_ENV)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the corpus and report every verdict
    Verify(VerifyArgs),
    /// Show the subgroup table and case analysis for one group and prime
    Explain {
        group: String,
        prime: u64,
        theorem: String,
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// List the groups in the corpus
    ListCorpus {
        #[command(flatten)]
        corpus: CorpusArgs,
    },
}

#[derive(Args)]
struct CorpusArgs {
    /// Largest group order to include
    #[arg(long)]
    max_order: Option<usize>,
    /// Extra group file (repeatable)
    #[arg(long = "corpus", value_name = "FILE")]
    corpus_files: Vec<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// Comma-separated subset of T1,T2,T3,C1,T5,T6,T7
    #[arg(long)]
    theorems: Option<String>,
    /// "all" or a single prime
    #[arg(long)]
    primes: Option<String>,
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// Worker threads
    #[arg(long)]
    jobs: Option<usize>,
    /// Stop after the first group with a failed check
    #[arg(long)]
    fail_fast: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn base_config(path: Option<&PathBuf>, corpus: &CorpusArgs) -> Result<RunConfig, CliError> {
    let mut config = RunConfig::default();
    if let Some(p) = path {
        config.apply_file(p)?;
    }
    if let Some(m) = corpus.max_order {
        config.max_order = m;
    }
    config.corpus_files.extend(corpus.corpus_files.iter().cloned());
    Ok(config)
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let mut stdout = std::io::stdout().lock();
    match &cli.command {
        Command::Verify(args) => {
            let mut config = base_config(cli.config.as_ref(), &args.corpus)?;
            if let Some(t) = &args.theorems {
                config.theorems = parse_theorems(t)?;
            }
            if let Some(p) = &args.primes {
                config.primes = p.parse::<PrimeSelection>()?;
            }
            if let Some(f) = args.format {
                config.output_format = f;
            }
            if let Some(j) = args.jobs {
                config.parallelism = j;
            }
            config.fail_fast |= args.fail_fast;
            config.validate()?;
            let groups = assemble_corpus(&config)?;
            let outcome = run_sweep(&config, &groups)?;
            let body = match config.output_format {
                OutputFormat::Json => render_json(&outcome),
                OutputFormat::Text => render_text(&outcome),
                OutputFormat::Csv => {
                    // keep stdout a plain table
                    let mut err = std::io::stderr().lock();
                    for k in &outcome.skipped {
                        let _ = writeln!(err, "skipped {} (order {}): {}", k.group, k.order, k.reason);
                    }
                    let _ = write!(err, "{}{}", render_coverage(&outcome), render_summary(&outcome));
                    render_csv(&outcome)
                }
            };
            let _ = stdout.write_all(body.as_bytes());
            Ok(outcome.exit_code() as u8)
        }
        Command::Explain {
            group,
            prime,
            theorem,
            corpus,
        } => {
            let config = base_config(cli.config.as_ref(), corpus)?;
            config.validate()?;
            let theorem: TheoremId = theorem
                .parse()
                .map_err(|_| CliError::Config(format!("unknown theorem {theorem:?}")))?;
            let groups = assemble_corpus(&config)?;
            let text = tisub::explain::explain(&groups, group, *prime, theorem)?;
            let _ = stdout.write_all(text.as_bytes());
            Ok(0)
        }
        Command::ListCorpus { corpus } => {
            let config = base_config(cli.config.as_ref(), corpus)?;
            config.validate()?;
            for g in assemble_corpus(&config)? {
                let _ = writeln!(stdout, "{}\t{}\t{}", g.name(), g.order(), g.provenance());
            }
            Ok(0)
        }
    }
}
