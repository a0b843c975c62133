//! Runs the selected checks over every (group, prime) pair of a corpus.

use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;
use tisub_core::corpus::{default_corpus, CorpusConfig};
use tisub_core::theorem::{verify, GroupAnalysis, TheoremId, TheoremReport};
use tisub_core::{all_subgroups, prime_divisors, Error, GroupTable};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::groupfile::load_groups;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkippedGroup {
    pub group: String,
    pub order: usize,
    pub reason: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub checked: usize,
    pub held: usize,
    pub failed: usize,
    pub skipped: usize,
}

/// How many reports matched each structural case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseCoverage {
    pub theorem: TheoremId,
    pub case: &'static str,
    pub hits: usize,
}

#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub reports: Vec<TheoremReport>,
    pub skipped: Vec<SkippedGroup>,
    pub coverage: Vec<CaseCoverage>,
    pub summary: Summary,
    /// `--fail-fast` cut the sweep short.
    pub stopped_early: bool,
}

impl SweepOutcome {
    /// Tallies the summary and case coverage for already sorted reports.
    pub fn from_parts(
        reports: Vec<TheoremReport>,
        skipped: Vec<SkippedGroup>,
        theorems: &[TheoremId],
        stopped_early: bool,
    ) -> Self {
        let held = reports.iter().filter(|r| report_passes(r)).count();
        let summary = Summary {
            checked: reports.len(),
            held,
            failed: reports.len() - held,
            skipped: skipped.len(),
        };
        let coverage = coverage(theorems, &reports);
        SweepOutcome {
            reports,
            skipped,
            coverage,
            summary,
            stopped_early,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.summary.failed == 0 {
            0
        } else {
            1
        }
    }

    pub fn unexercised(&self) -> impl Iterator<Item = &CaseCoverage> {
        self.coverage.iter().filter(|c| c.hits == 0)
    }
}

/// Passes: the two sides agree and no condition is left without a case.
pub fn report_passes(r: &TheoremReport) -> bool {
    r.holds && !r.falsification_candidate
}

/// The built-in corpus restricted to `config.max_order`, followed by the
/// groups from `config.corpus_files` in order.
pub fn assemble_corpus(config: &RunConfig) -> Result<Vec<GroupTable>, CliError> {
    let mut groups = default_corpus(&CorpusConfig {
        max_order: config.max_order,
        ..CorpusConfig::default()
    })?;
    for path in &config.corpus_files {
        groups.extend(load_groups(path)?);
    }
    Ok(groups)
}

enum GroupResult {
    Reports(Vec<TheoremReport>),
    Skipped(SkippedGroup),
    NotRun,
}

pub fn run_sweep(config: &RunConfig, groups: &[GroupTable]) -> Result<SweepOutcome, CliError> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()
        .map_err(|e| CliError::Config(e.to_string()))?;
    let stop = AtomicBool::new(false);
    let results: Vec<GroupResult> = pool.install(|| {
        groups
            .par_iter()
            .map(|g| {
                if stop.load(Ordering::Relaxed) {
                    return GroupResult::NotRun;
                }
                let r = check_group(config, g);
                if config.fail_fast {
                    if let GroupResult::Reports(rs) = &r {
                        if rs.iter().any(|r| !report_passes(r)) {
                            stop.store(true, Ordering::Relaxed);
                        }
                    }
                }
                r
            })
            .collect()
    });

    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    let mut stopped_early = false;
    for r in results {
        match r {
            GroupResult::Reports(rs) => reports.extend(rs),
            GroupResult::Skipped(s) => skipped.push(s),
            GroupResult::NotRun => stopped_early = true,
        }
    }
    if config.fail_fast {
        if let Some(first) = reports.iter().position(|r| !report_passes(r)) {
            let group = reports[first].group_name.clone();
            let end = reports[first..]
                .iter()
                .position(|r| r.group_name != group)
                .map_or(reports.len(), |k| first + k);
            stopped_early |= end < reports.len();
            reports.truncate(end);
        }
    }

    Ok(SweepOutcome::from_parts(reports, skipped, &config.theorems, stopped_early))
}

/// Reports come out per group in the order prime, then theorem.
fn check_group(config: &RunConfig, g: &GroupTable) -> GroupResult {
    let skip = |reason: String| {
        GroupResult::Skipped(SkippedGroup {
            group: g.name().to_string(),
            order: g.order(),
            reason,
        })
    };
    if g.order() > config.max_order {
        return skip(format!("order {} exceeds max_order {}", g.order(), config.max_order));
    }
    let primes: Vec<u64> = prime_divisors(g.order() as u64)
        .into_iter()
        .filter(|&p| config.primes.admits(p))
        .collect();
    if primes.is_empty() {
        return GroupResult::Reports(Vec::new());
    }
    let lattice = match all_subgroups(g) {
        Ok(l) => l,
        Err(e @ (Error::LatticeTooLarge { .. } | Error::GroupTooLarge { .. })) => return skip(e.to_string()),
        Err(e) => return skip(format!("engine error: {e}")),
    };
    let analysis = GroupAnalysis::new(lattice);
    let smallest = prime_divisors(g.order() as u64)[0];
    let mut out = Vec::new();
    for &p in &primes {
        for &t in &config.theorems {
            if t == TheoremId::C1 && p != smallest {
                continue;
            }
            match verify(&analysis, p, t) {
                Ok(r) => out.push(r),
                Err(e) => return skip(format!("engine error: {e}")),
            }
        }
    }
    GroupResult::Reports(out)
}

fn coverage(theorems: &[TheoremId], reports: &[TheoremReport]) -> Vec<CaseCoverage> {
    let mut out = Vec::new();
    for &t in theorems {
        for &case in t.cases() {
            let hits = reports.iter().filter(|r| r.theorem == t && r.rhs_case == Some(case)).count();
            out.push(CaseCoverage {
                theorem: t,
                case: case.label(t),
                hits,
            });
        }
    }
    out
}

