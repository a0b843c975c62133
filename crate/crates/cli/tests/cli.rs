use std::path::Path;
use std::process::{Command, Output};

use tisub::output::{SweepDocument, CSV_COLUMNS};
use tisub::sweep::SweepOutcome;
use tisub::{run_sweep, RunConfig};
use tisub_core::corpus::{default_corpus, CorpusConfig};
use tisub_core::theorem::TheoremReport;

fn tisub(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tisub"))
        .args(args)
        .env_remove(tisub::CONFIG_ENV)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn default_sweep_exits_zero() {
    let o = tisub(&["verify", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert!(out.contains("failed=0 skipped=0"));
    assert!(out.contains("case coverage:"));
}

#[test]
fn malformed_and_missing_corpus_files_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "S3; 3; (0 1 2); (0 1)\nX; 3; (0 1\n");
    let o = tisub(&["verify", "--corpus", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let o = tisub(&["verify", "--corpus", "/nonexistent/groups.txt"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(tisub(&["verify", "--jobs", "0"]).status.code(), Some(2));
    assert_eq!(tisub(&["verify", "--max-order", "100000"]).status.code(), Some(2));
    assert_eq!(tisub(&["verify", "--theorems", "T4"]).status.code(), Some(2));
    assert_eq!(tisub(&["verify", "--bogus"]).status.code(), Some(2));
}

#[test]
fn a_failed_report_means_exit_one() {
    let config = RunConfig {
        theorems: vec![tisub_core::theorem::TheoremId::T1],
        max_order: 12,
        ..RunConfig::default()
    };
    let groups = default_corpus(&CorpusConfig {
        max_order: 12,
        ..CorpusConfig::default()
    })
    .unwrap();
    let clean = run_sweep(&config, &groups).unwrap();
    assert_eq!(clean.exit_code(), 0);
    let mut reports = clean.reports.clone();
    reports[3].holds = false;
    let broken = SweepOutcome::from_parts(reports, Vec::new(), &config.theorems, false);
    assert_eq!(broken.summary.failed, 1);
    assert_eq!(broken.exit_code(), 1);
    let mut reports = clean.reports.clone();
    reports[0].falsification_candidate = true;
    assert_eq!(SweepOutcome::from_parts(reports, Vec::new(), &config.theorems, false).exit_code(), 1);
}

#[test]
fn json_round_trips_every_field() {
    let o = tisub(&["verify", "--format", "json", "--max-order", "60"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: SweepDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!doc.reports.is_empty());
    assert!(doc.unexercised.contains(&"T3 C2_Q8H".to_string()));

    let config = RunConfig {
        max_order: 60,
        ..RunConfig::default()
    };
    let groups = tisub::assemble_corpus(&config).unwrap();
    let direct = run_sweep(&config, &groups).unwrap();
    let parsed: Vec<TheoremReport> = doc.reports.into_iter().map(|r| r.try_into().unwrap()).collect();
    assert_eq!(parsed, direct.reports);
}

#[test]
fn output_is_identical_across_runs_and_thread_counts() {
    let a = tisub(&["verify", "--format", "csv", "--jobs", "1", "--max-order", "120"]);
    let b = tisub(&["verify", "--format", "csv", "--jobs", "4", "--max-order", "120"]);
    let c = tisub(&["verify", "--format", "csv", "--jobs", "4", "--max-order", "120"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(b.stdout, c.stdout);
    let text = stdout(&a);
    assert_eq!(text.lines().next().unwrap(), CSV_COLUMNS.join(","));
}

#[test]
fn prime_filter_restricts_groups() {
    let o = tisub(&["verify", "--format", "csv", "--primes", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let mut rows = 0;
    for rec in rdr.records() {
        let rec = rec.unwrap();
        let order: usize = rec[1].parse().unwrap();
        assert_eq!(order % 7, 0);
        assert_eq!(&rec[2], "7");
        rows += 1;
    }
    assert!(rows > 0);
}

#[test]
fn oversized_loaded_groups_are_skipped_not_failed() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "big.txt", "# symmetric group of degree 6\nS6; 6; (0 1 2 3 4 5); (0 1)\nV4; 4; (0 1)(2 3); (0 2)(1 3)\n");
    let o = tisub(&["verify", "--corpus", &file, "--max-order", "24", "--theorems", "T1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("skipped S6 (order 720)"), "{out}");
    assert!(out.contains("skipped=1"));
    assert!(out.contains("V4 (order 4) p=2 T1"));
}

#[test]
fn config_file_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "tisub.toml", "max_order = 12\ntheorems = [\"T1\"]\noutput_format = \"csv\"\n");
    let o = Command::new(env!("CARGO_BIN_EXE_tisub"))
        .arg("verify")
        .env(tisub::CONFIG_ENV, &cfg)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("group,order,"));
    assert!(text.lines().skip(1).all(|l| l.split(',').nth(3) == Some("T1")));
    let bad = write(dir.path(), "bad.toml", "max_order = \"big\"\n");
    let o = Command::new(env!("CARGO_BIN_EXE_tisub"))
        .arg("verify")
        .env(tisub::CONFIG_ENV, &bad)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn explain_reports() {
    let o = tisub(&["explain", "S3", "2", "T1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("lattice: 6 subgroups"));
    assert!(s.contains("matched case: C2"));
    assert!(s.contains("complement order 2"));

    let s = stdout(&tisub(&["explain", "Q8", "2", "T1"]));
    let rows: Vec<&str> = s.lines().filter(|l| l.trim_start().starts_with(|c: char| c.is_ascii_digit())).collect();
    assert_eq!(rows.len(), 6);
    // column 5 is "subnormal"
    assert!(rows.iter().all(|r| r.split_whitespace().nth(4) == Some("true")));
    assert!(s.contains("matched case: C1_subnormal"));

    let s = stdout(&tisub(&["explain", "S4", "2", "T1"]));
    let witness = s.lines().find_map(|l| l.strip_prefix("witness: ")).unwrap();
    assert!(witness.starts_with("order 8"));
    let row = s
        .lines()
        .find(|l| l.trim_start().starts_with(|c: char| c.is_ascii_digit()) && l.ends_with(witness))
        .unwrap();
    let cols: Vec<&str> = row.split_whitespace().collect();
    assert_eq!((cols[3], cols[4]), ("false", "false"));

    assert_eq!(tisub(&["explain", "NoSuchGroup", "2", "T1"]).status.code(), Some(2));
    assert_eq!(tisub(&["explain", "S3", "5", "T1"]).status.code(), Some(2));
}

#[test]
fn list_corpus_names_every_group_once() {
    let o = tisub(&["list-corpus"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let names: Vec<&str> = s.lines().map(|l| l.split('\t').next().unwrap()).collect();
    assert!(names.len() >= 60);
    assert_eq!(names.iter().filter(|&&n| n == "S3").count(), 1);
}
