//! Report rendering: JSON, CSV and plain text.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use tisub_core::theorem::{RhsCase, TheoremId, TheoremReport};

use crate::sweep::{SkippedGroup, Summary, SweepOutcome};

/// JSON form of one report. Field names are part of the documented schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub group: String,
    pub order: usize,
    pub prime: u64,
    pub theorem: String,
    pub lhs: bool,
    pub rhs: bool,
    pub rhs_case: Option<String>,
    pub holds: bool,
    pub falsification_candidate: bool,
    pub witness: Option<String>,
}

impl From<&TheoremReport> for ReportRecord {
    fn from(r: &TheoremReport) -> Self {
        ReportRecord {
            group: r.group_name.clone(),
            order: r.group_order,
            prime: r.prime,
            theorem: r.theorem.to_string(),
            lhs: r.lhs,
            rhs: r.rhs,
            rhs_case: r.rhs_label().map(str::to_string),
            holds: r.holds,
            falsification_candidate: r.falsification_candidate,
            witness: r.witness.clone(),
        }
    }
}

impl TryFrom<ReportRecord> for TheoremReport {
    type Error = String;

    fn try_from(r: ReportRecord) -> Result<Self, String> {
        let theorem: TheoremId = r.theorem.parse().map_err(|_| format!("unknown theorem {:?}", r.theorem))?;
        let rhs_case = match &r.rhs_case {
            None => None,
            Some(label) => Some(
                RhsCase::from_label(theorem, label).ok_or_else(|| format!("unknown case {label:?} for {theorem}"))?,
            ),
        };
        Ok(TheoremReport {
            group_name: r.group,
            group_order: r.order,
            prime: r.prime,
            theorem,
            lhs: r.lhs,
            rhs_case,
            rhs: r.rhs,
            holds: r.holds,
            falsification_candidate: r.falsification_candidate,
            witness: r.witness,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedRecord {
    pub group: String,
    pub order: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageRecord {
    pub theorem: String,
    pub case: String,
    pub hits: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryRecord {
    pub checked: usize,
    pub held: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepDocument {
    pub reports: Vec<ReportRecord>,
    pub skipped: Vec<SkippedRecord>,
    pub coverage: Vec<CoverageRecord>,
    pub unexercised: Vec<String>,
    pub summary: SummaryRecord,
    pub stopped_early: bool,
}

impl From<&SweepOutcome> for SweepDocument {
    fn from(o: &SweepOutcome) -> Self {
        SweepDocument {
            reports: o.reports.iter().map(ReportRecord::from).collect(),
            skipped: o
                .skipped
                .iter()
                .map(|s: &SkippedGroup| SkippedRecord {
                    group: s.group.clone(),
                    order: s.order,
                    reason: s.reason.clone(),
                })
                .collect(),
            coverage: o
                .coverage
                .iter()
                .map(|c| CoverageRecord {
                    theorem: c.theorem.to_string(),
                    case: c.case.to_string(),
                    hits: c.hits,
                })
                .collect(),
            unexercised: o.unexercised().map(|c| format!("{} {}", c.theorem, c.case)).collect(),
            summary: summary_record(&o.summary),
            stopped_early: o.stopped_early,
        }
    }
}

fn summary_record(s: &Summary) -> SummaryRecord {
    SummaryRecord {
        checked: s.checked,
        held: s.held,
        failed: s.failed,
        skipped: s.skipped,
    }
}

pub fn render_json(o: &SweepOutcome) -> String {
    let mut s = serde_json::to_string_pretty(&SweepDocument::from(o)).expect("report serializes");
    s.push('\n');
    s
}

pub const CSV_COLUMNS: [&str; 8] = ["group", "order", "prime", "theorem", "lhs", "rhs_case", "holds", "witness"];

pub fn render_csv(o: &SweepOutcome) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_COLUMNS).expect("in-memory write");
    for r in &o.reports {
        w.write_record([
            r.group_name.as_str(),
            &r.group_order.to_string(),
            &r.prime.to_string(),
            r.theorem.as_str(),
            bool_str(r.lhs),
            r.rhs_label().unwrap_or(""),
            bool_str(r.holds),
            r.witness.as_deref().unwrap_or(""),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is UTF-8")
}

fn bool_str(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

pub fn render_text(o: &SweepOutcome) -> String {
    let mut s = String::new();
    for r in &o.reports {
        let verdict = if crate::sweep::report_passes(r) { "ok  " } else { "FAIL" };
        let rhs = match (r.rhs_label(), r.theorem) {
            (Some(l), _) => l.to_string(),
            (None, TheoremId::T5 | TheoremId::T6 | TheoremId::T7) => format!("unrestricted={}", r.rhs),
            (None, _) => "none".to_string(),
        };
        let _ = write!(s, "{verdict} {} (order {}) p={} {} lhs={} rhs={rhs}", r.group_name, r.group_order, r.prime, r.theorem, r.lhs);
        if let Some(w) = &r.witness {
            let _ = write!(s, " witness: {w}");
        }
        s.push('\n');
    }
    for k in &o.skipped {
        let _ = writeln!(s, "skipped {} (order {}): {}", k.group, k.order, k.reason);
    }
    s.push_str(&render_coverage(o));
    s.push_str(&render_summary(o));
    s
}

pub fn render_coverage(o: &SweepOutcome) -> String {
    let mut s = String::new();
    if o.coverage.is_empty() {
        return s;
    }
    s.push_str("case coverage:\n");
    for c in &o.coverage {
        let _ = writeln!(s, "  {} {}: {} instance(s)", c.theorem, c.case, c.hits);
    }
    let missing: Vec<String> = o.unexercised().map(|c| format!("{} {}", c.theorem, c.case)).collect();
    if missing.is_empty() {
        s.push_str("  every case exercised\n");
    } else {
        let _ = writeln!(s, "  not exercised by any checked (group, prime) pair: {}", missing.join(", "));
    }
    s
}

pub fn render_summary(o: &SweepOutcome) -> String {
    let m = &o.summary;
    let mut s = format!(
        "summary: checked={} held={} failed={} skipped={}",
        m.checked, m.held, m.failed, m.skipped
    );
    if o.stopped_early {
        s.push_str(" (stopped early)");
    }
    s.push('\n');
    s
}
