//! Detailed single-case report for debugging a verdict.

use std::fmt::Write as _;

use tisub_core::theorem::{rhs_cases, verify, GroupAnalysis, TheoremId};
use tisub_core::{all_subgroups, prime_divisors, GroupTable};

use crate::error::CliError;

pub fn explain(groups: &[GroupTable], name: &str, p: u64, theorem: TheoremId) -> Result<String, CliError> {
    let g = groups
        .iter()
        .find(|g| g.name() == name)
        .ok_or_else(|| CliError::UnknownGroup(name.to_string()))?;
    let primes = prime_divisors(g.order() as u64);
    if !primes.contains(&p) {
        return Err(CliError::Config(format!("{p} is not a prime divisor of |{name}| = {}", g.order())));
    }
    if theorem == TheoremId::C1 && p != primes[0] {
        return Err(CliError::Config(format!("C1 is stated for the smallest prime divisor, {}", primes[0])));
    }
    let analysis = GroupAnalysis::new(all_subgroups(g)?);
    let lattice = analysis.lattice();
    let filter = theorem.filter();

    let mut s = String::new();
    let _ = writeln!(s, "group {} of order {}", g.name(), g.order());
    let _ = writeln!(s, "  {}", g.provenance());
    let _ = writeln!(
        s,
        "lattice: {} subgroups in {} conjugacy classes",
        lattice.len(),
        lattice.conjugacy_classes().len()
    );
    let _ = writeln!(s, "subgroups (theorem {theorem}, p = {p}):");
    let _ = writeln!(
        s,
        "  {:>4} {:>5} {:>6}  {:<5} {:<9} {:<7} {:<8} {:<7} {:<8}  subgroup",
        "#", "class", "order", "TI", "subnormal", "p'", "self-cen", "in-scope", "complies"
    );
    for (i, h) in lattice.subgroups().iter().enumerate() {
        let f = analysis.flags(i);
        let _ = writeln!(
            s,
            "  {:>4} {:>5} {:>6}  {:<5} {:<9} {:<7} {:<8} {:<7} {:<8}  {}",
            i,
            lattice.class_of(i),
            h.order(),
            f.ti,
            f.subnormal,
            !(h.order() as u64).is_multiple_of(p),
            f.self_centralizing,
            filter.admits(f),
            analysis.complies(i, p),
            h.describe(),
        );
    }
    match analysis.frobenius() {
        Some(d) => {
            let _ = writeln!(s, "Frobenius decomposition:");
            let _ = writeln!(s, "  kernel     {}", d.kernel.describe());
            let _ = writeln!(s, "  complement {}", d.complement.describe());
            if let (Some(q), Some(r)) = (d.kernel_prime(), d.kernel_rank()) {
                let _ = writeln!(s, "  kernel is elementary abelian {q}^{r}");
            }
        }
        None => {
            let _ = writeln!(s, "Frobenius decomposition: none");
        }
    }
    if !theorem.cases().is_empty() {
        let eval = rhs_cases(&analysis, p, theorem)?;
        let _ = writeln!(s, "structural cases:");
        for c in &eval.checks {
            let mark = if c.holds { "yes" } else { "no " };
            let _ = writeln!(s, "  [{mark}] {}: {}", c.case.label(theorem), c.detail);
        }
        let _ = writeln!(
            s,
            "matched case: {}",
            eval.case.map_or("none", |c| c.label(theorem))
        );
    }
    let r = verify(&analysis, p, theorem)?;
    let _ = writeln!(
        s,
        "verdict: lhs={} rhs={} holds={}{}",
        r.lhs,
        r.rhs_label().map_or_else(|| r.rhs.to_string(), str::to_string),
        r.holds,
        if r.falsification_candidate { " (falsification candidate)" } else { "" }
    );
    if let Some(w) = &r.witness {
        let _ = writeln!(s, "witness: {w}");
    }
    Ok(s)
}

