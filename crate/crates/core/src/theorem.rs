//! Quantified subgroup conditions, structural case recognizers, and the
//! biconditional / equivalence verdicts built from them.
//!
//! The condition under test: every subgroup `H` in some class is a
//! TI-subgroup, or subnormal, or has order prime to `p`. The structural
//! side describes `G` as one of a few Frobenius shapes (or "everything of
//! order divisible by `p` is subnormal").

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{is_prime, p_part, prime_divisors, GroupTable};
use crate::lattice::SubgroupLattice;
use crate::structure::{
    acts_irreducibly, commutator_nontrivial, frobenius_decomposition, is_abelian, is_cyclic, is_nilpotent,
    q8_odd_cyclic_decomposition, FrobeniusDecomposition,
};
use crate::subgroup::Subgroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    C1,
    T5,
    T6,
    T7,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::C1,
        TheoremId::T5,
        TheoremId::T6,
        TheoremId::T7,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T1 => "T1",
            TheoremId::T2 => "T2",
            TheoremId::T3 => "T3",
            TheoremId::C1 => "C1",
            TheoremId::T5 => "T5",
            TheoremId::T6 => "T6",
            TheoremId::T7 => "T7",
        }
    }

    /// Structural cases of a classification theorem, in test order.
    pub fn cases(self) -> &'static [RhsCase] {
        use RhsCase::*;
        match self {
            TheoremId::T1 => &[Subnormal, PrimeKernel, CyclicSylowComplement, NonNilpotentComplement],
            TheoremId::T2 => &[Subnormal, NonNilpotentComplement],
            TheoremId::T3 => &[Subnormal, Q8Complement, NonNilpotentComplement],
            TheoremId::C1 => &[Subnormal],
            TheoremId::T5 | TheoremId::T6 | TheoremId::T7 => &[],
        }
    }

    /// The subgroup class quantified over by the condition.
    pub fn filter(self) -> SubgroupFilter {
        match self {
            TheoremId::T1 => SubgroupFilter::All,
            TheoremId::T2 | TheoremId::C1 => SubgroupFilter::NonNilpotent,
            TheoremId::T3 => SubgroupFilter::NonAbelian,
            TheoremId::T5 => SubgroupFilter::SelfCentralizing,
            TheoremId::T6 => SubgroupFilter::SelfCentralizingNonNilpotent,
            TheoremId::T7 => SubgroupFilter::SelfCentralizingNonAbelian,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidRecipe(format!("unknown theorem id {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubgroupFilter {
    All,
    NonNilpotent,
    NonAbelian,
    SelfCentralizing,
    SelfCentralizingNonNilpotent,
    SelfCentralizingNonAbelian,
}

impl SubgroupFilter {
    pub fn admits(self, flags: &SubgroupFlags) -> bool {
        match self {
            SubgroupFilter::All => true,
            SubgroupFilter::NonNilpotent => !flags.nilpotent,
            SubgroupFilter::NonAbelian => !flags.abelian,
            SubgroupFilter::SelfCentralizing => flags.self_centralizing,
            SubgroupFilter::SelfCentralizingNonNilpotent => flags.self_centralizing && !flags.nilpotent,
            SubgroupFilter::SelfCentralizingNonAbelian => flags.self_centralizing && !flags.abelian,
        }
    }

    /// The same class without the self-centralizing restriction.
    pub fn unrestricted(self) -> SubgroupFilter {
        match self {
            SubgroupFilter::SelfCentralizing => SubgroupFilter::All,
            SubgroupFilter::SelfCentralizingNonNilpotent => SubgroupFilter::NonNilpotent,
            SubgroupFilter::SelfCentralizingNonAbelian => SubgroupFilter::NonAbelian,
            other => other,
        }
    }
}

/// Structural shapes on the right-hand side of the classifications.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RhsCase {
    /// Every subgroup in the theorem's class with order divisible by `p` is subnormal.
    Subnormal,
    /// `p = 2`, Frobenius `Z_q ⋊ ⟨a⟩`, `q` odd prime, `o(a)` even.
    PrimeKernel,
    /// `p > 2`, Frobenius `Z_q^r ⋊ (P × H)`, `P` a cyclic Sylow `p`-subgroup
    /// all of whose nontrivial subgroups act irreducibly.
    CyclicSylowComplement,
    /// As [`RhsCase::CyclicSylowComplement`] with `r > 1` and `H ≅ Q8 × odd cyclic`.
    Q8Complement,
    /// `p > 2`, Frobenius `Z_q^r ⋊ (Z_p ⋊ H)`, `r > 1`, `[Z_p, H] ≠ 1`,
    /// `Z_p` irreducible on the kernel.
    NonNilpotentComplement,
}

impl RhsCase {
    /// Case label as numbered within `theorem`.
    pub fn label(self, theorem: TheoremId) -> &'static str {
        use RhsCase::*;
        match (theorem, self) {
            (TheoremId::T1, Subnormal) => "C1_subnormal",
            (TheoremId::T2 | TheoremId::C1, Subnormal) => "C1_subnormal_nn",
            (TheoremId::T3, Subnormal) => "C1_subnormal_na",
            (TheoremId::T1, PrimeKernel) => "C2",
            (TheoremId::T1, CyclicSylowComplement) => "C3",
            (TheoremId::T1, NonNilpotentComplement) => "C4",
            (TheoremId::T2, NonNilpotentComplement) => "C2",
            (TheoremId::T3, Q8Complement) => "C2_Q8H",
            (TheoremId::T3, NonNilpotentComplement) => "C3",
            _ => "unnumbered",
        }
    }

    pub fn from_label(theorem: TheoremId, label: &str) -> Option<RhsCase> {
        theorem.cases().iter().copied().find(|c| c.label(theorem) == label)
    }
}

/// Per-subgroup predicate values, computed once per group.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SubgroupFlags {
    pub normal: bool,
    pub subnormal: bool,
    pub ti: bool,
    pub self_centralizing: bool,
    pub abelian: bool,
    pub nilpotent: bool,
}

impl SubgroupFlags {
    pub fn compute(h: &Subgroup<'_>) -> Self {
        SubgroupFlags {
            normal: h.is_normal(),
            subnormal: h.is_subnormal(),
            ti: h.is_ti(),
            self_centralizing: h.is_self_centralizing(),
            abelian: is_abelian(h),
            nilpotent: is_nilpotent(h),
        }
    }
}

/// A group's lattice with every subgroup predicate evaluated and the
/// Frobenius decomposition (if any) located.
///
/// All predicates are invariant under conjugation, so they are evaluated
/// on one representative per conjugacy class.
pub struct GroupAnalysis<'g> {
    lattice: SubgroupLattice<'g>,
    flags: Vec<SubgroupFlags>,
    frobenius: Option<FrobeniusDecomposition<'g>>,
}

impl<'g> GroupAnalysis<'g> {
    pub fn new(lattice: SubgroupLattice<'g>) -> Self {
        let mut flags = alloc::vec![SubgroupFlags::default(); lattice.len()];
        for class in lattice.conjugacy_classes() {
            let f = SubgroupFlags::compute(lattice.get(class[0]));
            for &i in class {
                flags[i] = f;
            }
        }
        let frobenius = frobenius_decomposition(&lattice);
        GroupAnalysis {
            lattice,
            flags,
            frobenius,
        }
    }

    pub fn group(&self) -> &'g GroupTable {
        self.lattice.group()
    }

    pub fn lattice(&self) -> &SubgroupLattice<'g> {
        &self.lattice
    }

    pub fn flags(&self, i: usize) -> &SubgroupFlags {
        &self.flags[i]
    }

    pub fn frobenius(&self) -> Option<&FrobeniusDecomposition<'g>> {
        self.frobenius.as_ref()
    }

    fn check_prime(&self, p: u64) -> Result<()> {
        let order = self.group().order();
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !(order as u64).is_multiple_of(p) {
            return Err(Error::PrimeDoesNotDivide { p, order });
        }
        Ok(())
    }

    /// Whether `H` is a TI-subgroup, subnormal, or of `p′`-order.
    pub fn complies(&self, i: usize, p: u64) -> bool {
        let f = &self.flags[i];
        f.ti || f.subnormal || !(self.lattice.get(i).order() as u64).is_multiple_of(p)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LhsOutcome {
    pub holds: bool,
    /// Last violating subgroup in lattice order, i.e. one of largest order.
    pub witness: Option<usize>,
}

/// Every subgroup admitted by `filter` is TI, subnormal, or of `p′`-order.
pub fn lhs_condition(analysis: &GroupAnalysis<'_>, p: u64, filter: SubgroupFilter) -> Result<LhsOutcome> {
    analysis.check_prime(p)?;
    let witness = (0..analysis.lattice.len()).rev().find(|&i| filter.admits(&analysis.flags[i]) && !analysis.complies(i, p));
    Ok(LhsOutcome {
        holds: witness.is_none(),
        witness,
    })
}

/// One named sub-check of a structural case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseCheck {
    pub case: RhsCase,
    pub detail: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhsEvaluation {
    /// First matching case in test order.
    pub case: Option<RhsCase>,
    /// Sub-checks in evaluation order; each case stops at its first failure.
    pub checks: Vec<CaseCheck>,
}

struct CaseTrace<'a> {
    case: RhsCase,
    checks: &'a mut Vec<CaseCheck>,
}

impl CaseTrace<'_> {
    fn check(&mut self, detail: impl Into<String>, holds: bool) -> bool {
        self.checks.push(CaseCheck {
            case: self.case,
            detail: detail.into(),
            holds,
        });
        holds
    }
}

fn subnormal_case(analysis: &GroupAnalysis<'_>, p: u64, filter: SubgroupFilter, trace: &mut CaseTrace<'_>) -> bool {
    let offender = (0..analysis.lattice.len()).find(|&i| {
        let f = &analysis.flags[i];
        filter.admits(f) && (analysis.lattice.get(i).order() as u64).is_multiple_of(p) && !f.subnormal
    });
    match offender {
        None => trace.check(format!("every {filter:?} subgroup of order divisible by {p} is subnormal"), true),
        Some(i) => trace.check(
            format!("non-subnormal subgroup of order divisible by {p}: {}", analysis.lattice.get(i).describe()),
            false,
        ),
    }
}

fn is_cyclic_or_q8_odd(h: &Subgroup<'_>, lattice: &SubgroupLattice<'_>, allow_cyclic: bool) -> bool {
    (allow_cyclic && is_cyclic(h)) || q8_odd_cyclic_decomposition(h, lattice).is_some()
}

fn frobenius_prelude<'a, 'g>(
    analysis: &'a GroupAnalysis<'g>,
    p: u64,
    need_odd_p: bool,
    trace: &mut CaseTrace<'_>,
) -> Option<(&'a FrobeniusDecomposition<'g>, u64, u32)> {
    if need_odd_p {
        if !trace.check(format!("p = {p} > 2"), p > 2) {
            return None;
        }
    } else if !trace.check(format!("p = {p} = 2"), p == 2) {
        return None;
    }
    let Some(frob) = analysis.frobenius() else {
        trace.check("G is a Frobenius group", false);
        return None;
    };
    trace.check(
        format!(
            "Frobenius: kernel {}, complement {}",
            frob.kernel.describe(),
            frob.complement.describe()
        ),
        true,
    );
    let Some((q, r)) = frob.kernel_params else {
        trace.check("kernel is elementary abelian", false);
        return None;
    };
    trace.check(format!("kernel is elementary abelian Z_{q}^{r}"), true);
    Some((frob, q, r))
}

fn prime_kernel_case(analysis: &GroupAnalysis<'_>, p: u64, trace: &mut CaseTrace<'_>) -> bool {
    let Some((frob, q, r)) = frobenius_prelude(analysis, p, false, trace) else {
        return false;
    };
    trace.check(format!("kernel has odd prime order (q = {q}, r = {r})"), r == 1 && q % 2 == 1)
        && trace.check("complement is cyclic", is_cyclic(&frob.complement))
        && trace.check(
            format!("complement order {} is even", frob.complement.order()),
            frob.complement.order() % 2 == 0,
        )
}

fn cyclic_sylow_case(
    analysis: &GroupAnalysis<'_>,
    p: u64,
    min_rank: u32,
    allow_cyclic_h: bool,
    trace: &mut CaseTrace<'_>,
) -> bool {
    let Some((frob, q, r)) = frobenius_prelude(analysis, p, true, trace) else {
        return false;
    };
    if !trace.check(format!("q = {q} differs from p"), q != p) || !trace.check(format!("rank r = {r} >= {min_rank}"), r >= min_rank) {
        return false;
    }
    let lattice = &analysis.lattice;
    let m = &frob.complement;
    let sylow_order = p_part(lattice.group().order() as u64, p) as usize;
    let inside_m = lattice.within(m);
    let Some(sylow) = inside_m.iter().map(|&i| lattice.get(i)).find(|h| h.order() == sylow_order) else {
        return trace.check("complement contains a Sylow p-subgroup of G", false);
    };
    if !trace.check(format!("Sylow {p}-subgroup P ({}) is cyclic", sylow.describe()), is_cyclic(sylow)) {
        return false;
    }
    let h_order = m.order() / sylow.order();
    let h = inside_m.iter().map(|&i| lattice.get(i)).find(|h| {
        h.order() == h_order
            && !commutator_nontrivial(sylow, h).unwrap_or(true)
            && is_cyclic_or_q8_odd(h, lattice, allow_cyclic_h)
    });
    let shape = if allow_cyclic_h { "cyclic or Q8 x odd cyclic" } else { "Q8 x odd cyclic" };
    let Some(h) = h else {
        return trace.check(format!("complement = P x H with H {shape}"), false);
    };
    if !trace.check(format!("complement = P x H, H = {} is {shape}", h.describe()), true) {
        return false;
    }
    let reducible = lattice
        .within(sylow)
        .into_iter()
        .map(|i| lattice.get(i))
        .filter(|s| !s.is_trivial())
        .find(|s| !acts_irreducibly(s, &frob.kernel, lattice).unwrap_or(false));
    match reducible {
        None => trace.check("every nontrivial subgroup of P acts irreducibly on the kernel", true),
        Some(s) => trace.check(format!("{} acts reducibly on the kernel", s.describe()), false),
    }
}

fn non_nilpotent_complement_case(analysis: &GroupAnalysis<'_>, p: u64, trace: &mut CaseTrace<'_>) -> bool {
    let Some((frob, q, r)) = frobenius_prelude(analysis, p, true, trace) else {
        return false;
    };
    if !trace.check(format!("q = {q} differs from p"), q != p) || !trace.check(format!("rank r = {r} > 1"), r > 1) {
        return false;
    }
    let lattice = &analysis.lattice;
    let m = &frob.complement;
    let sylow_order = p_part(lattice.group().order() as u64, p);
    if !trace.check(format!("Sylow {p}-subgroup of G has order {p}"), sylow_order == p) {
        return false;
    }
    let inside_m = lattice.within(m);
    let Some(zp) = inside_m.iter().map(|&i| lattice.get(i)).find(|h| h.order() as u64 == p) else {
        return trace.check("complement contains Z_p", false);
    };
    if !trace.check("Z_p is normal in the complement", zp.is_normal_in(m)) {
        return false;
    }
    let h_order = m.order() / zp.order();
    let h = inside_m.iter().map(|&i| lattice.get(i)).find(|h| {
        h.order() == h_order && commutator_nontrivial(zp, h).unwrap_or(false) && is_cyclic_or_q8_odd(h, lattice, true)
    });
    let Some(h) = h else {
        return trace.check(
            "complement = Z_p x| H with H cyclic or Q8 x odd cyclic and [Z_p, H] != 1",
            false,
        );
    };
    trace.check(
        format!("complement = Z_p x| H, H = {} cyclic or Q8 x odd cyclic, [Z_p, H] != 1", h.describe()),
        true,
    ) && trace.check(
        "Z_p acts irreducibly on the kernel",
        acts_irreducibly(zp, &frob.kernel, lattice).unwrap_or(false),
    )
}

fn evaluate_case(analysis: &GroupAnalysis<'_>, p: u64, theorem: TheoremId, case: RhsCase, checks: &mut Vec<CaseCheck>) -> bool {
    let mut trace = CaseTrace { case, checks };
    match case {
        RhsCase::Subnormal => subnormal_case(analysis, p, theorem.filter().unrestricted(), &mut trace),
        RhsCase::PrimeKernel => prime_kernel_case(analysis, p, &mut trace),
        RhsCase::CyclicSylowComplement => cyclic_sylow_case(analysis, p, 1, true, &mut trace),
        RhsCase::Q8Complement => cyclic_sylow_case(analysis, p, 2, false, &mut trace),
        RhsCase::NonNilpotentComplement => non_nilpotent_complement_case(analysis, p, &mut trace),
    }
}

/// Tests the cases of `theorem` in order; the first match wins.
pub fn rhs_cases(analysis: &GroupAnalysis<'_>, p: u64, theorem: TheoremId) -> Result<RhsEvaluation> {
    analysis.check_prime(p)?;
    let mut checks = Vec::new();
    let case = theorem
        .cases()
        .iter()
        .copied()
        .find(|&c| evaluate_case(analysis, p, theorem, c, &mut checks));
    Ok(RhsEvaluation { case, checks })
}

pub fn rhs_theorem1(analysis: &GroupAnalysis<'_>, p: u64) -> Result<Option<RhsCase>> {
    Ok(rhs_cases(analysis, p, TheoremId::T1)?.case)
}

pub fn rhs_theorem2(analysis: &GroupAnalysis<'_>, p: u64) -> Result<Option<RhsCase>> {
    Ok(rhs_cases(analysis, p, TheoremId::T2)?.case)
}

pub fn rhs_theorem3(analysis: &GroupAnalysis<'_>, p: u64) -> Result<Option<RhsCase>> {
    Ok(rhs_cases(analysis, p, TheoremId::T3)?.case)
}

/// Verdict for one `(group, prime, theorem)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub group_name: String,
    pub group_order: usize,
    pub prime: u64,
    pub theorem: TheoremId,
    /// The quantified condition (the restricted one for T5–T7).
    pub lhs: bool,
    /// Matched structural case, for T1–T3 and C1.
    pub rhs_case: Option<RhsCase>,
    /// The other side: a case matched, or the unrestricted condition for T5–T7.
    pub rhs: bool,
    pub holds: bool,
    /// Condition true but no structural case matched.
    pub falsification_candidate: bool,
    pub witness: Option<String>,
}

impl TheoremReport {
    pub fn rhs_label(&self) -> Option<&'static str> {
        self.rhs_case.map(|c| c.label(self.theorem))
    }
}

fn report(analysis: &GroupAnalysis<'_>, p: u64, theorem: TheoremId) -> TheoremReport {
    let g = analysis.group();
    TheoremReport {
        group_name: g.name().to_string(),
        group_order: g.order(),
        prime: p,
        theorem,
        lhs: false,
        rhs_case: None,
        rhs: false,
        holds: false,
        falsification_candidate: false,
        witness: None,
    }
}

/// Condition ⟺ some structural case, for T1, T2, T3.
pub fn verify_biconditional(analysis: &GroupAnalysis<'_>, p: u64, theorem: TheoremId) -> Result<TheoremReport> {
    if !matches!(theorem, TheoremId::T1 | TheoremId::T2 | TheoremId::T3) {
        return verify(analysis, p, theorem);
    }
    let lhs = lhs_condition(analysis, p, theorem.filter())?;
    let rhs = rhs_cases(analysis, p, theorem)?;
    let mut r = report(analysis, p, theorem);
    r.lhs = lhs.holds;
    r.rhs_case = rhs.case;
    r.rhs = rhs.case.is_some();
    r.holds = r.lhs == r.rhs;
    if !r.holds {
        r.falsification_candidate = r.lhs;
        r.witness = Some(match lhs.witness {
            Some(i) => format!(
                "condition fails at {} but case {} matched",
                analysis.lattice.get(i).describe(),
                r.rhs_label().unwrap_or("?")
            ),
            None => "condition holds but no structural case matched".into(),
        });
    } else if let Some(i) = lhs.witness {
        r.witness = Some(analysis.lattice.get(i).describe());
    }
    Ok(r)
}

/// Restricted (self-centralizing) condition ⟺ unrestricted condition, for T5, T6, T7.
pub fn verify_equivalence(analysis: &GroupAnalysis<'_>, p: u64, theorem: TheoremId) -> Result<TheoremReport> {
    if !matches!(theorem, TheoremId::T5 | TheoremId::T6 | TheoremId::T7) {
        return verify(analysis, p, theorem);
    }
    let restricted = lhs_condition(analysis, p, theorem.filter())?;
    let full = lhs_condition(analysis, p, theorem.filter().unrestricted())?;
    let mut r = report(analysis, p, theorem);
    r.lhs = restricted.holds;
    r.rhs = full.holds;
    r.holds = restricted.holds == full.holds;
    let witness = if restricted.holds { full.witness } else { restricted.witness };
    r.witness = witness.map(|i| analysis.lattice.get(i).describe());
    Ok(r)
}

/// With `p` the smallest prime divisor: non-nilpotent condition ⟺
/// every non-nilpotent subgroup of order divisible by `p` is subnormal.
pub fn verify_corollary1(analysis: &GroupAnalysis<'_>) -> Result<TheoremReport> {
    let order = analysis.group().order();
    let Some(&p) = prime_divisors(order as u64).first() else {
        return Err(Error::TrivialGroup);
    };
    let lhs = lhs_condition(analysis, p, SubgroupFilter::NonNilpotent)?;
    let rhs = rhs_cases(analysis, p, TheoremId::C1)?;
    let mut r = report(analysis, p, TheoremId::C1);
    r.lhs = lhs.holds;
    r.rhs_case = rhs.case;
    r.rhs = rhs.case.is_some();
    r.holds = r.lhs == r.rhs;
    r.falsification_candidate = r.lhs && !r.rhs;
    r.witness = lhs.witness.map(|i| analysis.lattice.get(i).describe());
    Ok(r)
}

/// Dispatches on the theorem kind. `p` is ignored for C1.
pub fn verify(analysis: &GroupAnalysis<'_>, p: u64, theorem: TheoremId) -> Result<TheoremReport> {
    match theorem {
        TheoremId::T1 | TheoremId::T2 | TheoremId::T3 => verify_biconditional(analysis, p, theorem),
        TheoremId::T5 | TheoremId::T6 | TheoremId::T7 => verify_equivalence(analysis, p, theorem),
        TheoremId::C1 => verify_corollary1(analysis),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::all_subgroups;
    use crate::perm::Permutation;

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(degree, cycles).unwrap()
    }

    fn group(name: &str, gens: &[Permutation]) -> GroupTable {
        GroupTable::from_generators(gens, name).unwrap()
    }

    #[test]
    fn labels_roundtrip() {
        for t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
            for &c in t.cases() {
                assert_eq!(RhsCase::from_label(t, c.label(t)), Some(c));
            }
        }
        assert!("T4".parse::<TheoremId>().is_err());
    }

    #[test]
    fn s3_cases() {
        let g = group("S3", &[cyc(3, &[&[0, 1, 2]]), cyc(3, &[&[0, 1]])]);
        let a = GroupAnalysis::new(all_subgroups(&g).unwrap());
        assert_eq!(rhs_theorem1(&a, 2).unwrap(), Some(RhsCase::PrimeKernel));
        assert_eq!(rhs_theorem1(&a, 3).unwrap(), Some(RhsCase::Subnormal));
        assert_eq!(rhs_theorem2(&a, 2).unwrap(), Some(RhsCase::Subnormal));
        assert_eq!(rhs_theorem3(&a, 3).unwrap(), Some(RhsCase::Subnormal));
        let r = verify_biconditional(&a, 2, TheoremId::T1).unwrap();
        assert!(r.holds && r.lhs);
        assert_eq!(r.rhs_label(), Some("C2"));
        assert_eq!(
            lhs_condition(&a, 5, SubgroupFilter::All).unwrap_err(),
            Error::PrimeDoesNotDivide { p: 5, order: 6 }
        );
        assert!(rhs_theorem1(&a, 5).is_err());
    }

    #[test]
    fn s4_witness_is_sylow_two() {
        let g = group("S4", &[cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 1]])]);
        let a = GroupAnalysis::new(all_subgroups(&g).unwrap());
        let lhs = lhs_condition(&a, 2, SubgroupFilter::All).unwrap();
        assert!(!lhs.holds);
        assert_eq!(a.lattice().get(lhs.witness.unwrap()).order(), 8);
        let sc = lhs_condition(&a, 2, SubgroupFilter::SelfCentralizing).unwrap();
        assert_eq!(sc, lhs);
        let r = verify_biconditional(&a, 2, TheoremId::T1).unwrap();
        assert!(r.holds && !r.lhs && r.rhs_case.is_none());
        let r = verify_equivalence(&a, 2, TheoremId::T5).unwrap();
        assert!(r.holds && !r.lhs && !r.rhs);
    }

    #[test]
    fn a4_cases() {
        let g = group("A4", &[cyc(4, &[&[0, 1, 2]]), cyc(4, &[&[1, 2, 3]])]);
        let a = GroupAnalysis::new(all_subgroups(&g).unwrap());
        assert_eq!(rhs_theorem1(&a, 3).unwrap(), Some(RhsCase::CyclicSylowComplement));
        assert_eq!(rhs_theorem2(&a, 3).unwrap(), Some(RhsCase::Subnormal));
        assert_eq!(rhs_theorem3(&a, 3).unwrap(), Some(RhsCase::Subnormal));
        assert!(verify_equivalence(&a, 3, TheoremId::T7).unwrap().holds);
        let c1 = verify_corollary1(&a).unwrap();
        assert_eq!(c1.prime, 2);
        assert!(c1.holds);
    }

    #[test]
    fn trivial_group_has_no_corollary() {
        let g = GroupTable::trivial("1");
        let a = GroupAnalysis::new(all_subgroups(&g).unwrap());
        assert_eq!(verify_corollary1(&a).unwrap_err(), Error::TrivialGroup);
    }
}
