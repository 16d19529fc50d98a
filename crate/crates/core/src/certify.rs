//! Runs every structural check over a corpus of left simple semigroups and
//! collects a pass/fail matrix.
//!
//! Each `check_*` function runs one family of checks exhaustively on one
//! semigroup and returns the number of cases it verified, or the first
//! failure as an error.

use serde::Serialize;

use crate::congruence::{enumerate_congruences, is_group_with_identity, principal_congruence, quotient};
use crate::correspondence::{correspondence_check, intersection_iso, zassenhaus};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::factory::{build_corpus, left_zero, CorpusSpec};
use crate::group;
use crate::iso::is_isomorphic;
use crate::semigroup::Semigroup;
use crate::series::{enumerate_normal_series, jordan_holder_check, schreier_refine, series_isomorphic};
use crate::subset::{
    enumerate_right_unitary_subsemigroups, enumerate_ru_subsemigroups, enumerate_ru_within, enumerate_subsemigroups,
    enumerate_unitary_subsemigroups, is_ru_subsemigroup, join_hn,
};

/// Right unitary subsemigroups of a left simple semigroup are left simple.
pub fn check_right_unitary_left_simple(s: &Semigroup) -> Result<usize> {
    let subs = enumerate_right_unitary_subsemigroups(s)?;
    for n in &subs {
        if !s.is_left_simple_within(n) || !s.induced(n)?.semigroup.is_left_simple() {
            return Err(Error::theorem(
                "right unitary => left simple",
                format!("N={} is not left simple", s.format_set(n)),
            ));
        }
    }
    Ok(subs.len())
}

/// `S/P_H` is a group with identity `H` for every reflexive unitary `H`;
/// with `converse`, also every congruence with a group quotient is
/// `P_E` for its identity class `E`, and `E` is reflexive unitary.
pub fn check_group_congruence(s: &Semigroup, converse: bool) -> Result<usize> {
    const THM: &str = "group congruence";
    let mut cases = 0;
    for h in enumerate_ru_subsemigroups(s)? {
        let pc = principal_congruence(s, &h)?;
        let q = quotient(s, &pc.congruence)?;
        let ok = pc.h_class.is_some_and(|c| is_group_with_identity(&q, c));
        if !ok {
            return Err(Error::theorem(THM, format!("S/P_H is not a group with identity H={}", s.format_set(&h))));
        }
        if !pc.w_set.is_empty() {
            return Err(Error::theorem(THM, format!("W^H nonempty for H={}", s.format_set(&h))));
        }
        cases += 1;
    }
    if converse {
        for c in enumerate_congruences(s)? {
            let q = quotient(s, &c)?;
            let Some(e) = group::group_identity(&q.quotient) else { continue };
            let class = q.classes[e];
            if !is_ru_subsemigroup(s, &class) {
                return Err(Error::theorem(
                    THM,
                    format!("identity class {} is not reflexive unitary", s.format_set(&class)),
                ));
            }
            if principal_congruence(s, &class)?.congruence != c {
                return Err(Error::theorem(THM, format!("group congruence differs from P_{}", s.format_set(&class))));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

pub fn check_correspondence(s: &Semigroup) -> Result<usize> {
    let mut cases = 0;
    for h in enumerate_ru_subsemigroups(s)? {
        cases += correspondence_check(s, &h)?.entries.len();
    }
    Ok(cases)
}

/// `⟨H, N⟩/P_H ≅ N/P_{H∩N}` for every reflexive unitary `H` and every
/// subsemigroup `N` meeting it.
pub fn check_intersection(s: &Semigroup) -> Result<usize> {
    let ru = enumerate_ru_subsemigroups(s)?;
    let subs = enumerate_subsemigroups(s)?;
    let mut cases = 0;
    for h in &ru {
        for n in &subs {
            if h.intersection(n)?.is_empty() {
                continue;
            }
            intersection_iso(s, h, n)?;
            cases += 1;
        }
    }
    Ok(cases)
}

/// `HN = ⟨H, N⟩` for reflexive unitary `H` and unitary `N`.
pub fn check_join(s: &Semigroup) -> Result<usize> {
    let ru = enumerate_ru_subsemigroups(s)?;
    let unitary = enumerate_unitary_subsemigroups(s)?;
    let mut cases = 0;
    for h in &ru {
        for n in &unitary {
            join_hn(s, h, n)?;
            cases += 1;
        }
    }
    Ok(cases)
}

/// Zassenhaus isomorphism for every `A, B` unitary with `A ∩ B ≠ ∅`, `N`
/// reflexive unitary in `A` and `M` reflexive unitary in `B`.
pub fn check_zassenhaus(s: &Semigroup) -> Result<usize> {
    let unitary = enumerate_unitary_subsemigroups(s)?;
    let ru_in: Vec<Vec<ElemSet>> = unitary.iter().map(|a| enumerate_ru_within(s, a)).collect::<Result<_>>()?;
    let mut cases = 0;
    for (ia, a) in unitary.iter().enumerate() {
        for (ib, b) in unitary.iter().enumerate() {
            if a.intersection(b)?.is_empty() {
                continue;
            }
            for n in &ru_in[ia] {
                for m in &ru_in[ib] {
                    zassenhaus(s, a, b, n, m)?;
                    cases += 1;
                }
            }
        }
    }
    Ok(cases)
}

/// Up to `pair_cap` pairs of strict normal series, taken in the order
/// `(0,1), (0,2), (1,2), (0,3), …`; each pair must have isomorphic
/// refinements that validate and refine their inputs.
pub fn check_schreier(s: &Semigroup, pair_cap: usize) -> Result<usize> {
    const THM: &str = "Schreier refinement";
    // Enough series for `pair_cap` pairs in the order above.
    let mut needed = 1;
    while needed * (needed - 1) / 2 < pair_cap {
        needed += 1;
    }
    let series = enumerate_normal_series(s, needed)?;
    let mut cases = 0;
    'outer: for j in 1..series.len() {
        for i in 0..j {
            if cases >= pair_cap {
                break 'outer;
            }
            let r = schreier_refine(&series[i], &series[j])?;
            if series_isomorphic(&r.first, &r.second)?.is_none() {
                return Err(Error::theorem(THM, format!("refinements of pair ({i},{j}) are not isomorphic")));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

pub fn check_jordan_holder(s: &Semigroup) -> Result<usize> {
    Ok(jordan_holder_check(s)?.series.len())
}

/// No proper reflexive unitary subsemigroup exactly when `S` is left zero.
pub fn check_closing_remark(s: &Semigroup) -> Result<usize> {
    let ru = enumerate_ru_subsemigroups(s)?;
    let only_whole = ru == [s.full_set()];
    let left_zero = is_isomorphic(s, &left_zero(s.order())?).is_some();
    if only_whole != left_zero {
        return Err(Error::theorem(
            "left zero minimality",
            format!("only trivial reflexive unitary subsemigroup: {only_whole}, left zero: {left_zero}"),
        ));
    }
    Ok(1)
}

/// Which checks run on members of which order.
#[derive(Debug, Clone)]
pub struct CertifyOptions {
    pub corpus: CorpusSpec,
    /// Order limit for the right-unitary sweep, intersection and Zassenhaus checks.
    pub small_order: usize,
    /// Order limit for exhaustive congruence enumeration.
    pub congruence_order: usize,
    pub schreier_pair_cap: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { corpus: CorpusSpec::default(), small_order: 12, congruence_order: 8, schreier_pair_cap: 200 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub check: &'static str,
    pub status: Status,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MemberReport {
    pub name: String,
    pub order: usize,
    pub checks: Vec<CheckOutcome>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertifyReport {
    pub members: Vec<MemberReport>,
}

impl CertifyReport {
    pub fn failures(&self) -> impl Iterator<Item = (&MemberReport, &CheckOutcome)> {
        self.members.iter().flat_map(|m| m.checks.iter().map(move |c| (m, c))).filter(|(_, c)| c.status == Status::Fail)
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

pub const CHECK_NAMES: [&str; 10] = [
    "left-simple",
    "right-unitary-left-simple",
    "group-congruence",
    "correspondence",
    "intersection-iso",
    "join-hn",
    "zassenhaus",
    "schreier",
    "jordan-holder",
    "left-zero-minimality",
];

fn run(check: &'static str, enabled: bool, f: impl FnOnce() -> Result<usize>) -> CheckOutcome {
    if !enabled {
        return CheckOutcome { check, status: Status::Skipped, cases: 0, failure: None };
    }
    match f() {
        Ok(cases) => CheckOutcome { check, status: Status::Pass, cases, failure: None },
        Err(e) => CheckOutcome { check, status: Status::Fail, cases: 0, failure: Some(e.to_string()) },
    }
}

pub fn certify_member(name: &str, s: &Semigroup, opts: &CertifyOptions) -> MemberReport {
    let n = s.order();
    let small = n <= opts.small_order;
    let left_simple = s.is_left_simple();
    let checks = vec![
        run(CHECK_NAMES[0], true, || {
            if left_simple {
                Ok(1)
            } else {
                Err(Error::precondition(crate::error::Precondition::NotLeftSimple))
            }
        }),
        run(CHECK_NAMES[1], small, || check_right_unitary_left_simple(s)),
        run(CHECK_NAMES[2], true, || check_group_congruence(s, n <= opts.congruence_order)),
        run(CHECK_NAMES[3], true, || check_correspondence(s)),
        run(CHECK_NAMES[4], small, || check_intersection(s)),
        run(CHECK_NAMES[5], true, || check_join(s)),
        run(CHECK_NAMES[6], small, || check_zassenhaus(s)),
        run(CHECK_NAMES[7], true, || check_schreier(s, opts.schreier_pair_cap)),
        run(CHECK_NAMES[8], true, || check_jordan_holder(s)),
        run(CHECK_NAMES[9], true, || check_closing_remark(s)),
    ];
    MemberReport { name: name.to_string(), order: n, checks }
}

/// Builds the corpus and certifies every member; members are reported in
/// name order. Members are processed on scoped threads.
pub fn certify(opts: &CertifyOptions) -> Result<CertifyReport> {
    let mut corpus = build_corpus(&opts.corpus)?;
    corpus.sort_by(|a, b| a.name.cmp(&b.name));
    let workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(corpus.len().max(1));
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut slots: Vec<Option<MemberReport>> = vec![None; corpus.len()];
    let results = std::sync::Mutex::new(&mut slots);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                let Some(member) = corpus.get(i) else { break };
                let report = certify_member(&member.name, &member.semigroup, opts);
                results.lock().unwrap()[i] = Some(report);
            });
        }
    });
    Ok(CertifyReport { members: slots.into_iter().map(|r| r.expect("every member certified")).collect() })
}
