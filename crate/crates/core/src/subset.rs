//! Reflexive and unitary subsets, the `HN` join, and exhaustive sweeps for
//! (reflexive) unitary subsemigroups.
//!
//! Every predicate comes in two flavours: the plain one quantifies over the
//! whole semigroup, the `_within` one over an ambient subsemigroup `T`. The
//! latter is what "unitary in `T`" means for a subset of `T`.
//!
//! Witnesses are the lexicographically first violating pair `(a, b)`.

use crate::elemset::{ascending_submasks, ElemSet};
use crate::error::{Error, Precondition, Result};
use crate::semigroup::{check_order_bound, Semigroup};

/// A violating pair `(a, b)` for one of the definitions.
pub type Pair = (usize, usize);

/// Outcome of a predicate together with its first counterexample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Pair>,
}

impl Verdict {
    fn from_violation(v: Option<Pair>) -> Self {
        Verdict { holds: v.is_none(), witness: v }
    }
}

fn check_nonempty(s: &Semigroup, h: &ElemSet) -> Result<()> {
    s.check_set(h)?;
    if h.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(())
}

/// `a, b ∈ H` with `ab ∉ H`.
pub fn closure_violation(s: &Semigroup, h: &ElemSet) -> Option<Pair> {
    for a in h {
        let row = s.row(a);
        for b in h {
            if !h.contains(row[b]) {
                return Some((a, b));
            }
        }
    }
    None
}

/// `a, b ∈ T` with `ab ∈ H` but `ba ∉ H`.
pub fn reflexivity_violation(s: &Semigroup, t: &ElemSet, h: &ElemSet) -> Option<Pair> {
    for a in t {
        for b in t {
            if h.contains(s.mul(a, b)) && !h.contains(s.mul(b, a)) {
                return Some((a, b));
            }
        }
    }
    None
}

/// `a ∈ U`, `b ∈ T \ U` with `ab ∈ U`.
pub fn left_unitary_violation(s: &Semigroup, t: &ElemSet, u: &ElemSet) -> Option<Pair> {
    for a in u {
        let row = s.row(a);
        for b in t {
            if !u.contains(b) && u.contains(row[b]) {
                return Some((a, b));
            }
        }
    }
    None
}

/// `a ∈ T \ U`, `b ∈ U` with `ab ∈ U`.
pub fn right_unitary_violation(s: &Semigroup, t: &ElemSet, u: &ElemSet) -> Option<Pair> {
    for a in t {
        if u.contains(a) {
            continue;
        }
        let row = s.row(a);
        for b in u {
            if u.contains(row[b]) {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn is_reflexive(s: &Semigroup, h: &ElemSet) -> Result<Verdict> {
    is_reflexive_within(s, &s.full_set(), h)
}

pub fn is_reflexive_within(s: &Semigroup, t: &ElemSet, h: &ElemSet) -> Result<Verdict> {
    check_nonempty(s, h)?;
    s.check_set(t)?;
    Ok(Verdict::from_violation(reflexivity_violation(s, t, h)))
}

pub fn is_left_unitary(s: &Semigroup, u: &ElemSet) -> Result<Verdict> {
    is_left_unitary_within(s, &s.full_set(), u)
}

pub fn is_left_unitary_within(s: &Semigroup, t: &ElemSet, u: &ElemSet) -> Result<Verdict> {
    check_nonempty(s, u)?;
    s.check_set(t)?;
    Ok(Verdict::from_violation(left_unitary_violation(s, t, u)))
}

pub fn is_right_unitary(s: &Semigroup, u: &ElemSet) -> Result<Verdict> {
    is_right_unitary_within(s, &s.full_set(), u)
}

pub fn is_right_unitary_within(s: &Semigroup, t: &ElemSet, u: &ElemSet) -> Result<Verdict> {
    check_nonempty(s, u)?;
    s.check_set(t)?;
    Ok(Verdict::from_violation(right_unitary_violation(s, t, u)))
}

pub fn is_unitary(s: &Semigroup, u: &ElemSet) -> Result<Verdict> {
    is_unitary_within(s, &s.full_set(), u)
}

pub fn is_unitary_within(s: &Semigroup, t: &ElemSet, u: &ElemSet) -> Result<Verdict> {
    check_nonempty(s, u)?;
    s.check_set(t)?;
    Ok(Verdict::from_violation(left_unitary_violation(s, t, u).or_else(|| right_unitary_violation(s, t, u))))
}

/// Subsemigroup of `T` that is unitary in `T`.
pub(crate) fn is_unitary_subsemigroup_within(s: &Semigroup, t: &ElemSet, u: &ElemSet) -> bool {
    !u.is_empty()
        && u.is_subset(t)
        && closure_violation(s, u).is_none()
        && left_unitary_violation(s, t, u).is_none()
        && right_unitary_violation(s, t, u).is_none()
}

/// Subsemigroup of `T` that is reflexive and unitary in `T`.
pub fn is_ru_subsemigroup_within(s: &Semigroup, t: &ElemSet, h: &ElemSet) -> bool {
    is_unitary_subsemigroup_within(s, t, h) && reflexivity_violation(s, t, h).is_none()
}

pub fn is_ru_subsemigroup(s: &Semigroup, h: &ElemSet) -> bool {
    is_ru_subsemigroup_within(s, &s.full_set(), h)
}

pub fn is_unitary_subsemigroup(s: &Semigroup, h: &ElemSet) -> bool {
    is_unitary_subsemigroup_within(s, &s.full_set(), h)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SubsetWitnesses {
    pub subsemigroup: Option<Pair>,
    pub reflexive: Option<Pair>,
    pub left_unitary: Option<Pair>,
    pub right_unitary: Option<Pair>,
}

/// All structural flags of a subset, each false flag with its witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetReport {
    pub subject: ElemSet,
    pub is_subsemigroup: bool,
    pub is_reflexive: bool,
    pub is_left_unitary: bool,
    pub is_right_unitary: bool,
    pub is_unitary: bool,
    pub witnesses: SubsetWitnesses,
}

impl SubsetReport {
    pub fn is_reflexive_unitary_subsemigroup(&self) -> bool {
        self.is_subsemigroup && self.is_reflexive && self.is_unitary
    }
}

pub fn subset_report(s: &Semigroup, h: &ElemSet) -> Result<SubsetReport> {
    check_nonempty(s, h)?;
    let t = s.full_set();
    let witnesses = SubsetWitnesses {
        subsemigroup: closure_violation(s, h),
        reflexive: reflexivity_violation(s, &t, h),
        left_unitary: left_unitary_violation(s, &t, h),
        right_unitary: right_unitary_violation(s, &t, h),
    };
    Ok(SubsetReport {
        subject: *h,
        is_subsemigroup: witnesses.subsemigroup.is_none(),
        is_reflexive: witnesses.reflexive.is_none(),
        is_left_unitary: witnesses.left_unitary.is_none(),
        is_right_unitary: witnesses.right_unitary.is_none(),
        is_unitary: witnesses.left_unitary.is_none() && witnesses.right_unitary.is_none(),
        witnesses,
    })
}

/// The product `HN` for `H` reflexive unitary and `N` unitary in a left
/// simple `S`, after checking that it is the unitary subsemigroup `⟨H, N⟩`,
/// that `H ∩ N ≠ ∅`, and, when `N` is reflexive too, that `HN = NH` is
/// reflexive.
pub fn join_hn(s: &Semigroup, h: &ElemSet, n: &ElemSet) -> Result<ElemSet> {
    check_nonempty(s, h)?;
    check_nonempty(s, n)?;
    if !s.is_left_simple() {
        return Err(Error::precondition(Precondition::NotLeftSimple));
    }
    if !is_ru_subsemigroup(s, h) {
        return Err(Error::precondition(Precondition::HNotReflexiveUnitary));
    }
    if !is_unitary_subsemigroup(s, n) {
        return Err(Error::precondition(Precondition::NNotUnitary));
    }
    const THM: &str = "join HN";
    if h.intersection(n)?.is_empty() {
        return Err(Error::theorem(THM, format!("H ∩ N is empty for H={h}, N={n}")));
    }
    let hn = s.set_product(h, n)?;
    let generated = s.closure(&h.union(n)?)?;
    if hn != generated {
        return Err(Error::theorem(THM, format!("HN={hn} differs from <H,N>={generated}")));
    }
    if let Some((a, b)) =
        left_unitary_violation(s, &s.full_set(), &hn).or_else(|| right_unitary_violation(s, &s.full_set(), &hn))
    {
        return Err(Error::theorem(THM, format!("HN={hn} is not unitary, witness ({a},{b})")));
    }
    if reflexivity_violation(s, &s.full_set(), n).is_none() {
        let nh = s.set_product(n, h)?;
        if nh != hn {
            return Err(Error::theorem(THM, format!("HN={hn} differs from NH={nh}")));
        }
        if let Some((a, b)) = reflexivity_violation(s, &s.full_set(), &hn) {
            return Err(Error::theorem(THM, format!("HN={hn} is not reflexive, witness ({a},{b})")));
        }
    }
    Ok(hn)
}

/// All nonempty subsets of `T` passing `keep`, ascending bitmask order.
fn sweep_within(s: &Semigroup, t: &ElemSet, keep: impl Fn(&ElemSet) -> bool) -> Result<Vec<ElemSet>> {
    s.check_set(t)?;
    check_order_bound(t.len())?;
    let n = s.order();
    Ok(ascending_submasks(t.mask()).map(|m| ElemSet::from_mask_unchecked(n, m)).filter(|x| keep(x)).collect())
}

/// Every subsemigroup of `S`, ascending bitmask order.
pub fn enumerate_subsemigroups(s: &Semigroup) -> Result<Vec<ElemSet>> {
    sweep_within(s, &s.full_set(), |x| closure_violation(s, x).is_none())
}

/// Every right unitary subsemigroup of `S`.
pub fn enumerate_right_unitary_subsemigroups(s: &Semigroup) -> Result<Vec<ElemSet>> {
    let t = s.full_set();
    sweep_within(s, &t, |x| closure_violation(s, x).is_none() && right_unitary_violation(s, &t, x).is_none())
}

/// Every unitary subsemigroup of `S`.
pub fn enumerate_unitary_subsemigroups(s: &Semigroup) -> Result<Vec<ElemSet>> {
    let t = s.full_set();
    sweep_within(s, &t, |x| is_unitary_subsemigroup_within(s, &t, x))
}

/// Every reflexive unitary subsemigroup of `S` (always including `S`).
pub fn enumerate_ru_subsemigroups(s: &Semigroup) -> Result<Vec<ElemSet>> {
    enumerate_ru_within(s, &s.full_set())
}

/// Reflexive unitary subsemigroups of the subsemigroup `T`, scans within `T`.
pub fn enumerate_ru_within(s: &Semigroup, t: &ElemSet) -> Result<Vec<ElemSet>> {
    sweep_within(s, t, |x| is_ru_subsemigroup_within(s, t, x))
}

/// Unitary subsemigroups `N` with `H ⊆ N ⊆ S`, for `H` reflexive unitary in
/// a left simple `S`.
pub fn enumerate_unitary_subsemigroups_over(s: &Semigroup, h: &ElemSet) -> Result<Vec<ElemSet>> {
    check_nonempty(s, h)?;
    if !s.is_left_simple() {
        return Err(Error::precondition(Precondition::NotLeftSimple));
    }
    if !is_ru_subsemigroup(s, h) {
        return Err(Error::precondition(Precondition::HNotReflexiveUnitary));
    }
    check_order_bound(s.order() - h.len())?;
    let t = s.full_set();
    let rest = h.complement().mask();
    let mut out = vec![*h];
    out.extend(
        ascending_submasks(rest)
            .map(|m| ElemSet::from_mask_unchecked(s.order(), m | h.mask()))
            .filter(|x| is_unitary_subsemigroup_within(s, &t, x)),
    );
    out.sort();
    Ok(out)
}
