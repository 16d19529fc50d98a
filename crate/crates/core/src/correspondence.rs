//! Verified constructions around `S/P_H`: the correspondence between
//! unitary subsemigroups over `H` and subgroups of `S/P_H`, the
//! intersection isomorphism and the Zassenhaus isomorphism.
//!
//! Each operation computes both sides independently and returns an
//! isomorphism witness checked by a full table scan. A failed check is an
//! [`Error::TheoremCheckFailed`] carrying the offending sets.

use crate::congruence::{
    principal_congruence, principal_congruence_within, quotient, restrict, saturates, QuotientSemigroup,
};
use crate::elemset::ElemSet;
use crate::error::{Error, Precondition, Result};
use crate::group;
use crate::iso::{is_isomorphic, IsoWitness};
use crate::semigroup::Semigroup;
use crate::subset::{
    enumerate_unitary_subsemigroups_over, is_ru_subsemigroup, is_ru_subsemigroup_within, is_unitary_subsemigroup,
    reflexivity_violation,
};

/// `(S/P_H)/(N/P_H)` next to `S/P_N`, with the isomorphism between them.
#[derive(Debug, Clone)]
pub struct ThirdIso {
    pub iterated: QuotientSemigroup,
    pub direct: QuotientSemigroup,
    pub witness: IsoWitness,
}

#[derive(Debug, Clone)]
pub struct CorrespondenceEntry {
    pub n: ElemSet,
    /// `N/P_H` as a subset of the quotient.
    pub image: ElemSet,
    pub reflexive: bool,
    pub normal: bool,
    pub third_iso: Option<ThirdIso>,
}

#[derive(Debug, Clone)]
pub struct CorrespondenceReport {
    pub h: ElemSet,
    pub quotient: QuotientSemigroup,
    pub identity_class: usize,
    pub entries: Vec<CorrespondenceEntry>,
    /// Number of subgroups of `S/P_H`; equals `entries.len()`.
    pub subgroup_count: usize,
}

/// Checks the correspondence `N ↦ N/P_H` for every unitary `N ⊇ H`:
/// saturation, subgroup image, reflexive ⇔ normal, `P_H(N) = P_H|N`, the
/// isomorphism `(S/P_H)/(N/P_H) ≅ S/P_N`, and bijectivity onto the
/// subgroups of `S/P_H`.
pub fn correspondence_check(s: &Semigroup, h: &ElemSet) -> Result<CorrespondenceReport> {
    const THM: &str = "correspondence";
    s.check_set(h)?;
    if h.is_empty() {
        return Err(Error::EmptySubset);
    }
    if !s.is_left_simple() {
        return Err(Error::precondition(Precondition::NotLeftSimple));
    }
    if !is_ru_subsemigroup(s, h) {
        return Err(Error::precondition(Precondition::HNotReflexiveUnitary));
    }
    let pc = principal_congruence(s, h)?;
    let q = quotient(s, &pc.congruence)?;
    let identity_class = pc
        .h_class
        .filter(|&c| crate::congruence::is_group_with_identity(&q, c))
        .ok_or_else(|| Error::theorem(THM, format!("S/P_H is not a group with identity H={h}")))?;
    let g = &q.quotient;

    let mut entries = Vec::new();
    for n in enumerate_unitary_subsemigroups_over(s, h)? {
        if !saturates(&pc.congruence, &n)? {
            return Err(Error::theorem(THM, format!("N={n} is not saturated by P_H, H={h}")));
        }
        let image = q.project_set(&n);
        if !group::is_subgroup(g, identity_class, &image) {
            return Err(Error::theorem(THM, format!("image of N={n} is not a subgroup")));
        }
        let restricted = restrict(s, &pc.congruence, &n)?;
        let (_, within) = principal_congruence_within(s, &n, h)?;
        if restricted.congruence != within.congruence {
            return Err(Error::theorem(THM, format!("P_H(N) differs from P_H|N for N={n}, H={h}")));
        }
        let reflexive = reflexivity_violation(s, &s.full_set(), &n).is_none();
        let normal = group::is_normal_subgroup(g, identity_class, &image);
        if reflexive != normal {
            return Err(Error::theorem(THM, format!("N={n}: reflexive={reflexive} but normality of image={normal}")));
        }
        let third_iso = if reflexive {
            let inner = principal_congruence(g, &image)?;
            let iterated = quotient(g, &inner.congruence)?;
            let direct = quotient(s, &principal_congruence(s, &n)?.congruence)?;
            let witness = is_isomorphic(&iterated.quotient, &direct.quotient)
                .ok_or_else(|| Error::theorem(THM, format!("(S/P_H)/(N/P_H) is not isomorphic to S/P_N for N={n}")))?;
            Some(ThirdIso { iterated, direct, witness })
        } else {
            None
        };
        entries.push(CorrespondenceEntry { n, image, reflexive, normal, third_iso });
    }

    // Injective: distinct N give distinct images.
    let mut images: Vec<ElemSet> = entries.iter().map(|e| e.image).collect();
    images.sort();
    images.dedup();
    if images.len() != entries.len() {
        return Err(Error::theorem(THM, "two unitary subsemigroups share an image"));
    }
    // Surjective: every subgroup pulls back to one of the N.
    let subgroups = group::subgroups(g)?;
    for k in &subgroups {
        let pre = q.preimage(k);
        if !entries.iter().any(|e| e.n == pre) {
            return Err(Error::theorem(
                THM,
                format!("subgroup {k} of S/P_H pulls back to {pre}, not a unitary N over H"),
            ));
        }
    }
    if subgroups.len() != entries.len() {
        return Err(Error::theorem(THM, "subgroup count differs from unitary count"));
    }
    Ok(CorrespondenceReport { h: *h, quotient: q, identity_class, entries, subgroup_count: subgroups.len() })
}

/// Both sides of `⟨H, N⟩/P_H ≅ N/P_{H∩N}`.
#[derive(Debug, Clone)]
pub struct IntersectionIso {
    pub join: ElemSet,
    pub intersection: ElemSet,
    /// `⟨H, N⟩/P_H`, with `P_H` taken inside `⟨H, N⟩`.
    pub join_quotient: QuotientSemigroup,
    pub n_quotient: QuotientSemigroup,
    pub witness: IsoWitness,
}

pub fn intersection_iso(s: &Semigroup, h: &ElemSet, n: &ElemSet) -> Result<IntersectionIso> {
    const THM: &str = "intersection isomorphism";
    s.check_set(h)?;
    s.check_set(n)?;
    if h.is_empty() || n.is_empty() {
        return Err(Error::EmptySubset);
    }
    if !is_ru_subsemigroup(s, h) {
        return Err(Error::precondition(Precondition::HNotReflexiveUnitary));
    }
    if !s.is_closed(n) {
        return Err(Error::precondition(Precondition::NotSubsemigroup("N")));
    }
    let hn = h.intersection(n)?;
    if hn.is_empty() {
        return Err(Error::precondition(Precondition::EmptyIntersection));
    }
    if !is_ru_subsemigroup_within(s, n, &hn) {
        return Err(Error::theorem(THM, format!("H∩N={hn} is not reflexive unitary in N={n}")));
    }
    let join = s.closure(&h.union(n)?)?;
    let (j, pj) = principal_congruence_within(s, &join, h)?;
    let join_quotient = quotient(&j.semigroup, &pj.congruence)?;
    let (ni, pn) = principal_congruence_within(s, n, &hn)?;
    let n_quotient = quotient(&ni.semigroup, &pn.congruence)?;
    let witness = is_isomorphic(&join_quotient.quotient, &n_quotient.quotient)
        .ok_or_else(|| Error::theorem(THM, format!("<H,N>/P_H not isomorphic to N/P_(H∩N) for H={h}, N={n}")))?;
    Ok(IntersectionIso { join, intersection: hn, join_quotient, n_quotient, witness })
}

/// All intermediate sets of the Zassenhaus construction and the isomorphism
/// `N(A∩B)/P_{N(A∩M)} ≅ M(A∩B)/P_{M(B∩N)}`.
#[derive(Debug, Clone)]
pub struct ZassenhausReport {
    pub a_cap_b: ElemSet,
    pub a_cap_m: ElemSet,
    pub b_cap_n: ElemSet,
    /// `N(A∩B)`
    pub n_upper: ElemSet,
    /// `N(A∩M)`
    pub n_lower: ElemSet,
    /// `M(A∩B)`
    pub m_upper: ElemSet,
    /// `M(B∩N)`
    pub m_lower: ElemSet,
    pub n_quotient: QuotientSemigroup,
    pub m_quotient: QuotientSemigroup,
    pub witness: IsoWitness,
}

pub fn zassenhaus(s: &Semigroup, a: &ElemSet, b: &ElemSet, n: &ElemSet, m: &ElemSet) -> Result<ZassenhausReport> {
    const THM: &str = "Zassenhaus";
    for x in [a, b, n, m] {
        s.check_set(x)?;
        if x.is_empty() {
            return Err(Error::EmptySubset);
        }
    }
    if !s.is_left_simple() {
        return Err(Error::precondition(Precondition::NotLeftSimple));
    }
    if !is_unitary_subsemigroup(s, a) {
        return Err(Error::precondition(Precondition::NotUnitary("A")));
    }
    if !is_unitary_subsemigroup(s, b) {
        return Err(Error::precondition(Precondition::NotUnitary("B")));
    }
    let a_cap_b = a.intersection(b)?;
    if a_cap_b.is_empty() {
        return Err(Error::precondition(Precondition::EmptyIntersection));
    }
    if !is_ru_subsemigroup_within(s, a, n) {
        return Err(Error::precondition(Precondition::NotReflexiveUnitary("N in A")));
    }
    if !is_ru_subsemigroup_within(s, b, m) {
        return Err(Error::precondition(Precondition::NotReflexiveUnitary("M in B")));
    }
    let a_cap_m = a.intersection(m)?;
    let b_cap_n = b.intersection(n)?;
    if a_cap_m.is_empty() || b_cap_n.is_empty() {
        return Err(Error::theorem(THM, format!("A∩M={a_cap_m} or B∩N={b_cap_n} is empty")));
    }
    let n_upper = s.set_product(n, &a_cap_b)?;
    let n_lower = s.set_product(n, &a_cap_m)?;
    let m_upper = s.set_product(m, &a_cap_b)?;
    let m_lower = s.set_product(m, &b_cap_n)?;

    let side = |upper: &ElemSet, lower: &ElemSet, name: &str| -> Result<QuotientSemigroup> {
        if !s.is_closed(upper) {
            return Err(Error::theorem(THM, format!("{name} upper product {upper} is not closed")));
        }
        if !is_ru_subsemigroup_within(s, upper, lower) {
            return Err(Error::theorem(THM, format!("{name}: {lower} is not reflexive unitary in {upper}")));
        }
        let (ind, pc) = principal_congruence_within(s, upper, lower)?;
        let q = quotient(&ind.semigroup, &pc.congruence)?;
        let is_group = pc.h_class.is_some_and(|c| crate::congruence::is_group_with_identity(&q, c));
        if !is_group {
            return Err(Error::theorem(THM, format!("{name} quotient is not a group")));
        }
        Ok(q)
    };
    let n_quotient = side(&n_upper, &n_lower, "N-side")?;
    let m_quotient = side(&m_upper, &m_lower, "M-side")?;
    let witness = is_isomorphic(&n_quotient.quotient, &m_quotient.quotient).ok_or_else(|| {
        Error::theorem(
            THM,
            format!("quotients of orders {} and {} are not isomorphic", n_quotient.order(), m_quotient.order()),
        )
    })?;
    Ok(ZassenhausReport {
        a_cap_b,
        a_cap_m,
        b_cap_n,
        n_upper,
        n_lower,
        m_upper,
        m_lower,
        n_quotient,
        m_quotient,
        witness,
    })
}
