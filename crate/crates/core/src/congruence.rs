//! Congruences, principal congruences `P_H` and quotient semigroups.
//!
//! `P_H` identifies `a` and `b` when their contexts `{(s, t) : sat ∈ H}`
//! coincide. Contexts are materialised as `n²`-bit fingerprints and grouped,
//! which is `O(n³)` and exactly the definition.

use std::collections::HashMap;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::group;
use crate::semigroup::{Induced, Semigroup};

/// Largest order accepted by [`enumerate_congruences`].
pub const CONGRUENCE_ENUMERATION_BOUND: usize = 8;

/// The context `H...a`: all pairs `(s, t)` with `s·a·t ∈ H`, as an `n²` bitmap.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContextRelation {
    base: usize,
    bits: Vec<u64>,
}

impl ContextRelation {
    fn empty(base: usize) -> Self {
        ContextRelation { base, bits: vec![0; (base * base).div_ceil(64)] }
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn contains(&self, s: usize, t: usize) -> bool {
        let i = s * self.base + t;
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.base;
        (0..n * n).filter(|&i| self.contains(i / n, i % n)).map(|i| (i / n, i % n)).collect()
    }
}

fn context_unchecked(s: &Semigroup, h: &ElemSet, a: usize) -> ContextRelation {
    let n = s.order();
    let mut rel = ContextRelation::empty(n);
    for x in 0..n {
        let xa = s.mul(x, a);
        let row = s.row(xa);
        for (y, &z) in row.iter().enumerate() {
            if h.contains(z) {
                let i = x * n + y;
                rel.bits[i / 64] |= 1 << (i % 64);
            }
        }
    }
    rel
}

pub fn context(s: &Semigroup, h: &ElemSet, a: usize) -> Result<ContextRelation> {
    s.check_set(h)?;
    if h.is_empty() {
        return Err(Error::EmptySubset);
    }
    if a >= s.order() {
        return Err(Error::ElementOutOfRange { element: a, order: s.order() });
    }
    Ok(context_unchecked(s, h, a))
}

/// A partition of `0..n` by class ids, dense and numbered in order of each
/// class's least member.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Congruence {
    class_of: Vec<usize>,
    class_count: usize,
}

impl Congruence {
    /// Normalises arbitrary class keys; does not check compatibility.
    pub fn from_keys<K: Eq + std::hash::Hash>(keys: impl IntoIterator<Item = K>) -> Self {
        let mut ids = HashMap::new();
        let class_of: Vec<usize> = keys
            .into_iter()
            .map(|k| {
                let next = ids.len();
                *ids.entry(k).or_insert(next)
            })
            .collect();
        Congruence { class_of, class_count: ids.len() }
    }

    /// A partition that must be compatible with the operation of `s`.
    pub fn new(s: &Semigroup, class_of: &[usize]) -> Result<Self> {
        if class_of.len() != s.order() {
            return Err(Error::ParentMismatch { left: s.order(), right: class_of.len() });
        }
        let c = Self::from_keys(class_of.iter().copied());
        if let Some(msg) = c.compatibility_violation(s) {
            return Err(Error::NotACongruence(msg));
        }
        Ok(c)
    }

    pub fn identity(n: usize) -> Self {
        Congruence { class_of: (0..n).collect(), class_count: n }
    }

    pub fn universal(n: usize) -> Self {
        Congruence { class_of: vec![0; n], class_count: 1 }
    }

    pub fn parent_order(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class_ids(&self) -> &[usize] {
        &self.class_of
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn class(&self, id: usize) -> ElemSet {
        let n = self.parent_order();
        let mut mask = 0u64;
        for (x, &c) in self.class_of.iter().enumerate() {
            if c == id {
                mask |= 1 << x;
            }
        }
        ElemSet::from_mask_unchecked(n, mask)
    }

    pub fn classes(&self) -> Vec<ElemSet> {
        (0..self.class_count).map(|c| self.class(c)).collect()
    }

    /// Id of the class equal to `set`, if `set` is exactly one class.
    pub fn class_equal_to(&self, set: &ElemSet) -> Option<usize> {
        let id = self.class_of[set.min()?];
        (self.class(id) == *set).then_some(id)
    }

    /// First failure of `a ~ b ⇒ xa ~ xb ∧ ax ~ bx`, described.
    pub fn compatibility_violation(&self, s: &Semigroup) -> Option<String> {
        let n = s.order();
        // Comparing each element with its class representative suffices.
        let mut rep = vec![usize::MAX; self.class_count];
        for a in 0..n {
            let c = self.class_of[a];
            if rep[c] == usize::MAX {
                rep[c] = a;
            }
        }
        for a in 0..n {
            let b = rep[self.class_of[a]];
            if a == b {
                continue;
            }
            for x in 0..n {
                if !self.related(s.mul(x, a), s.mul(x, b)) {
                    return Some(format!("{a}~{b} but {x}*{a} !~ {x}*{b}"));
                }
                if !self.related(s.mul(a, x), s.mul(b, x)) {
                    return Some(format!("{a}~{b} but {a}*{x} !~ {b}*{x}"));
                }
            }
        }
        None
    }

    pub fn is_compatible(&self, s: &Semigroup) -> bool {
        self.compatibility_violation(s).is_none()
    }
}

/// `P_H` together with the distinguished classes `H` and `W^H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalCongruence {
    pub congruence: Congruence,
    /// The class equal to `H`, when `H` is a whole class.
    pub h_class: Option<usize>,
    pub w_class: Option<usize>,
    /// `W^H = {c : H...c = ∅}`, possibly empty.
    pub w_set: ElemSet,
}

pub fn principal_congruence(s: &Semigroup, h: &ElemSet) -> Result<PrincipalCongruence> {
    s.check_set(h)?;
    if h.is_empty() {
        return Err(Error::EmptySubset);
    }
    let n = s.order();
    let contexts: Vec<ContextRelation> = (0..n).map(|a| context_unchecked(s, h, a)).collect();
    let mut w_set = ElemSet::empty(n);
    for (a, ctx) in contexts.iter().enumerate() {
        if ctx.is_empty() {
            w_set.insert(a);
        }
    }
    let congruence = Congruence::from_keys(contexts);
    const THM: &str = "principal congruence";
    if let Some(msg) = congruence.compatibility_violation(s) {
        return Err(Error::theorem(THM, msg));
    }
    let w_class = if w_set.is_empty() {
        None
    } else {
        let id = congruence
            .class_equal_to(&w_set)
            .ok_or_else(|| Error::theorem(THM, format!("W^H={w_set} is not a single class")))?;
        let sw = s.set_product(&s.full_set(), &w_set)?;
        let ws = s.set_product(&w_set, &s.full_set())?;
        if !sw.union(&ws)?.is_subset(&w_set) {
            return Err(Error::theorem(THM, format!("W^H={w_set} is not an ideal")));
        }
        Some(id)
    };
    let h_class = congruence.class_equal_to(h);
    Ok(PrincipalCongruence { congruence, h_class, w_class, w_set })
}

/// `P_H(T)` for `H ⊆ T`, computed on the re-indexed subsemigroup `T`.
/// The returned congruence and `h_class` are in local indices of `T`.
pub fn principal_congruence_within(s: &Semigroup, t: &ElemSet, h: &ElemSet) -> Result<(Induced, PrincipalCongruence)> {
    let induced = s.induced(t)?;
    let local_h = induced.to_local(h)?;
    let pc = principal_congruence(&induced.semigroup, &local_h)?;
    Ok((induced, pc))
}

/// `S/α` with the canonical projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSemigroup {
    pub quotient: Semigroup,
    /// Element of `S` to its class id.
    pub projection: Vec<usize>,
    /// Member set of each class, indexed by class id.
    pub classes: Vec<ElemSet>,
}

impl QuotientSemigroup {
    pub fn order(&self) -> usize {
        self.quotient.order()
    }

    pub fn project(&self, x: usize) -> usize {
        self.projection[x]
    }

    /// Image of a subset of `S` in the quotient.
    pub fn project_set(&self, set: &ElemSet) -> ElemSet {
        let mut img = ElemSet::empty(self.order());
        for x in set {
            img.insert(self.projection[x]);
        }
        img
    }

    /// Union of the classes in `set`.
    pub fn preimage(&self, set: &ElemSet) -> ElemSet {
        let mut pre = ElemSet::empty(self.projection.len());
        for c in set {
            for x in &self.classes[c] {
                pre.insert(x);
            }
        }
        pre
    }
}

pub fn quotient(s: &Semigroup, c: &Congruence) -> Result<QuotientSemigroup> {
    if c.parent_order() != s.order() {
        return Err(Error::ParentMismatch { left: s.order(), right: c.parent_order() });
    }
    if let Some(msg) = c.compatibility_violation(s) {
        return Err(Error::NotACongruence(msg));
    }
    let classes = c.classes();
    let reps: Vec<usize> = classes.iter().map(|k| k.min().expect("empty class")).collect();
    let labels = classes.iter().map(|k| s.format_set(k)).collect();
    let k = classes.len();
    let quotient = Semigroup::from_fn(k, Some(labels), |i, j| c.class_of(s.mul(reps[i], reps[j])))?;
    Ok(QuotientSemigroup { quotient, projection: c.class_ids().to_vec(), classes })
}

/// Whether the quotient is a group whose identity is the class `h_class`.
pub fn is_group_with_identity(q: &QuotientSemigroup, h_class: usize) -> bool {
    h_class < q.order() && group::group_identity(&q.quotient) == Some(h_class)
}

/// Whether `n` is a union of whole classes.
pub fn saturates(c: &Congruence, n: &ElemSet) -> Result<bool> {
    if n.parent_order() != c.parent_order() {
        return Err(Error::ParentMismatch { left: c.parent_order(), right: n.parent_order() });
    }
    Ok((0..c.class_count()).all(|id| {
        let k = c.class(id);
        k.is_subset(n) || k.intersection(n).map(|x| x.is_empty()).unwrap_or(false)
    }))
}

/// `α|N = α ∩ (N × N)` as a congruence on the re-indexed subsemigroup `N`.
#[derive(Debug, Clone)]
pub struct RestrictedCongruence {
    pub induced: Induced,
    pub congruence: Congruence,
}

pub fn restrict(s: &Semigroup, c: &Congruence, n: &ElemSet) -> Result<RestrictedCongruence> {
    if c.parent_order() != s.order() {
        return Err(Error::ParentMismatch { left: s.order(), right: c.parent_order() });
    }
    let induced = s.induced(n)?;
    let congruence = Congruence::from_keys(induced.members().iter().map(|&x| c.class_of(x)));
    Ok(RestrictedCongruence { induced, congruence })
}

/// Every congruence of a small semigroup, by sweeping all set partitions in
/// restricted-growth order. Gated at order [`CONGRUENCE_ENUMERATION_BOUND`].
pub fn enumerate_congruences(s: &Semigroup) -> Result<Vec<Congruence>> {
    let n = s.order();
    if n > CONGRUENCE_ENUMERATION_BOUND {
        return Err(Error::OrderBoundExceeded { order: n, bound: CONGRUENCE_ENUMERATION_BOUND });
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(s: &Semigroup, rgs: &mut Vec<usize>, i: usize, max: usize, out: &mut Vec<Congruence>) {
        if i == rgs.len() {
            let c = Congruence { class_of: rgs.clone(), class_count: max + 1 };
            if c.is_compatible(s) {
                out.push(c);
            }
            return;
        }
        for v in 0..=max + 1 {
            rgs[i] = v;
            rec(s, rgs, i + 1, max.max(v), out);
        }
    }
    // rgs[0] is always 0.
    rec(s, &mut rgs, 1, 0, &mut out);
    Ok(out)
}
