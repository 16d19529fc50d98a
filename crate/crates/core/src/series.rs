//! Normal series `S = S₀ ⊇ S₁ ⊇ … ⊇ S_k` of a left simple semigroup, where
//! each `S_i` is a reflexive unitary subsemigroup of `S_{i-1}`, together
//! with their factor groups `S_{i-1}/P_{S_i}`, refinements, and composition
//! series.

use std::collections::HashMap;

use crate::congruence::{is_group_with_identity, principal_congruence_within, quotient, QuotientSemigroup};
use crate::elemset::ElemSet;
use crate::error::{Error, Precondition, Result};
use crate::factory::describe;
use crate::group::is_simple_group;
use crate::iso::{is_isomorphic, IsoWitness};
use crate::semigroup::{check_order_bound, Semigroup};
use crate::subset::{
    closure_violation, enumerate_ru_within, left_unitary_violation, reflexivity_violation, right_unitary_violation,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalSeries {
    parent: Semigroup,
    chain: Vec<ElemSet>,
}

impl NormalSeries {
    pub fn parent(&self) -> &Semigroup {
        &self.parent
    }

    pub fn chain(&self) -> &[ElemSet] {
        &self.chain
    }

    /// Number of steps `k`.
    pub fn length(&self) -> usize {
        self.chain.len() - 1
    }

    pub fn last(&self) -> &ElemSet {
        self.chain.last().expect("series is never empty")
    }

    /// Same series with adjacent repeated terms dropped.
    pub fn compact(&self) -> NormalSeries {
        let mut chain = self.chain.clone();
        chain.dedup();
        NormalSeries { parent: self.parent.clone(), chain }
    }

    /// Whether every term of `other` occurs in `self`.
    pub fn refines(&self, other: &NormalSeries) -> bool {
        self.length() >= other.length() && other.chain.iter().all(|t| self.chain.contains(t))
    }

    pub fn describe(&self) -> String {
        let terms: Vec<String> = self.chain.iter().map(|t| self.parent.format_set(t)).collect();
        terms.join(" > ")
    }
}

pub fn validate_series(parent: &Semigroup, chain: Vec<ElemSet>) -> Result<NormalSeries> {
    if chain.first() != Some(&parent.full_set()) {
        return Err(Error::SeriesMustStartAtParent);
    }
    for (i, t) in chain.iter().enumerate().skip(1) {
        parent.check_set(t)?;
        if t.is_empty() || closure_violation(parent, t).is_some() {
            return Err(Error::SeriesNotSubsemigroup(i));
        }
        let prev = &chain[i - 1];
        if !t.is_subset(prev) {
            return Err(Error::NotDescending(i));
        }
        let violation = reflexivity_violation(parent, prev, t)
            .map(|(a, b)| ("reflexive", a, b))
            .or_else(|| left_unitary_violation(parent, prev, t).map(|(a, b)| ("left unitary", a, b)))
            .or_else(|| right_unitary_violation(parent, prev, t).map(|(a, b)| ("right unitary", a, b)));
        if let Some((what, a, b)) = violation {
            return Err(Error::NotReflexiveUnitaryInPredecessor {
                index: i,
                witness: format!("not {what}: ({}, {})", parent.label(a), parent.label(b)),
            });
        }
    }
    Ok(NormalSeries { parent: parent.clone(), chain })
}

/// The factor `S_{i-1}/P_{S_i}`, computed on `S_{i-1}` re-indexed densely.
#[derive(Debug, Clone)]
pub struct Factor {
    pub upper: ElemSet,
    pub lower: ElemSet,
    /// Parent index of each local element of `upper`.
    pub members: Vec<usize>,
    pub quotient: QuotientSemigroup,
    pub identity_class: usize,
}

impl Factor {
    pub fn group(&self) -> &Semigroup {
        &self.quotient.quotient
    }

    pub fn order(&self) -> usize {
        self.quotient.order()
    }

    pub fn name(&self) -> String {
        describe(self.group())
    }
}

#[derive(Debug, Clone)]
pub struct SeriesFactors {
    pub factors: Vec<Factor>,
}

impl SeriesFactors {
    pub fn names(&self) -> Vec<String> {
        self.factors.iter().map(Factor::name).collect()
    }
}

fn factor(s: &Semigroup, upper: &ElemSet, lower: &ElemSet) -> Result<Factor> {
    let (ind, pc) = principal_congruence_within(s, upper, lower)?;
    let quotient = quotient(&ind.semigroup, &pc.congruence)?;
    let identity_class = pc.h_class.filter(|&c| is_group_with_identity(&quotient, c)).ok_or_else(|| {
        Error::theorem("series factor", format!("{upper}/P_{lower} is not a group with identity {lower}"))
    })?;
    Ok(Factor { upper: *upper, lower: *lower, members: ind.members().to_vec(), quotient, identity_class })
}

pub fn factors(ns: &NormalSeries) -> Result<SeriesFactors> {
    let factors = ns.chain.windows(2).map(|w| factor(&ns.parent, &w[0], &w[1])).collect::<Result<_>>()?;
    Ok(SeriesFactors { factors })
}

/// A permutation `i ↦ i*` pairing isomorphic factors, 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesIso {
    pub permutation: Vec<usize>,
    /// `witnesses[i]` maps factor `i` of the first series onto factor
    /// `permutation[i]` of the second.
    pub witnesses: Vec<IsoWitness>,
}

impl SeriesIso {
    pub fn verify(&self, a: &SeriesFactors, b: &SeriesFactors) -> bool {
        let k = a.factors.len();
        if b.factors.len() != k || self.permutation.len() != k || self.witnesses.len() != k {
            return false;
        }
        let mut seen = vec![false; k];
        self.permutation.iter().all(|&j| j < k && !std::mem::replace(&mut seen[j], true))
            && self
                .permutation
                .iter()
                .zip(&self.witnesses)
                .enumerate()
                .all(|(i, (&j, w))| w.verify(a.factors[i].group(), b.factors[j].group()))
    }
}

/// Greedy matching in index order; exact because isomorphism is an
/// equivalence relation.
pub fn factors_isomorphic(a: &SeriesFactors, b: &SeriesFactors) -> Option<SeriesIso> {
    if a.factors.len() != b.factors.len() {
        return None;
    }
    let mut used = vec![false; b.factors.len()];
    let mut permutation = Vec::with_capacity(a.factors.len());
    let mut witnesses = Vec::with_capacity(a.factors.len());
    for fa in &a.factors {
        let (j, w) = b.factors.iter().enumerate().find_map(|(j, fb)| {
            if used[j] || fb.order() != fa.order() {
                return None;
            }
            is_isomorphic(fa.group(), fb.group()).map(|w| (j, w))
        })?;
        used[j] = true;
        permutation.push(j);
        witnesses.push(w);
    }
    Some(SeriesIso { permutation, witnesses })
}

pub fn series_isomorphic(a: &NormalSeries, b: &NormalSeries) -> Result<Option<SeriesIso>> {
    if a.length() != b.length() {
        return Ok(None);
    }
    Ok(factors_isomorphic(&factors(a)?, &factors(b)?))
}

fn check_pair(a: &NormalSeries, b: &NormalSeries) -> Result<()> {
    if a.parent != b.parent {
        return Err(Error::precondition(Precondition::ParentMismatch));
    }
    if !a.parent.is_left_simple() {
        return Err(Error::precondition(Precondition::NotLeftSimple));
    }
    Ok(())
}

/// Extends `a` by `S_k∩H_1 ⊇ … ⊇ S_k∩H_n` and `b` by `H_n∩S_1 ⊇ … ⊇ H_n∩S_k`,
/// so that both end at `S_k ∩ H_n`.
pub fn common_tail_refine(a: &NormalSeries, b: &NormalSeries) -> Result<(NormalSeries, NormalSeries)> {
    check_pair(a, b)?;
    let s = &a.parent;
    let sk = *a.last();
    let hn = *b.last();
    let mut ca = a.chain.clone();
    for h in &b.chain[1..] {
        ca.push(sk.intersection(h)?);
    }
    let mut cb = b.chain.clone();
    for t in &a.chain[1..] {
        cb.push(hn.intersection(t)?);
    }
    let wrap = |e: Error| Error::theorem("common tail refinement", e.to_string());
    let ra = validate_series(s, ca).map_err(wrap)?;
    let rb = validate_series(s, cb).map_err(wrap)?;
    if ra.last() != rb.last() {
        return Err(Error::theorem("common tail refinement", "refinements end differently"));
    }
    Ok((ra, rb))
}

/// Isomorphic refinements of two normal series.
#[derive(Debug, Clone)]
pub struct SchreierRefinement {
    pub first: NormalSeries,
    pub second: NormalSeries,
    /// Pairs factor `S_{j-1,i}/P_{S_{j,i}}` of `first` with
    /// `H_{j,i-1}/P_{H_{j,i}}` of `second`.
    pub iso: SeriesIso,
}

/// Interpolates `S_{j,i} = S_i(S_{i-1} ∩ H_j)` between consecutive terms of
/// the first series and `H_{j,i} = H_j(H_{j-1} ∩ S_i)` in the second, after
/// first bringing both to a common last term. Repeated terms are kept.
pub fn schreier_refine(a: &NormalSeries, b: &NormalSeries) -> Result<SchreierRefinement> {
    const THM: &str = "Schreier refinement";
    check_pair(a, b)?;
    let (a2, b2) = if a.last() != b.last() { common_tail_refine(a, b)? } else { (a.clone(), b.clone()) };
    let s = &a.parent;
    let st = &a2.chain;
    let ht = &b2.chain;
    let (k, n) = (a2.length(), b2.length());

    // sji[i][j] = S_{j,i} for i in 1..=k; hji[j][i] = H_{j,i} for j in 1..=n.
    let mut sji = vec![Vec::new(); k + 1];
    for i in 1..=k {
        for h in ht.iter() {
            sji[i].push(s.set_product(&st[i], &st[i - 1].intersection(h)?)?);
        }
        if sji[i][0] != st[i - 1] || sji[i][n] != st[i] {
            return Err(Error::theorem(THM, format!("interpolation at level {i} misses its endpoints")));
        }
    }
    let mut hji = vec![Vec::new(); n + 1];
    for j in 1..=n {
        for t in st.iter() {
            hji[j].push(s.set_product(&ht[j], &ht[j - 1].intersection(t)?)?);
        }
        if hji[j][0] != ht[j - 1] || hji[j][k] != ht[j] {
            return Err(Error::theorem(THM, format!("interpolation at level {j} misses its endpoints")));
        }
    }
    let mut c1 = vec![s.full_set()];
    for row in sji.iter().skip(1) {
        c1.extend_from_slice(&row[1..]);
    }
    let mut c2 = vec![s.full_set()];
    for row in hji.iter().skip(1) {
        c2.extend_from_slice(&row[1..]);
    }
    let wrap = |e: Error| Error::theorem(THM, e.to_string());
    let first = validate_series(s, c1).map_err(wrap)?;
    let second = validate_series(s, c2).map_err(wrap)?;
    if !first.refines(a) || !second.refines(b) {
        return Err(Error::theorem(THM, "output does not refine its input"));
    }
    let f1 = factors(&first)?;
    let f2 = factors(&second)?;
    let mut permutation = vec![0; k * n];
    let mut witnesses = Vec::with_capacity(k * n);
    for i in 1..=k {
        for j in 1..=n {
            let p = (i - 1) * n + (j - 1);
            let q = (j - 1) * k + (i - 1);
            let w = is_isomorphic(f1.factors[p].group(), f2.factors[q].group())
                .ok_or_else(|| Error::theorem(THM, format!("factor ({i},{j}) differs between the two refinements")))?;
            permutation[p] = q;
            witnesses.push(w);
        }
    }
    let iso = SeriesIso { permutation, witnesses };
    if !iso.verify(&f1, &f2) || factors_isomorphic(&f1, &f2).is_none() {
        return Err(Error::theorem(THM, "factor pairing does not verify"));
    }
    Ok(SchreierRefinement { first, second, iso })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompositionFailure {
    /// `S_{i-1} = S_i`.
    RepeatedTerm(usize),
    /// A reflexive unitary subsemigroup strictly between terms `i-1` and `i`.
    Intermediate { index: usize, between: ElemSet },
    /// The last term has a proper nonempty reflexive unitary subsemigroup.
    TerminalNotMinimal(ElemSet),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionCheck {
    pub holds: bool,
    pub failure: Option<CompositionFailure>,
    /// The factor criterion: strict steps, simple factor groups, minimal
    /// last term. Must agree with `holds`.
    pub factor_criterion: bool,
}

fn proper_ru(s: &Semigroup, t: &ElemSet) -> Result<Vec<ElemSet>> {
    Ok(enumerate_ru_within(s, t)?.into_iter().filter(|x| x != t).collect())
}

pub fn is_composition_series(ns: &NormalSeries) -> Result<CompositionCheck> {
    let s = &ns.parent;
    let strict_failure =
        ns.chain.windows(2).position(|w| w[0] == w[1]).map(|i| CompositionFailure::RepeatedTerm(i + 1));
    let terminal = proper_ru(s, ns.last())?.first().copied().map(CompositionFailure::TerminalNotMinimal);

    let mut failure = strict_failure.clone();
    if failure.is_none() {
        'outer: for (i, w) in ns.chain.windows(2).enumerate() {
            for t in proper_ru(s, &w[0])? {
                if w[1].is_proper_subset(&t) {
                    failure = Some(CompositionFailure::Intermediate { index: i + 1, between: t });
                    break 'outer;
                }
            }
        }
    }
    let failure = failure.or(terminal.clone());

    let factor_criterion = strict_failure.is_none()
        && terminal.is_none()
        && factors(ns)?.factors.iter().all(|f| is_simple_group(f.group()));
    Ok(CompositionCheck { holds: failure.is_none(), failure, factor_criterion })
}

/// Maximal proper reflexive unitary subsemigroups of each visited term.
struct MaximalCache<'a> {
    s: &'a Semigroup,
    memo: HashMap<u64, Vec<ElemSet>>,
}

impl MaximalCache<'_> {
    fn proper(&mut self, t: &ElemSet) -> Result<&Vec<ElemSet>> {
        if !self.memo.contains_key(&t.mask()) {
            let v = proper_ru(self.s, t)?;
            self.memo.insert(t.mask(), v);
        }
        Ok(&self.memo[&t.mask()])
    }

    fn maximal(&mut self, t: &ElemSet) -> Result<Vec<ElemSet>> {
        let proper = self.proper(t)?;
        Ok(proper.iter().filter(|x| !proper.iter().any(|y| x.is_proper_subset(y))).copied().collect())
    }
}

fn check_searchable(s: &Semigroup) -> Result<()> {
    check_order_bound(s.order())?;
    if !s.is_left_simple() {
        return Err(Error::precondition(Precondition::NotLeftSimple));
    }
    Ok(())
}

/// Composition series by depth-first descent into maximal proper reflexive
/// unitary subsemigroups, in lexicographic order of chains. With
/// `all = false` only the first is returned.
pub fn find_composition_series(s: &Semigroup, all: bool) -> Result<Vec<NormalSeries>> {
    check_searchable(s)?;
    let mut cache = MaximalCache { s, memo: HashMap::new() };
    let mut out = Vec::new();
    let mut chain = vec![s.full_set()];
    fn dfs(cache: &mut MaximalCache, chain: &mut Vec<ElemSet>, all: bool, out: &mut Vec<Vec<ElemSet>>) -> Result<()> {
        let last = *chain.last().unwrap();
        let next = cache.maximal(&last)?;
        if next.is_empty() {
            out.push(chain.clone());
            return Ok(());
        }
        for t in next {
            chain.push(t);
            dfs(cache, chain, all, out)?;
            chain.pop();
            if !all && !out.is_empty() {
                break;
            }
        }
        Ok(())
    }
    dfs(&mut cache, &mut chain, all, &mut out)?;
    out.dedup();
    Ok(out.into_iter().map(|chain| NormalSeries { parent: s.clone(), chain }).collect())
}

/// Strict normal series (every prefix included) in depth-first order, at
/// most `limit` of them.
pub fn enumerate_normal_series(s: &Semigroup, limit: usize) -> Result<Vec<NormalSeries>> {
    check_searchable(s)?;
    let mut cache = MaximalCache { s, memo: HashMap::new() };
    let mut out = Vec::new();
    let mut chain = vec![s.full_set()];
    fn dfs(
        cache: &mut MaximalCache,
        chain: &mut Vec<ElemSet>,
        limit: usize,
        out: &mut Vec<Vec<ElemSet>>,
    ) -> Result<()> {
        if out.len() >= limit {
            return Ok(());
        }
        out.push(chain.clone());
        let next = cache.proper(chain.last().unwrap())?.clone();
        for t in next {
            chain.push(t);
            dfs(cache, chain, limit, out)?;
            chain.pop();
        }
        Ok(())
    }
    dfs(&mut cache, &mut chain, limit, &mut out)?;
    Ok(out.into_iter().map(|chain| NormalSeries { parent: s.clone(), chain }).collect())
}

#[derive(Debug, Clone)]
pub struct JordanHolderReport {
    pub series: Vec<NormalSeries>,
    pub length: usize,
    /// Factor names, sorted.
    pub factor_multiset: Vec<String>,
    pub pairs_checked: usize,
}

/// Finds every composition series and checks all pairs are isomorphic.
pub fn jordan_holder_check(s: &Semigroup) -> Result<JordanHolderReport> {
    const THM: &str = "Jordan-Hölder";
    let series = find_composition_series(s, true)?;
    for ns in &series {
        let c = is_composition_series(ns)?;
        if !c.holds || !c.factor_criterion {
            return Err(Error::theorem(THM, format!("search produced a non-composition series {}", ns.describe())));
        }
    }
    let all_factors = series.iter().map(factors).collect::<Result<Vec<_>>>()?;
    let mut pairs_checked = 0;
    for i in 0..series.len() {
        for j in i + 1..series.len() {
            if factors_isomorphic(&all_factors[i], &all_factors[j]).is_none() {
                return Err(Error::theorem(
                    THM,
                    format!("{} and {} are not isomorphic", series[i].describe(), series[j].describe()),
                ));
            }
            pairs_checked += 1;
        }
    }
    let first = series.first().ok_or_else(|| Error::theorem(THM, "no composition series found"))?;
    let mut factor_multiset = all_factors[0].names();
    factor_multiset.sort();
    Ok(JordanHolderReport { length: first.length(), series, factor_multiset, pairs_checked })
}
