//! Finite semigroups given by Cayley tables.

use std::collections::HashSet;
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::elemset::{ElemSet, MAX_CAPACITY};
use crate::error::{Error, Result};

/// Default bound on the order accepted by the exhaustive algorithms.
pub const DEFAULT_ORDER_BOUND: usize = 24;

static ORDER_BOUND: AtomicUsize = AtomicUsize::new(DEFAULT_ORDER_BOUND);

/// Current bound on the order accepted by exhaustive operations.
pub fn order_bound() -> usize {
    ORDER_BOUND.load(Ordering::Relaxed)
}

/// Sets the process-wide order bound, clamped to the bitset capacity.
pub fn set_order_bound(bound: usize) {
    ORDER_BOUND.store(bound.clamp(1, MAX_CAPACITY), Ordering::Relaxed);
}

pub(crate) fn check_order_bound(order: usize) -> Result<()> {
    let bound = order_bound();
    if order > bound {
        return Err(Error::OrderBoundExceeded { order, bound });
    }
    Ok(())
}

/// A finite semigroup on the dense elements `0..order`.
///
/// Construction validates associativity over all `n³` triples, so every
/// value of this type is a semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Semigroup {
    order: usize,
    table: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl Semigroup {
    pub fn new(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        if n > MAX_CAPACITY {
            return Err(Error::OrderBoundExceeded { order: n, bound: MAX_CAPACITY });
        }
        let mut flat = Vec::with_capacity(n * n);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::NonSquareTable { row, len: entries.len(), expected: n });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(Error::EntryOutOfRange { row, col, value, order: n });
                }
                flat.push(value);
            }
        }
        if let Some(labels) = &labels {
            if labels.len() != n {
                return Err(Error::LabelCountMismatch { expected: n, got: labels.len() });
            }
            let mut seen = HashSet::new();
            for l in labels {
                if !seen.insert(l.as_str()) {
                    return Err(Error::DuplicateLabels(l.clone()));
                }
            }
        }
        let s = Semigroup { order: n, table: flat, labels };
        if let Some((a, b, c)) = s.associativity_violation() {
            return Err(Error::NotAssociative { a, b, c });
        }
        Ok(s)
    }

    /// Builds from a closure `f(a, b)`; validated like [`Semigroup::new`].
    pub fn from_fn(order: usize, labels: Option<Vec<String>>, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let table = (0..order).map(|a| (0..order).map(|b| f(a, b)).collect()).collect();
        Self::new(table, labels)
    }

    fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| self.row(a).to_vec()).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of an element; falls back to the index.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        let s = Semigroup::new(self.rows(), Some(labels))?;
        self.labels = s.labels;
        Ok(self)
    }

    pub fn format_set(&self, set: &ElemSet) -> String {
        let parts: Vec<String> = set.iter().map(|x| self.label(x)).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.order)
    }

    pub fn set(&self, elems: &[usize]) -> ElemSet {
        ElemSet::of(self.order, elems)
    }

    pub(crate) fn check_set(&self, set: &ElemSet) -> Result<()> {
        if set.parent_order() != self.order {
            return Err(Error::ParentMismatch { left: self.order, right: set.parent_order() });
        }
        Ok(())
    }

    /// `S·a = S` for every `a`, which for finite semigroups means no
    /// proper left ideal.
    pub fn is_left_simple(&self) -> bool {
        self.is_left_simple_within(&self.full_set())
    }

    /// Left simplicity of the subsemigroup on `t` (quantifiers range over `t`).
    pub fn is_left_simple_within(&self, t: &ElemSet) -> bool {
        t.iter().all(|a| {
            let mut image = 0u64;
            for s in t {
                image |= 1 << self.mul(s, a);
            }
            image == t.mask()
        })
    }

    /// Product set `{ab : a ∈ A, b ∈ B}`.
    pub fn set_product(&self, a: &ElemSet, b: &ElemSet) -> Result<ElemSet> {
        self.check_set(a)?;
        self.check_set(b)?;
        let mut mask = 0u64;
        for x in a {
            let row = self.row(x);
            for y in b {
                mask |= 1 << row[y];
            }
        }
        Ok(ElemSet::from_mask_unchecked(self.order, mask))
    }

    pub fn is_closed(&self, x: &ElemSet) -> bool {
        x.iter().all(|a| {
            let row = self.row(a);
            x.iter().all(|b| x.contains(row[b]))
        })
    }

    /// Smallest subsemigroup containing `x`.
    pub fn closure(&self, x: &ElemSet) -> Result<ElemSet> {
        self.check_set(x)?;
        if x.is_empty() {
            return Err(Error::EmptyGenerator);
        }
        let mut cur = *x;
        loop {
            let next = cur.union(&self.set_product(&cur, &cur)?)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    pub fn idempotents(&self) -> ElemSet {
        let mut set = ElemSet::empty(self.order);
        for e in 0..self.order {
            if self.mul(e, e) == e {
                set.insert(e);
            }
        }
        set
    }

    /// Direct product on pairs with index `a·|T| + x`.
    pub fn direct_product(&self, other: &Semigroup) -> Result<Semigroup> {
        let m = other.order;
        let n = self.order * m;
        if n > MAX_CAPACITY {
            return Err(Error::OrderBoundExceeded { order: n, bound: MAX_CAPACITY });
        }
        let labels = match (&self.labels, &other.labels) {
            (None, None) => None,
            _ => Some((0..n).map(|i| format!("({},{})", self.label(i / m), other.label(i % m))).collect()),
        };
        Semigroup::from_fn(n, labels, |i, j| self.mul(i / m, j / m) * m + other.mul(i % m, j % m))
    }

    /// The subsemigroup on `set`, re-indexed densely in ascending order.
    pub fn induced(&self, set: &ElemSet) -> Result<Induced> {
        self.check_set(set)?;
        if set.is_empty() {
            return Err(Error::EmptySubset);
        }
        if !self.is_closed(set) {
            return Err(Error::NotASubsemigroup(self.format_set(set)));
        }
        let members = set.to_vec();
        let mut local = vec![usize::MAX; self.order];
        for (i, &x) in members.iter().enumerate() {
            local[x] = i;
        }
        let k = members.len();
        let table: Vec<usize> = (0..k * k).map(|ij| local[self.mul(members[ij / k], members[ij % k])]).collect();
        let labels = members.iter().map(|&x| self.label(x)).collect();
        // Associativity is inherited from the parent.
        let semigroup = Semigroup { order: k, table, labels: Some(labels) };
        Ok(Induced { semigroup, members, local, parent: *set })
    }
}

/// A subsemigroup re-indexed as a standalone [`Semigroup`], together with
/// the index maps to and from the parent.
#[derive(Debug, Clone)]
pub struct Induced {
    pub semigroup: Semigroup,
    members: Vec<usize>,
    local: Vec<usize>,
    parent: ElemSet,
}

impl Induced {
    /// Parent index of each local element.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn parent_set(&self) -> ElemSet {
        self.parent
    }

    pub fn to_parent_elem(&self, local: usize) -> usize {
        self.members[local]
    }

    pub fn to_local_elem(&self, parent: usize) -> Option<usize> {
        self.local.get(parent).copied().filter(|&i| i != usize::MAX)
    }

    /// Maps a parent-level subset into local indices; it must lie inside.
    pub fn to_local(&self, set: &ElemSet) -> Result<ElemSet> {
        if set.parent_order() != self.local.len() {
            return Err(Error::ParentMismatch { left: self.local.len(), right: set.parent_order() });
        }
        if !set.is_subset(&self.parent) {
            return Err(Error::precondition(crate::error::Precondition::Other(format!(
                "{set} is not contained in {}",
                self.parent
            ))));
        }
        ElemSet::from_elements(self.members.len(), set.iter().map(|x| self.local[x]))
    }

    pub fn to_parent(&self, local: &ElemSet) -> ElemSet {
        let mut mask = 0u64;
        for i in local {
            mask |= 1 << self.members[i];
        }
        ElemSet::from_mask_unchecked(self.local.len(), mask)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> Semigroup {
        Semigroup::from_fn(n, None, |a, b| (a + b) % n).unwrap()
    }

    fn left_zero(m: usize) -> Semigroup {
        Semigroup::from_fn(m, None, |a, _| a).unwrap()
    }

    /// Brute-force associativity oracle, independent of the constructor.
    fn associative(t: &[Vec<usize>]) -> bool {
        let n = t.len();
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])))
    }

    #[test]
    fn construction_examples() {
        assert_eq!(Semigroup::new(vec![vec![0]], None).unwrap().order(), 1);

        let l2 = vec![vec![0, 0], vec![1, 1]];
        assert!(associative(&l2));
        assert!(Semigroup::new(l2, None).is_ok());

        // A max-semilattice: the oracle finds no violating triple.
        let max = vec![vec![0, 1], vec![1, 1]];
        assert!(associative(&max));
        assert!(Semigroup::new(max, None).is_ok());

        let bad = vec![vec![1, 0], vec![0, 0]];
        assert!(!associative(&bad));
        assert_eq!(Semigroup::new(bad, None), Err(Error::NotAssociative { a: 0, b: 0, c: 1 }));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Semigroup::new(vec![], None), Err(Error::EmptyTable));
        assert!(matches!(
            Semigroup::new(vec![vec![0, 1], vec![1]], None),
            Err(Error::NonSquareTable { row: 1, len: 1, expected: 2 })
        ));
        assert!(matches!(
            Semigroup::new(vec![vec![0, 2], vec![1, 1]], None),
            Err(Error::EntryOutOfRange { row: 0, col: 1, value: 2, .. })
        ));
        let dup = Some(vec!["x".to_string(), "x".to_string()]);
        assert_eq!(Semigroup::new(vec![vec![0, 0], vec![1, 1]], dup), Err(Error::DuplicateLabels("x".into())));
    }

    #[test]
    fn left_simplicity() {
        assert!(left_zero(2).is_left_simple());
        assert!(cyclic(4).is_left_simple());
        let min = Semigroup::from_fn(2, None, |a, b| a.min(b)).unwrap();
        assert!(!min.is_left_simple());
    }

    #[test]
    fn closure_examples() {
        let z4 = cyclic(4);
        assert_eq!(z4.closure(&z4.set(&[0])).unwrap(), z4.set(&[0]));
        assert_eq!(z4.closure(&z4.set(&[1])).unwrap(), z4.full_set());
        let l2 = left_zero(2);
        assert_eq!(l2.closure(&l2.set(&[1])).unwrap(), l2.set(&[1]));
        assert_eq!(z4.closure(&ElemSet::empty(4)), Err(Error::EmptyGenerator));
    }

    #[test]
    fn products() {
        let l2z2 = left_zero(2).direct_product(&cyclic(2)).unwrap();
        // (a,x) has index 2a + x.
        let a = l2z2.set(&[0, 2]);
        let b = l2z2.set(&[1, 3]);
        assert_eq!(l2z2.set_product(&a, &b).unwrap(), b);
        assert!(l2z2.set_product(&ElemSet::empty(4), &b).unwrap().is_empty());
        assert_eq!(l2z2.idempotents(), l2z2.set(&[0, 2]));
        assert!(l2z2.is_left_simple());
        assert!(l2z2.set_product(&a, &ElemSet::full(3)).is_err());
    }

    #[test]
    fn induced_reindexes() {
        let z4 = cyclic(4);
        let sub = z4.induced(&z4.set(&[0, 2])).unwrap();
        assert_eq!(sub.semigroup.rows(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(sub.to_parent(&ElemSet::of(2, &[1])), z4.set(&[2]));
        assert_eq!(sub.to_local(&z4.set(&[2])).unwrap(), ElemSet::of(2, &[1]));
        assert!(z4.induced(&z4.set(&[1])).is_err());
    }
}
