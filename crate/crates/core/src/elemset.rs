//! Subsets of a finite semigroup, stored as a 64-bit mask over dense
//! element indices.

use std::fmt;

use crate::error::{Error, Result};

/// Largest semigroup order an [`ElemSet`] can address.
pub const MAX_CAPACITY: usize = 64;

/// A subset of the elements `0..parent_order` of some semigroup.
///
/// Ordering is by `(parent_order, mask)`, so sets over one parent sort in
/// ascending bitmask order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet {
    parent_order: usize,
    mask: u64,
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl ElemSet {
    pub fn empty(parent_order: usize) -> Self {
        assert!(parent_order <= MAX_CAPACITY, "order {parent_order} exceeds bitset capacity");
        ElemSet { parent_order, mask: 0 }
    }

    pub fn full(parent_order: usize) -> Self {
        assert!(parent_order <= MAX_CAPACITY, "order {parent_order} exceeds bitset capacity");
        ElemSet { parent_order, mask: full_mask(parent_order) }
    }

    pub fn singleton(parent_order: usize, x: usize) -> Self {
        let mut s = Self::empty(parent_order);
        s.insert(x);
        s
    }

    /// Builds a set from a raw mask; bits at or above `parent_order` are rejected.
    pub fn from_mask(parent_order: usize, mask: u64) -> Result<Self> {
        if parent_order > MAX_CAPACITY {
            return Err(Error::OrderBoundExceeded { order: parent_order, bound: MAX_CAPACITY });
        }
        if mask & !full_mask(parent_order) != 0 {
            let element = 63 - (mask & !full_mask(parent_order)).leading_zeros() as usize;
            return Err(Error::ElementOutOfRange { element, order: parent_order });
        }
        Ok(ElemSet { parent_order, mask })
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(parent_order: usize, elems: I) -> Result<Self> {
        let mut s = Self::empty(parent_order);
        for x in elems {
            if x >= parent_order {
                return Err(Error::ElementOutOfRange { element: x, order: parent_order });
            }
            s.mask |= 1 << x;
        }
        Ok(s)
    }

    /// Panicking shorthand for literal sets in tests and examples.
    pub fn of(parent_order: usize, elems: &[usize]) -> Self {
        Self::from_elements(parent_order, elems.iter().copied()).expect("element out of range")
    }

    pub(crate) fn from_mask_unchecked(parent_order: usize, mask: u64) -> Self {
        debug_assert_eq!(mask & !full_mask(parent_order), 0);
        ElemSet { parent_order, mask }
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_full(&self) -> bool {
        self.mask == full_mask(self.parent_order)
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.parent_order && self.mask >> x & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        assert!(x < self.parent_order, "element {x} out of range");
        self.mask |= 1 << x;
    }

    pub fn min(&self) -> Option<usize> {
        (self.mask != 0).then(|| self.mask.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter {
        Iter { mask: self.mask }
    }

    fn check_parent(&self, other: &ElemSet) -> Result<()> {
        if self.parent_order != other.parent_order {
            return Err(Error::ParentMismatch { left: self.parent_order, right: other.parent_order });
        }
        Ok(())
    }

    pub fn intersection(&self, other: &ElemSet) -> Result<ElemSet> {
        self.check_parent(other)?;
        Ok(ElemSet { parent_order: self.parent_order, mask: self.mask & other.mask })
    }

    pub fn union(&self, other: &ElemSet) -> Result<ElemSet> {
        self.check_parent(other)?;
        Ok(ElemSet { parent_order: self.parent_order, mask: self.mask | other.mask })
    }

    pub fn difference(&self, other: &ElemSet) -> Result<ElemSet> {
        self.check_parent(other)?;
        Ok(ElemSet { parent_order: self.parent_order, mask: self.mask & !other.mask })
    }

    pub fn complement(&self) -> ElemSet {
        ElemSet { parent_order: self.parent_order, mask: !self.mask & full_mask(self.parent_order) }
    }

    /// `self ⊆ other`. Sets over different parents are never related.
    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.parent_order == other.parent_order && self.mask & !other.mask == 0
    }

    pub fn is_proper_subset(&self, other: &ElemSet) -> bool {
        self.is_subset(other) && self.mask != other.mask
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.parent_order)
    }
}

impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

pub struct Iter {
    mask: u64,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.mask == 0 {
            return None;
        }
        let x = self.mask.trailing_zeros() as usize;
        self.mask &= self.mask - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.mask.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for &ElemSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Iterates all nonempty submasks of `mask` in ascending numeric order.
pub(crate) fn ascending_submasks(mask: u64) -> impl Iterator<Item = u64> {
    // Walks the submask lattice by "add one within the allowed bits".
    let mut cur: u64 = 0;
    let mut done = mask == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        cur = cur.wrapping_sub(mask) & mask;
        if cur == 0 {
            done = true;
            return None;
        }
        Some(cur)
    })
}
