//! Exhaustive isomorphism search between small semigroups.
//!
//! The search assigns images to elements in index order, always trying the
//! smallest admissible candidate first, and propagates every forced image
//! `f(xy) = f(x)f(y)` before branching again. The first complete assignment
//! found is therefore the lexicographically least isomorphism.

use crate::semigroup::Semigroup;

/// A bijection on element indices preserving the operation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IsoWitness {
    mapping: Vec<usize>,
}

impl IsoWitness {
    /// Accepts `mapping` only if it is an isomorphism from `s` onto `t`.
    pub fn new(s: &Semigroup, t: &Semigroup, mapping: Vec<usize>) -> Option<Self> {
        let w = IsoWitness { mapping };
        w.verify(s, t).then_some(w)
    }

    pub fn identity(n: usize) -> Self {
        IsoWitness { mapping: (0..n).collect() }
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn apply(&self, x: usize) -> usize {
        self.mapping[x]
    }

    /// Full table scan: bijective and `f(xy) = f(x)f(y)` for all pairs.
    pub fn verify(&self, s: &Semigroup, t: &Semigroup) -> bool {
        let n = s.order();
        if t.order() != n || self.mapping.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &y in &self.mapping {
            if y >= n || std::mem::replace(&mut seen[y], true) {
                return false;
            }
        }
        (0..n).all(|x| (0..n).all(|y| self.mapping[s.mul(x, y)] == t.mul(self.mapping[x], self.mapping[y])))
    }

    pub fn inverse(&self) -> IsoWitness {
        let mut inv = vec![0; self.mapping.len()];
        for (x, &y) in self.mapping.iter().enumerate() {
            inv[y] = x;
        }
        IsoWitness { mapping: inv }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &IsoWitness) -> IsoWitness {
        IsoWitness { mapping: self.mapping.iter().map(|&x| other.mapping[x]).collect() }
    }
}

/// Isomorphism-invariant data of a single element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct ElementInvariant {
    idempotent: bool,
    index: usize,
    period: usize,
    square_roots: usize,
    right_ideal: usize,
    left_ideal: usize,
    left_fixes: usize,
}

fn invariants(s: &Semigroup) -> Vec<ElementInvariant> {
    let n = s.order();
    let mut roots = vec![0usize; n];
    for y in 0..n {
        roots[s.mul(y, y)] += 1;
    }
    (0..n)
        .map(|x| {
            // Powers x, x², … until the first repeat gives index and period.
            let mut seen = vec![usize::MAX; n];
            let mut p = x;
            let mut k = 1;
            while seen[p] == usize::MAX {
                seen[p] = k;
                p = s.mul(p, x);
                k += 1;
            }
            let index = seen[p];
            let period = k - index;
            let mut right = 0u64;
            let mut left = 0u64;
            let mut fixes = 0;
            for y in 0..n {
                right |= 1 << s.mul(x, y);
                left |= 1 << s.mul(y, x);
                if s.mul(x, y) == y {
                    fixes += 1;
                }
            }
            ElementInvariant {
                idempotent: s.mul(x, x) == x,
                index,
                period,
                square_roots: roots[x],
                right_ideal: right.count_ones() as usize,
                left_ideal: left.count_ones() as usize,
                left_fixes: fixes,
            }
        })
        .collect()
}

struct Search<'a> {
    s: &'a Semigroup,
    t: &'a Semigroup,
    inv_s: Vec<ElementInvariant>,
    inv_t: Vec<ElementInvariant>,
    fwd: Vec<usize>,
    back: Vec<usize>,
    assigned: Vec<usize>,
}

const UNSET: usize = usize::MAX;

impl Search<'_> {
    /// Assigns `x ↦ y` and all forced consequences. On conflict the trail is
    /// left for the caller to unwind and `false` is returned.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            if self.fwd[x] != UNSET {
                if self.fwd[x] != y {
                    return false;
                }
                continue;
            }
            if self.back[y] != UNSET || self.inv_s[x] != self.inv_t[y] {
                return false;
            }
            self.fwd[x] = y;
            self.back[y] = x;
            self.assigned.push(x);
            for i in 0..self.assigned.len() {
                let w = self.assigned[i];
                let fw = self.fwd[w];
                queue.push((self.s.mul(x, w), self.t.mul(y, fw)));
                queue.push((self.s.mul(w, x), self.t.mul(fw, y)));
            }
        }
        true
    }

    fn unwind(&mut self, len: usize) {
        while self.assigned.len() > len {
            let x = self.assigned.pop().unwrap();
            self.back[self.fwd[x]] = UNSET;
            self.fwd[x] = UNSET;
        }
    }

    fn run(&mut self, from: usize) -> bool {
        let n = self.s.order();
        let Some(p) = (from..n).find(|&x| self.fwd[x] == UNSET) else {
            return true;
        };
        for c in 0..n {
            if self.back[c] != UNSET || self.inv_s[p] != self.inv_t[c] {
                continue;
            }
            let mark = self.assigned.len();
            if self.assign(p, c) && self.run(p + 1) {
                return true;
            }
            self.unwind(mark);
        }
        false
    }
}

/// Lexicographically least isomorphism from `s` onto `t`, if any exists.
/// The witness is verified by a full table scan before it is returned.
pub fn is_isomorphic(s: &Semigroup, t: &Semigroup) -> Option<IsoWitness> {
    let n = s.order();
    if t.order() != n {
        return None;
    }
    let inv_s = invariants(s);
    let inv_t = invariants(t);
    let mut a = inv_s.clone();
    let mut b = inv_t.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }
    let mut search =
        Search { s, t, inv_s, inv_t, fwd: vec![UNSET; n], back: vec![UNSET; n], assigned: Vec::with_capacity(n) };
    if !search.run(0) {
        return None;
    }
    let w = IsoWitness { mapping: search.fwd };
    assert!(w.verify(s, t), "isomorphism search produced an invalid witness");
    Some(w)
}
