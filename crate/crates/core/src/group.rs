//! Group-theoretic helpers on Cayley tables: identities, inverses,
//! subgroups and normality by conjugation.

use crate::elemset::{ascending_submasks, ElemSet};
use crate::error::Result;
use crate::semigroup::{check_order_bound, Semigroup};

/// Two-sided identity of the subsemigroup on `t`, if it has one.
pub fn identity_within(s: &Semigroup, t: &ElemSet) -> Option<usize> {
    t.iter().find(|&e| t.iter().all(|x| s.mul(e, x) == x && s.mul(x, e) == x))
}

pub fn identity(s: &Semigroup) -> Option<usize> {
    identity_within(s, &s.full_set())
}

/// The identity, provided `t` is a group under the restricted operation.
pub fn group_identity_within(s: &Semigroup, t: &ElemSet) -> Option<usize> {
    if t.is_empty() || !s.is_closed(t) {
        return None;
    }
    let e = identity_within(s, t)?;
    t.iter().all(|x| t.iter().any(|y| s.mul(x, y) == e && s.mul(y, x) == e)).then_some(e)
}

pub fn group_identity(s: &Semigroup) -> Option<usize> {
    group_identity_within(s, &s.full_set())
}

pub fn is_group(s: &Semigroup) -> bool {
    group_identity(s).is_some()
}

pub fn inverse(s: &Semigroup, e: usize, x: usize) -> Option<usize> {
    (0..s.order()).find(|&y| s.mul(x, y) == e && s.mul(y, x) == e)
}

/// Subgroup test inside a group with identity `e`.
pub fn is_subgroup(g: &Semigroup, e: usize, k: &ElemSet) -> bool {
    k.contains(e) && g.is_closed(k) && k.iter().all(|x| inverse(g, e, x).is_some_and(|y| k.contains(y)))
}

/// `g k g⁻¹ ∈ K` for all `g ∈ G`, `k ∈ K`.
pub fn is_normal_subgroup(g: &Semigroup, e: usize, k: &ElemSet) -> bool {
    if !is_subgroup(g, e, k) {
        return false;
    }
    (0..g.order()).all(|x| {
        let xi = inverse(g, e, x).expect("group element without inverse");
        k.iter().all(|y| k.contains(g.mul(g.mul(x, y), xi)))
    })
}

/// All subgroups of the group `g`, ascending bitmask order.
pub fn subgroups(g: &Semigroup) -> Result<Vec<ElemSet>> {
    check_order_bound(g.order())?;
    let e = group_identity(g).ok_or(crate::error::Error::NotAGroup)?;
    let n = g.order();
    let rest = g.full_set().mask() & !(1u64 << e);
    let mut out = vec![ElemSet::singleton(n, e)];
    for m in ascending_submasks(rest) {
        let k = ElemSet::from_mask_unchecked(n, m | 1 << e);
        if is_subgroup(g, e, &k) {
            out.push(k);
        }
    }
    out.sort();
    Ok(out)
}

pub fn normal_subgroups(g: &Semigroup) -> Result<Vec<ElemSet>> {
    let e = group_identity(g).ok_or(crate::error::Error::NotAGroup)?;
    Ok(subgroups(g)?.into_iter().filter(|k| is_normal_subgroup(g, e, k)).collect())
}

/// Nontrivial with no normal subgroups besides `{e}` and `G`.
pub fn is_simple_group(g: &Semigroup) -> bool {
    if g.order() < 2 {
        return false;
    }
    match normal_subgroups(g) {
        Ok(ns) => ns.len() == 2,
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> Semigroup {
        Semigroup::from_fn(n, None, |a, b| (a + b) % n).unwrap()
    }

    #[test]
    fn cyclic_subgroups() {
        let z4 = cyclic(4);
        assert_eq!(group_identity(&z4), Some(0));
        let subs = subgroups(&z4).unwrap();
        assert_eq!(subs, vec![z4.set(&[0]), z4.set(&[0, 2]), z4.full_set()]);
        assert!(is_simple_group(&cyclic(5)));
        assert!(!is_simple_group(&cyclic(6)));
        assert!(!is_simple_group(&cyclic(1)));
    }

    #[test]
    fn non_groups() {
        let l2 = Semigroup::from_fn(2, None, |a, _| a).unwrap();
        assert!(!is_group(&l2));
        assert!(subgroups(&l2).is_err());
        let min = Semigroup::from_fn(2, None, |a, b| a.min(b)).unwrap();
        assert_eq!(identity(&min), Some(1));
        assert!(!is_group(&min));
    }
}
