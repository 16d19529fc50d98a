//! Test-side oracles. These only read multiplication tables; none of them
//! call the library's algorithms.

#![allow(dead_code)]

use leftsimple::{ElemSet, Semigroup};

/// `L_m × Z_n` built directly from modular arithmetic, indexed `a·n + k`.
pub fn left_cyclic(m: usize, n: usize) -> Semigroup {
    let table = (0..m * n).map(|i| (0..m * n).map(|j| (i / n) * n + (i % n + j % n) % n).collect()).collect();
    Semigroup::new(table, None).unwrap()
}

/// Elements `(a, k)` of `L_m × Z_n` with `a ∈ left` and `k ∈ right`.
pub fn lc_set(m: usize, n: usize, left: &[usize], right: &[usize]) -> ElemSet {
    let mut v = Vec::new();
    for &a in left {
        for &k in right {
            v.push(a * n + k);
        }
    }
    ElemSet::from_elements(m * n, v).unwrap()
}

/// Permutations of `{0,1,2}` in the order id, (01), (02), (12), (012), (021).
pub const S3_PERMS: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];

/// `S₃` under composition `(p·q)(x) = p(q(x))`.
pub fn s3_from_perms() -> Semigroup {
    let idx = |p: [usize; 3]| S3_PERMS.iter().position(|&q| q == p).unwrap();
    let table = S3_PERMS.iter().map(|p| S3_PERMS.iter().map(|q| idx([p[q[0]], p[q[1]], p[q[2]]])).collect()).collect();
    Semigroup::new(table, None).unwrap()
}

pub fn is_associative(s: &Semigroup) -> bool {
    let n = s.order();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| s.mul(s.mul(a, b), c) == s.mul(a, s.mul(b, c)))))
}

/// `mapping` is a bijective homomorphism `s → t`.
pub fn is_iso_map(s: &Semigroup, t: &Semigroup, mapping: &[usize]) -> bool {
    let n = s.order();
    if t.order() != n || mapping.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &y in mapping {
        if y >= n || std::mem::replace(&mut seen[y], true) {
            return false;
        }
    }
    (0..n).all(|a| (0..n).all(|b| mapping[s.mul(a, b)] == t.mul(mapping[a], mapping[b])))
}

/// Two-sided identity of a group table, if the table is a group.
pub fn group_identity(s: &Semigroup) -> Option<usize> {
    let n = s.order();
    let e = (0..n).find(|&e| (0..n).all(|x| s.mul(e, x) == x && s.mul(x, e) == x))?;
    (0..n).all(|x| (0..n).any(|y| s.mul(x, y) == e && s.mul(y, x) == e)).then_some(e)
}

pub fn is_left_zero(s: &Semigroup) -> bool {
    let n = s.order();
    (0..n).all(|a| (0..n).all(|b| s.mul(a, b) == a))
}

/// `Na = N` for every `a ∈ N`, by direct table lookup.
pub fn left_simple_on(s: &Semigroup, n: &[usize]) -> bool {
    n.iter().all(|&a| {
        let mut hit: Vec<usize> = n.iter().map(|&x| s.mul(x, a)).collect();
        hit.sort_unstable();
        hit.dedup();
        hit == n
    })
}

/// All nonempty subsets of `0..n` as sorted vectors.
pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u64..(1u64 << n)).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

pub fn closed(s: &Semigroup, x: &[usize]) -> bool {
    x.iter().all(|&a| x.iter().all(|&b| x.contains(&s.mul(a, b))))
}

/// `b, ab ∈ U ⇒ a ∈ U`.
pub fn right_unitary(s: &Semigroup, u: &[usize]) -> bool {
    (0..s.order()).all(|a| u.contains(&a) || u.iter().all(|&b| !u.contains(&s.mul(a, b))))
}

/// `a, ab ∈ U ⇒ b ∈ U`.
pub fn left_unitary(s: &Semigroup, u: &[usize]) -> bool {
    (0..s.order()).all(|b| u.contains(&b) || u.iter().all(|&a| !u.contains(&s.mul(a, b))))
}

pub fn reflexive(s: &Semigroup, h: &[usize]) -> bool {
    let n = s.order();
    (0..n).all(|a| (0..n).all(|b| !h.contains(&s.mul(a, b)) || h.contains(&s.mul(b, a))))
}

/// Subgroups of a group table by brute force over subsets.
pub fn brute_subgroups(g: &Semigroup) -> Vec<Vec<usize>> {
    let e = group_identity(g).expect("group");
    subsets(g.order()).filter(|k| k.contains(&e) && closed(g, k)).collect()
}

fn inverse(g: &Semigroup, e: usize, x: usize) -> usize {
    (0..g.order()).find(|&y| g.mul(x, y) == e).unwrap()
}

/// Normal subgroups of `g` contained in `k`, normal in `k`.
fn normal_in(g: &Semigroup, e: usize, k: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << k.len()) {
        let sub: Vec<usize> = (0..k.len()).filter(|&i| mask >> i & 1 == 1).map(|i| k[i]).collect();
        if !sub.contains(&e) || !closed(g, &sub) {
            continue;
        }
        let normal = k.iter().all(|&x| {
            let xi = inverse(g, e, x);
            sub.iter().all(|&h| sub.contains(&g.mul(g.mul(x, h), xi)))
        });
        if normal {
            out.push(sub);
        }
    }
    out
}

/// Composition factor orders of a group along every chain of maximal
/// normal subgroups; panics if two chains disagree. Sorted ascending.
pub fn composition_factor_orders(g: &Semigroup) -> Vec<usize> {
    let e = group_identity(g).expect("group");
    fn dfs(g: &Semigroup, e: usize, k: Vec<usize>, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k.len() == 1 {
            let mut f = acc.clone();
            f.sort_unstable();
            out.push(f);
            return;
        }
        let proper: Vec<Vec<usize>> = normal_in(g, e, &k).into_iter().filter(|n| n.len() < k.len()).collect();
        for n in &proper {
            let maximal = !proper.iter().any(|m| m.len() > n.len() && n.iter().all(|x| m.contains(x)));
            if maximal {
                acc.push(k.len() / n.len());
                dfs(g, e, n.clone(), acc, out);
                acc.pop();
            }
        }
    }
    let mut all = Vec::new();
    dfs(g, e, (0..g.order()).collect(), &mut Vec::new(), &mut all);
    let first = all[0].clone();
    assert!(all.iter().all(|f| *f == first), "oracle chains disagree: {all:?}");
    first
}

/// `{ab : a ∈ x, b ∈ y}` as a sorted vector.
pub fn product(s: &Semigroup, x: &[usize], y: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = x.iter().flat_map(|&a| y.iter().map(move |&b| s.mul(a, b))).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Sorted multiset of element orders of a group table.
pub fn element_orders(g: &Semigroup) -> Vec<usize> {
    let e = group_identity(g).expect("group");
    let mut out: Vec<usize> = (0..g.order())
        .map(|x| {
            let (mut y, mut k) = (x, 1);
            while y != e {
                y = g.mul(y, x);
                k += 1;
            }
            k
        })
        .collect();
    out.sort_unstable();
    out
}
