mod common;

use common::*;
use leftsimple::cli::SemigroupFile;
use leftsimple::congruence::{principal_congruence, quotient};
use leftsimple::factory::{self, catalog_group, GROUP_NAMES};
use leftsimple::subset::{enumerate_ru_subsemigroups, is_reflexive, is_unitary};
use leftsimple::{is_isomorphic, ElemSet, Semigroup};
use proptest::prelude::*;

/// The semigroup of maps on `0..3` generated by `gens`, composed left to
/// right, capped at 16 elements.
fn transformations(gens: &[[usize; 3]]) -> Semigroup {
    let mut elems: Vec<[usize; 3]> = Vec::new();
    for g in gens {
        if !elems.contains(g) {
            elems.push(*g);
        }
    }
    let compose = |f: [usize; 3], g: [usize; 3]| [g[f[0]], g[f[1]], g[f[2]]];
    let mut i = 0;
    while i < elems.len() && elems.len() < 16 {
        for g in gens {
            let h = compose(elems[i], *g);
            if !elems.contains(&h) && elems.len() < 16 {
                elems.push(h);
            }
        }
        i += 1;
    }
    // Truncation can break closure; keep only the closed case.
    let idx = |f: [usize; 3]| elems.iter().position(|&e| e == f);
    let closed = elems.iter().all(|&f| elems.iter().all(|&g| idx(compose(f, g)).is_some()));
    if !closed {
        return Semigroup::new(vec![vec![0]], None).unwrap();
    }
    let table = elems.iter().map(|&f| elems.iter().map(|&g| idx(compose(f, g)).unwrap()).collect()).collect();
    Semigroup::new(table, None).unwrap()
}

fn map3() -> impl Strategy<Value = [usize; 3]> {
    [0usize..3, 0usize..3, 0usize..3]
}

fn any_semigroup() -> impl Strategy<Value = Semigroup> {
    prop::collection::vec(map3(), 1..3).prop_map(|g| transformations(&g))
}

fn left_group() -> impl Strategy<Value = Semigroup> {
    (1usize..=3, 0..GROUP_NAMES.len())
        .prop_filter("order at most 16", |&(m, g)| m * catalog_group(GROUP_NAMES[g]).unwrap().order() <= 16)
        .prop_map(|(m, g)| factory::left_group(m, &catalog_group(GROUP_NAMES[g]).unwrap()).unwrap())
}

fn with_subset(s: Semigroup) -> impl Strategy<Value = (Semigroup, ElemSet)> {
    let n = s.order();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    (Just(s), 1u64..=full).prop_map(move |(s, m)| (s, ElemSet::from_mask(n, m).unwrap()))
}

fn relabel(s: &Semigroup, perm: &[usize]) -> Semigroup {
    let n = s.order();
    let mut inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    Semigroup::from_fn(n, None, |a, b| perm[s.mul(inv[a], inv[b])]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_tables_are_associative(s in any_semigroup()) {
        prop_assert!(is_associative(&s));
    }

    #[test]
    fn closure_is_least_closed_superset((s, x) in any_semigroup().prop_flat_map(with_subset)) {
        let c = s.closure(&x).unwrap();
        prop_assert!(x.is_subset(&c));
        prop_assert!(closed(&s, &c.to_vec()));
        prop_assert_eq!(s.closure(&c).unwrap(), c);
        // Least: every closed superset of x found by brute force contains c.
        for y in subsets(s.order()).filter(|y| closed(&s, y)) {
            let y = ElemSet::of(s.order(), &y);
            if x.is_subset(&y) {
                prop_assert!(c.is_subset(&y));
            }
        }
    }

    #[test]
    fn set_product_is_monotone((s, x) in any_semigroup().prop_flat_map(with_subset), extra in any::<u64>()) {
        let n = s.order();
        let y = ElemSet::from_mask(n, x.mask() | (extra & s.full_set().mask())).unwrap();
        let px = s.set_product(&x, &x).unwrap();
        let py = s.set_product(&y, &y).unwrap();
        prop_assert!(px.is_subset(&py));
        prop_assert_eq!(px, ElemSet::of(n, &product(&s, &x.to_vec(), &x.to_vec())));
    }

    #[test]
    fn principal_congruence_is_compatible((s, h) in any_semigroup().prop_flat_map(with_subset)) {
        let pc = principal_congruence(&s, &h).unwrap();
        let c = &pc.congruence;
        let n = s.order();
        for a in 0..n {
            for b in 0..n {
                if c.related(a, b) {
                    for t in 0..n {
                        prop_assert!(c.related(s.mul(a, t), s.mul(b, t)));
                        prop_assert!(c.related(s.mul(t, a), s.mul(t, b)));
                    }
                }
            }
        }
        // W^H is an ideal.
        for w in pc.w_set.iter() {
            for t in 0..n {
                prop_assert!(pc.w_set.contains(s.mul(w, t)) && pc.w_set.contains(s.mul(t, w)));
            }
        }
    }

    #[test]
    fn ru_sweep_matches_oracle(s in any_semigroup()) {
        let got: Vec<ElemSet> = enumerate_ru_subsemigroups(&s).unwrap();
        let oracle: Vec<ElemSet> = subsets(s.order())
            .filter(|x| closed(&s, x) && reflexive(&s, x) && left_unitary(&s, x) && right_unitary(&s, x))
            .map(|x| ElemSet::of(s.order(), &x))
            .collect();
        let mut got_sorted = got.clone();
        got_sorted.sort();
        let mut oracle = oracle;
        oracle.sort();
        prop_assert_eq!(got_sorted, oracle);
        for h in &got {
            prop_assert!(is_reflexive(&s, h).unwrap().holds && is_unitary(&s, h).unwrap().holds);
            prop_assert_eq!(s.closure(h).unwrap(), *h);
        }
    }

    #[test]
    fn left_groups_are_left_simple_with_group_quotients(s in left_group()) {
        prop_assert!(left_simple_on(&s, &(0..s.order()).collect::<Vec<_>>()));
        for h in enumerate_ru_subsemigroups(&s).unwrap() {
            let pc = principal_congruence(&s, &h).unwrap();
            let q = quotient(&s, &pc.congruence).unwrap();
            let e = group_identity(&q.quotient);
            prop_assert!(e.is_some());
            prop_assert_eq!(q.classes[e.unwrap()], h);
        }
    }

    #[test]
    fn isomorphism_finds_relabelings(s in any_semigroup(), seed in any::<u64>()) {
        let n = s.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed | 1;
        for i in (1..n).rev() {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            perm.swap(i, (x % (i as u64 + 1)) as usize);
        }
        let t = relabel(&s, &perm);
        let w = is_isomorphic(&s, &t);
        prop_assert!(w.is_some());
        let w = w.unwrap();
        prop_assert!(is_iso_map(&s, &t, w.mapping()));
        let back = is_isomorphic(&t, &s).unwrap();
        prop_assert!(is_iso_map(&t, &s, back.mapping()));
        prop_assert!(is_iso_map(&s, &s, is_isomorphic(&s, &s).unwrap().mapping()));
    }

    #[test]
    fn file_round_trip((s, x) in any_semigroup().prop_flat_map(with_subset)) {
        let labels: Vec<String> = (0..s.order()).map(|i| format!("x{i}")).collect();
        let s = s.with_labels(labels).unwrap();
        let mut f = SemigroupFile::from_semigroup(&s);
        f.add_subset("H", &s, &x);
        prop_assert_eq!(SemigroupFile::parse(&f.to_text()).unwrap(), f.clone());
        prop_assert_eq!(SemigroupFile::parse(&f.to_json()).unwrap(), f.clone());
        prop_assert_eq!(f.semigroup().unwrap(), s);
        prop_assert_eq!(f.subset("H").unwrap(), x);
    }
}
