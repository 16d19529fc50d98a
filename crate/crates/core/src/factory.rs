//! Deterministic instances: left zero semigroups, a catalog of small
//! groups, left groups `L_m × G`, the doubling construction, and the
//! verification corpus built from them.

use crate::error::{Error, Result};
use crate::group;
use crate::iso::is_isomorphic;
use crate::semigroup::Semigroup;
use crate::subset::is_ru_subsemigroup;

/// Names of the catalog groups, in catalog order.
pub const GROUP_NAMES: [&str; 12] = ["Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Klein", "S3", "D4", "Q8"];

/// `L_m`: `ab = a`. Elements are labelled `a1..am`.
pub fn left_zero(m: usize) -> Result<Semigroup> {
    if m == 0 {
        return Err(Error::ZeroSize);
    }
    let labels = (1..=m).map(|i| format!("a{i}")).collect();
    Semigroup::from_fn(m, Some(labels), |a, _| a)
}

pub fn cyclic(n: usize) -> Result<Semigroup> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    Semigroup::from_fn(n, Some(labels), |a, b| (a + b) % n)
}

fn klein() -> Semigroup {
    let labels = ["e", "a", "b", "c"].map(String::from).to_vec();
    Semigroup::from_fn(4, Some(labels), |a, b| a ^ b).expect("Klein table")
}

/// Permutations of {1,2,3}, composed right to left (`(στ)(x) = σ(τ(x))`).
fn symmetric3() -> Semigroup {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
    let labels = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"].map(String::from).to_vec();
    Semigroup::from_fn(6, Some(labels), |a, b| {
        let c = [perms[a][perms[b][0]], perms[a][perms[b][1]], perms[a][perms[b][2]]];
        perms.iter().position(|p| *p == c).expect("closed under composition")
    })
    .expect("S3 table")
}

/// `r^i s^j` at index `4j + i`, with `s r = r⁻¹ s`.
fn dihedral4() -> Semigroup {
    let labels = (0..8).map(|k| if k < 4 { format!("r{k}") } else { format!("r{}s", k - 4) }).collect();
    Semigroup::from_fn(8, Some(labels), |x, y| {
        let (i1, j1) = (x % 4, x / 4);
        let (i2, j2) = (y % 4, y / 4);
        // r^i1 s^j1 r^i2 s^j2 = r^(i1 ± i2) s^(j1+j2)
        let i = if j1 == 0 { (i1 + i2) % 4 } else { (i1 + 4 - i2) % 4 };
        4 * ((j1 + j2) % 2) + i
    })
    .expect("D4 table")
}

/// Quaternions: index `2u + sign` over units `1, i, j, k`.
fn quaternion() -> Semigroup {
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
    // unit product table: (unit, negative?)
    const UNITS: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    Semigroup::from_fn(8, Some(labels), |x, y| {
        let (u, su) = (x / 2, x % 2 == 1);
        let (v, sv) = (y / 2, y % 2 == 1);
        let (w, neg) = UNITS[u][v];
        2 * w + usize::from(neg ^ su ^ sv)
    })
    .expect("Q8 table")
}

pub fn catalog_group(name: &str) -> Option<Semigroup> {
    match name {
        "Klein" => Some(klein()),
        "S3" => Some(symmetric3()),
        "D4" => Some(dihedral4()),
        "Q8" => Some(quaternion()),
        _ => {
            let n: usize = name.strip_prefix('Z')?.parse().ok()?;
            (1..=8).contains(&n).then(|| cyclic(n).expect("cyclic table"))
        }
    }
}

/// `Z1..Z8, Klein, S3, D4, Q8` with their stable names.
pub fn group_catalog() -> Vec<(&'static str, Semigroup)> {
    GROUP_NAMES.iter().map(|&n| (n, catalog_group(n).expect("catalog name"))).collect()
}

/// Name of a catalog group isomorphic to `g`, if any.
pub fn identify_group(g: &Semigroup) -> Option<&'static str> {
    GROUP_NAMES.iter().copied().find(|&name| {
        let c = catalog_group(name).expect("catalog name");
        c.order() == g.order() && is_isomorphic(g, &c).is_some()
    })
}

/// Catalog name if one matches, otherwise `group(n)`; non-groups are
/// reported as `semigroup(n)`.
pub fn describe(s: &Semigroup) -> String {
    if !group::is_group(s) {
        return format!("semigroup({})", s.order());
    }
    match identify_group(s) {
        Some(n) => n.to_string(),
        None => format!("group({})", s.order()),
    }
}

/// `L_m × G`, a left simple semigroup with exactly `m` idempotents.
pub fn left_group(m: usize, g: &Semigroup) -> Result<Semigroup> {
    if !group::is_group(g) {
        return Err(Error::NotAGroup);
    }
    left_zero(m)?.direct_product(g)
}

/// The doubling `F = S₁ ∪ S₂` of a left simple `S₁`, where `S₂` is the copy
/// `i ↦ i + n`:
///
/// * `e, f ∈ S₁`: `e∘f`
/// * `e ∈ S₂, f ∈ S₁`: `e * fα`
/// * `e ∈ S₁, f ∈ S₂`: `eα * f`
/// * `e, f ∈ S₂`: `eα⁻¹ ∘ fα⁻¹`
///
/// The result is checked to be associative and left simple, with `S₁`
/// reflexive unitary in it.
pub fn double(s1: &Semigroup) -> Result<Semigroup> {
    use crate::error::Precondition;
    if !s1.is_left_simple() {
        return Err(Error::precondition(Precondition::NotLeftSimple));
    }
    let n = s1.order();
    if 2 * n > crate::elemset::MAX_CAPACITY {
        return Err(Error::OrderBoundExceeded { order: 2 * n, bound: crate::elemset::MAX_CAPACITY });
    }
    let alpha = |i: usize| i + n;
    let alpha_inv = |i: usize| i - n;
    // `*` on S₂ is the transported operation.
    let star = |e: usize, f: usize| alpha(s1.mul(alpha_inv(e), alpha_inv(f)));
    let labels = (0..2 * n).map(|i| if i < n { s1.label(i) } else { format!("{}'", s1.label(i - n)) }).collect();
    let f = Semigroup::from_fn(2 * n, Some(labels), |e, f| match (e < n, f < n) {
        (true, true) => s1.mul(e, f),
        (false, true) => star(e, alpha(f)),
        (true, false) => star(alpha(e), f),
        (false, false) => s1.mul(alpha_inv(e), alpha_inv(f)),
    })
    .map_err(|e| Error::ConstructionCheckFailed(format!("doubled table: {e}")))?;
    if !f.is_left_simple() {
        return Err(Error::ConstructionCheckFailed("doubling is not left simple".into()));
    }
    let first = crate::elemset::ElemSet::from_mask_unchecked(2 * n, (1u64 << n) - 1);
    if !is_ru_subsemigroup(&f, &first) {
        return Err(Error::ConstructionCheckFailed("first copy is not reflexive unitary in the doubling".into()));
    }
    Ok(f)
}

fn group_by_name(name: &str) -> Option<Semigroup> {
    catalog_group(name).or_else(|| {
        let n: usize = name.strip_prefix('Z')?.parse().ok()?;
        cyclic(n).ok()
    })
}

/// Parses an instance name: a catalog group (`Klein`, `S3`, …), `Z<n>` for
/// any `n`, `L3` (left zero), `L2xS3` (left group) or `double(<name>)`.
pub fn by_name(name: &str) -> Result<Semigroup> {
    let unknown = || Error::UnknownInstance(name.to_string());
    if let Some(inner) = name.strip_prefix("double(").and_then(|r| r.strip_suffix(')')) {
        return double(&by_name(inner)?);
    }
    if let Some(g) = group_by_name(name) {
        return Ok(g);
    }
    let rest = name.strip_prefix('L').ok_or_else(unknown)?;
    match rest.split_once('x') {
        Some((m, g)) => {
            let m: usize = m.parse().map_err(|_| unknown())?;
            let g = group_by_name(g).ok_or_else(unknown)?;
            left_group(m, &g)
        }
        None => left_zero(rest.parse().map_err(|_| unknown())?),
    }
}

/// Which members the corpus contains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub max_order: usize,
    pub left_zero_sizes: Vec<usize>,
    /// Catalog names, see [`GROUP_NAMES`].
    pub group_catalog: Vec<String>,
    /// Adds `double(X)` for every left group `X` with `2|X| ≤ max_order`.
    pub include_doubles: bool,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            max_order: 18,
            left_zero_sizes: vec![1, 2, 3],
            group_catalog: GROUP_NAMES.iter().map(|s| s.to_string()).collect(),
            include_doubles: true,
        }
    }
}

impl CorpusSpec {
    pub fn with_max_order(mut self, max_order: usize) -> Self {
        self.max_order = max_order;
        self
    }
}

#[derive(Debug, Clone)]
pub struct CorpusMember {
    pub name: String,
    pub semigroup: Semigroup,
}

/// All `L{m}x{G}` of order at most `max_order`, then their doubles, in
/// generation order. Every member is checked to be left simple with an
/// idempotent.
pub fn build_corpus(spec: &CorpusSpec) -> Result<Vec<CorpusMember>> {
    let mut members = Vec::new();
    for &m in &spec.left_zero_sizes {
        for gname in &spec.group_catalog {
            let g = catalog_group(gname).ok_or_else(|| Error::UnknownInstance(gname.clone()))?;
            if m * g.order() <= spec.max_order {
                members.push(CorpusMember { name: format!("L{m}x{gname}"), semigroup: left_group(m, &g)? });
            }
        }
    }
    if spec.include_doubles {
        let doubles: Vec<CorpusMember> = members
            .iter()
            .filter(|c| 2 * c.semigroup.order() <= spec.max_order)
            .map(|c| Ok(CorpusMember { name: format!("double({})", c.name), semigroup: double(&c.semigroup)? }))
            .collect::<Result<_>>()?;
        members.extend(doubles);
    }
    for c in &members {
        if !c.semigroup.is_left_simple() || c.semigroup.idempotents().is_empty() {
            return Err(Error::ConstructionCheckFailed(format!("{} is not a left group", c.name)));
        }
    }
    Ok(members)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_groups() {
        for (name, g) in group_catalog() {
            assert!(group::is_group(&g), "{name}");
            assert_eq!(identify_group(&g), Some(name));
        }
        let s3 = catalog_group("S3").unwrap();
        assert_eq!(group::subgroups(&s3).unwrap().len(), 6);
        let normal = group::normal_subgroups(&s3).unwrap();
        assert_eq!(normal, vec![s3.set(&[0]), s3.set(&[0, 4, 5]), s3.full_set()]);
        assert!(is_isomorphic(&klein(), &cyclic(4).unwrap()).is_none());
        // D4 and Q8 share order 8 but differ.
        assert!(is_isomorphic(&dihedral4(), &quaternion()).is_none());
    }

    #[test]
    fn left_zero_examples() {
        assert_eq!(left_zero(0), Err(Error::ZeroSize));
        let l2 = left_zero(2).unwrap();
        assert!(l2.is_left_simple() && !group::is_group(&l2));
        assert_eq!(l2.idempotents().len(), 2);
    }

    #[test]
    fn left_groups() {
        let z2 = cyclic(2).unwrap();
        assert!(is_isomorphic(&left_group(1, &z2).unwrap(), &z2).is_some());
        let s = left_group(3, &catalog_group("S3").unwrap()).unwrap();
        assert_eq!(s.order(), 18);
        assert_eq!(s.idempotents().len(), 3);
        assert_eq!(left_group(2, &left_zero(2).unwrap()), Err(Error::NotAGroup));
    }

    #[test]
    fn doubles() {
        let d1 = double(&cyclic(1).unwrap()).unwrap();
        assert!(is_isomorphic(&d1, &cyclic(2).unwrap()).is_some());
        let d2 = double(&cyclic(2).unwrap()).unwrap();
        assert!(is_isomorphic(&d2, &klein()).is_some());
        let min = Semigroup::from_fn(2, None, |a, b| a.min(b)).unwrap();
        assert!(matches!(double(&min), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn names() {
        assert_eq!(by_name("L2xZ4").unwrap().order(), 8);
        assert_eq!(by_name("L3").unwrap().order(), 3);
        assert_eq!(by_name("double(L2xZ2)").unwrap().order(), 8);
        assert_eq!(by_name("Z12").unwrap().order(), 12);
        assert!(by_name("Z0").is_err());
        assert!(by_name("Z65").is_err());
        assert!(by_name("Q9").is_err());
        assert!(by_name("Lx").is_err());
        assert_eq!(describe(&by_name("double(Z2)").unwrap()), "Klein");
        assert_eq!(describe(&by_name("L2").unwrap()), "semigroup(2)");
    }

    #[test]
    fn corpus_examples() {
        let spec = CorpusSpec {
            max_order: 4,
            left_zero_sizes: vec![1, 2],
            group_catalog: vec!["Z1".into(), "Z2".into()],
            include_doubles: true,
        };
        let names: Vec<String> = build_corpus(&spec).unwrap().into_iter().map(|c| c.name).collect();
        assert_eq!(names, ["L1xZ1", "L1xZ2", "L2xZ1", "L2xZ2", "double(L1xZ1)", "double(L1xZ2)", "double(L2xZ1)"]);
        let tiny = CorpusSpec { max_order: 1, ..spec };
        let names: Vec<String> = build_corpus(&tiny).unwrap().into_iter().map(|c| c.name).collect();
        assert_eq!(names, ["L1xZ1"]);
    }
}
