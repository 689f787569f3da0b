//! Combinatorial homotopy-equivalence certificates: carriers, Quillen fibers
//! and order homotopies.
//!
//! Contractibility is certified by a cone point (a poset with a least or
//! greatest element) when there is one, and otherwise approximated by
//! vanishing reduced integral homology of the order complex.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;

use serde::Serialize;

use super::complex::SimplicialComplex;
use super::homology::{reduced_homology, HomologyProfile};
use super::map::SimplicialMap;
use super::poset::{face_poset, order_complex, Poset};
use crate::error::{Error, Result};
use crate::report::ValidationReport;

/// Which subfamilies of a cover get their intersections checked.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SubsetBound {
    /// Every non-empty subfamily when there are at most 16 members,
    /// otherwise subfamilies of size at most 3.
    #[default]
    Auto,
    Full,
    UpTo(usize),
}

impl SubsetBound {
    /// Largest subfamily size checked for a cover with `n` members.
    pub fn max_size(self, n: usize) -> usize {
        match self {
            SubsetBound::Auto if n <= 16 => n,
            SubsetBound::Auto => 3,
            SubsetBound::Full => n,
            SubsetBound::UpTo(k) => k.min(n),
        }
    }

    pub fn describe(self, n: usize) -> String {
        let k = self.max_size(n);
        if k == n {
            format!("all {} subfamilies", (1u128 << n.min(127)) - 1)
        } else {
            format!("subfamilies of size <= {k} only")
        }
    }
}

/// Non-empty subsets of `0..n` of size at most `k`, by size then lex.
pub fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut level: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..k.min(n) {
        let mut next = Vec::new();
        for s in &level {
            let start = s.last().map_or(0, |l| l + 1);
            for i in start..n {
                let mut t = s.clone();
                t.push(i);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Contractibility {
    /// Has a least or greatest element.
    Cone,
    /// Non-empty with vanishing reduced homology.
    HomologyPoint,
    NotAcyclic(HomologyProfile),
    Empty,
}

impl Contractibility {
    pub fn holds(&self) -> bool {
        matches!(self, Contractibility::Cone | Contractibility::HomologyPoint)
    }
}

pub fn contractibility<T: Clone>(p: &Poset<T>) -> Contractibility {
    if p.is_empty() {
        return Contractibility::Empty;
    }
    if p.maximum().is_some() || p.minimum().is_some() {
        return Contractibility::Cone;
    }
    let h = reduced_homology(&order_complex(p));
    if h.is_acyclic() {
        Contractibility::HomologyPoint
    } else {
        Contractibility::NotAcyclic(h)
    }
}

/// Fails with [`Error::NotOrderPreserving`] unless `x <= y` implies
/// `f(x) <= f(y)`.
pub fn check_order_preserving<T: Clone + Debug, U: Clone>(
    p: &Poset<T>,
    q: &Poset<U>,
    f: &[usize],
) -> Result<()> {
    if f.len() != p.len() {
        return Err(Error::Malformed(format!(
            "map has {} values for {} elements",
            f.len(),
            p.len()
        )));
    }
    if let Some(&bad) = f.iter().find(|&&y| y >= q.len()) {
        return Err(Error::Malformed(format!("map value {bad} is out of range")));
    }
    for i in 0..p.len() {
        for j in p.strictly_above(i) {
            if !q.leq(f[i], f[j]) {
                return Err(Error::NotOrderPreserving(format!(
                    "{:?} <= {:?}",
                    p.element(i),
                    p.element(j)
                )));
            }
        }
    }
    Ok(())
}

fn normalize(members: &[Vec<usize>]) -> Vec<Vec<usize>> {
    members
        .iter()
        .map(|m| {
            let mut m = m.clone();
            m.sort_unstable();
            m.dedup();
            m
        })
        .collect()
}

fn intersect(sets: &[Vec<usize>], js: &[usize]) -> Vec<usize> {
    let mut acc = sets[js[0]].clone();
    for &j in &js[1..] {
        acc = super::complex::sorted_intersection(&acc, &sets[j]);
    }
    acc
}

fn uncovered_chain<T: Clone + Debug>(p: &Poset<T>, cover: &[Vec<usize>]) -> Option<String> {
    p.maximal_chains().into_iter().find_map(|chain| {
        let inside = cover
            .iter()
            .any(|m| chain.iter().all(|x| m.binary_search(x).is_ok()));
        (!inside).then(|| {
            let elems: Vec<_> = chain.iter().map(|&x| p.element(x)).collect();
            format!("chain {elems:?} lies in no member")
        })
    })
}

/// Checks the hypotheses under which an order-preserving `f: P -> Q` is a
/// homotopy equivalence because it is carried by two covers with the same
/// nerve.
///
/// `a[i]` and `b[i]` are element-index sets of `P` and `Q` whose order
/// complexes cover `Δ(P)` and `Δ(Q)`. Reported checks: both families cover,
/// `∩_J A_i` is non-empty iff `∩_J B_i` is, every non-empty intersection is
/// contractible on both sides, and `f(A_i) ⊆ B_i`.
pub fn carrier_check<T: Clone + Debug, U: Clone + Debug>(
    p: &Poset<T>,
    q: &Poset<U>,
    f: &[usize],
    a: &[Vec<usize>],
    b: &[Vec<usize>],
    bound: SubsetBound,
) -> Result<ValidationReport> {
    check_order_preserving(p, q, f)?;
    if a.len() != b.len() {
        return Err(Error::CoverMismatch(a.len(), b.len()));
    }
    let a = normalize(a);
    let b = normalize(b);
    let mut report = ValidationReport::new();

    report.push_all("source cover", uncovered_chain(p, &a).into_iter().collect());
    report.push_all("target cover", uncovered_chain(q, &b).into_iter().collect());

    let n = a.len();
    let subsets = index_subsets(n, bound.max_size(n));
    let scope = format!("{} ({})", subsets.len(), bound.describe(n));
    let mut cache_a: HashMap<Vec<usize>, bool> = HashMap::new();
    let mut cache_b: HashMap<Vec<usize>, bool> = HashMap::new();
    let mut pattern = Vec::new();
    let mut contract_a = Vec::new();
    let mut contract_b = Vec::new();
    if n > 0 {
        for js in &subsets {
            let ia = intersect(&a, js);
            let ib = intersect(&b, js);
            if ia.is_empty() != ib.is_empty() {
                pattern.push(format!(
                    "members {js:?}: source intersection {}, target intersection {}",
                    if ia.is_empty() { "empty" } else { "non-empty" },
                    if ib.is_empty() { "empty" } else { "non-empty" }
                ));
            }
            if !ia.is_empty() {
                let ok = *cache_a
                    .entry(ia.clone())
                    .or_insert_with(|| contractibility(&p.induced(&ia)).holds());
                if !ok {
                    contract_a.push(format!("members {js:?}"));
                }
            }
            if !ib.is_empty() {
                let ok = *cache_b
                    .entry(ib.clone())
                    .or_insert_with(|| contractibility(&q.induced(&ib)).holds());
                if !ok {
                    contract_b.push(format!("members {js:?}"));
                }
            }
        }
    }
    report.push_all("nerves agree", pattern);
    report.push_all("source intersections contractible", contract_a);
    report.push_all("target intersections contractible", contract_b);

    let mut into = Vec::new();
    for (i, (ai, bi)) in a.iter().zip(&b).enumerate() {
        if let Some(&x) = ai.iter().find(|&&x| bi.binary_search(&f[x]).is_err()) {
            into.push(format!("member {i}: image of {:?} is outside", p.element(x)));
        }
    }
    report.push_all("carried", into);
    report.note(format!("checked {scope}"));
    Ok(report)
}

/// Members of a cover of a simplicial complex by subcomplexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverFamily<V> {
    pub members: Vec<SimplicialComplex<V>>,
}

/// [`carrier_check`] for a simplicial map between complexes, run on face
/// posets: `A_i` becomes the faces of the `i`-th member.
pub fn carrier_check_complexes<V, W>(
    f: &SimplicialMap<V, W>,
    x: &SimplicialComplex<V>,
    y: &SimplicialComplex<W>,
    a: &CoverFamily<V>,
    b: &CoverFamily<W>,
    bound: SubsetBound,
) -> Result<ValidationReport>
where
    V: Ord + Clone + Debug,
    W: Ord + Clone + Debug,
{
    f.check_simplicial(x, y)?;
    let p = face_poset(x);
    let q = face_poset(y);
    let q_index: BTreeMap<&Vec<W>, usize> = q.elements().iter().enumerate().map(|(i, e)| (e, i)).collect();
    let fmap = p
        .elements()
        .iter()
        .map(|face| {
            let img = f.apply_face(face)?;
            q_index
                .get(&img)
                .copied()
                .ok_or_else(|| Error::NotSimplicial(format!("{face:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let am = member_faces(&a.members, p.elements());
    let bm = member_faces(&b.members, q.elements());
    carrier_check(&p, &q, &fmap, &am, &bm, bound)
}

fn member_faces<V: Ord + Clone>(members: &[SimplicialComplex<V>], faces: &[Vec<V>]) -> Vec<Vec<usize>> {
    members
        .iter()
        .map(|m| {
            faces
                .iter()
                .enumerate()
                .filter(|(_, face)| m.contains_face(face))
                .map(|(i, _)| i)
                .collect()
        })
        .collect()
}

/// Quillen's fiber criterion for an order-preserving `f: P -> Q`: every
/// fiber `f^{-1}(Q_{>=q})` must be contractible.
pub fn quillen_fibers_check<T: Clone + Debug, U: Clone + Debug>(
    p: &Poset<T>,
    q: &Poset<U>,
    f: &[usize],
) -> Result<ValidationReport> {
    check_order_preserving(p, q, f)?;
    let mut failures = Vec::new();
    let mut cones = 0;
    for y in 0..q.len() {
        let fiber: Vec<usize> = (0..p.len()).filter(|&x| q.leq(y, f[x])).collect();
        match contractibility(&p.induced(&fiber)) {
            Contractibility::Cone => cones += 1,
            Contractibility::HomologyPoint => {}
            Contractibility::Empty => failures.push(format!("fiber over {:?} is empty", q.element(y))),
            Contractibility::NotAcyclic(h) => {
                failures.push(format!("fiber over {:?} has {h}", q.element(y)))
            }
        }
    }
    let mut report = ValidationReport::new();
    report.push_all("fibers contractible", failures);
    report.note(format!("{} fibers, {cones} with a cone point", q.len()));
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HomotopyKind {
    /// `f(x) <= x` for all `x`.
    Lowering,
    /// `f(x) >= x` for all `x`.
    Raising,
}

#[derive(Clone, Debug)]
pub struct OrderHomotopy<T> {
    pub kind: HomotopyKind,
    /// Indices of `f(P)` in `P`, sorted.
    pub image: Vec<usize>,
    pub image_poset: Poset<T>,
    pub source_homology: HomologyProfile,
    pub image_homology: HomologyProfile,
}

impl<T> OrderHomotopy<T> {
    pub fn homology_agrees(&self) -> bool {
        self.source_homology.agrees_with(&self.image_homology)
    }
}

/// For an order-preserving self-map that is comparable to the identity, the
/// inclusion of the image is a homotopy equivalence. Returns the image and
/// both homology profiles.
///
/// Only comparability with the identity is enforced; `f` is not checked to be
/// order-preserving.
pub fn order_homotopy_image<T: Clone + Debug>(p: &Poset<T>, f: &[usize]) -> Result<OrderHomotopy<T>> {
    if f.len() != p.len() || f.iter().any(|&y| y >= p.len()) {
        return Err(Error::Malformed(format!(
            "map must send each of the {} elements to an element",
            p.len()
        )));
    }
    let kind = if (0..p.len()).all(|x| p.leq(f[x], x)) {
        HomotopyKind::Lowering
    } else if (0..p.len()).all(|x| p.leq(x, f[x])) {
        HomotopyKind::Raising
    } else {
        return Err(Error::NotOrderHomotopy);
    };
    let mut image: Vec<usize> = f.to_vec();
    image.sort_unstable();
    image.dedup();
    let image_poset = p.induced(&image);
    Ok(OrderHomotopy {
        kind,
        source_homology: reduced_homology(&order_complex(p)),
        image_homology: reduced_homology(&order_complex(&image_poset)),
        image,
        image_poset,
    })
}
