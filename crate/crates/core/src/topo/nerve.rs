//! Nerves of set families and the cross-polytope recognizer.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::complex::SimplicialComplex;
use crate::sign::{Sign, SignVector};

/// Nerve of a family of sets: vertex `i` for each member, and a face for
/// every subfamily with a common element.
pub fn nerve<T: Ord>(members: &[BTreeSet<T>]) -> SimplicialComplex<usize> {
    let mut by_element: BTreeMap<&T, Vec<usize>> = BTreeMap::new();
    for (i, m) in members.iter().enumerate() {
        for x in m {
            by_element.entry(x).or_default().push(i);
        }
    }
    SimplicialComplex::from_faces(by_element.into_values())
}

/// Nerve of the facets of `k`: vertex `i` is the `i`-th facet, and a set of
/// facets is a face iff they share a vertex.
pub fn facet_nerve<V: Ord + Clone>(k: &SimplicialComplex<V>) -> SimplicialComplex<usize> {
    let sets: Vec<BTreeSet<V>> = k.facets().iter().map(|f| f.iter().cloned().collect()).collect();
    nerve(&sets)
}

/// Outcome of [`cross_polytope_nerve_iso`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NerveIso {
    pub iso: bool,
    /// Sign vector assigned to each facet (in facet order) when `iso`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<SignVector>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl NerveIso {
    fn fail(witness: String) -> Self {
        NerveIso {
            iso: false,
            labels: None,
            witness: Some(witness),
        }
    }
}

/// Decides whether the facet nerve of `k` is isomorphic to the facet nerve of
/// the boundary of the `d`-dimensional cross-polytope.
///
/// The facet nerve is generated by the vertex stars (sets of facets through a
/// vertex), so it suffices to find `d` complementary pairs of maximal stars
/// of size `2^(d-1)` whose membership pattern labels the `2^d` facets
/// bijectively by `{+,-}^d`. For `d = 0` the cross-polytope boundary is the
/// empty complex and only the empty complex qualifies.
pub fn cross_polytope_nerve_iso<V: Ord + Clone>(k: &SimplicialComplex<V>, d: usize) -> NerveIso {
    let facets = k.facets();
    if d == 0 {
        return if k.is_empty() {
            NerveIso {
                iso: true,
                labels: Some(Vec::new()),
                witness: None,
            }
        } else {
            NerveIso::fail(format!("expected the empty complex, found {} facets", facets.len()))
        };
    }
    if d >= usize::BITS as usize - 1 || facets.len() != 1 << d {
        return NerveIso::fail(format!("expected 2^{d} facets, found {}", facets.len()));
    }

    let mut stars: BTreeMap<&V, BTreeSet<usize>> = BTreeMap::new();
    for (i, f) in facets.iter().enumerate() {
        for v in f {
            stars.entry(v).or_default().insert(i);
        }
    }
    let distinct: BTreeSet<BTreeSet<usize>> = stars.into_values().collect();
    let maximal: Vec<BTreeSet<usize>> = distinct
        .iter()
        .filter(|s| !distinct.iter().any(|t| t != *s && s.is_subset(t)))
        .cloned()
        .collect();
    if maximal.len() != 2 * d {
        return NerveIso::fail(format!(
            "expected {} maximal vertex stars, found {}",
            2 * d,
            maximal.len()
        ));
    }
    let half = 1usize << (d - 1);
    if let Some(s) = maximal.iter().find(|s| s.len() != half) {
        return NerveIso::fail(format!(
            "a maximal vertex star has {} facets, expected {half}",
            s.len()
        ));
    }

    let all: BTreeSet<usize> = (0..facets.len()).collect();
    let mut pairs: Vec<(&BTreeSet<usize>, &BTreeSet<usize>)> = Vec::new();
    for s in &maximal {
        let complement: BTreeSet<usize> = all.difference(s).copied().collect();
        match maximal.iter().find(|t| **t == complement) {
            None => return NerveIso::fail("a maximal vertex star has no complementary star".into()),
            Some(t) if s.first() < t.first() => pairs.push((s, t)),
            Some(_) => {}
        }
    }

    let labels: Vec<SignVector> = (0..facets.len())
        .map(|i| {
            SignVector::new(
                pairs
                    .iter()
                    .map(|(plus, _)| Some(if plus.contains(&i) { Sign::Plus } else { Sign::Minus }))
                    .collect(),
            )
        })
        .collect();
    let distinct_labels: BTreeSet<&SignVector> = labels.iter().collect();
    if distinct_labels.len() != labels.len() {
        return NerveIso::fail("two facets lie in exactly the same maximal stars".into());
    }
    NerveIso {
        iso: true,
        labels: Some(labels),
        witness: None,
    }
}
