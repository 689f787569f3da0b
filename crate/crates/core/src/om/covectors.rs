//! Cocircuits and covectors of a realizable oriented matroid.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::config::VectorConfig;
use crate::elements::{ElementSet, Flat, GroundSet};
use crate::error::{Error, Result};
use crate::lattice::GeometricLattice;
use crate::linalg::{clear_denominators, dot, nullspace, signum};
use crate::sign::{sign_of, SignVector};
use crate::topo::Poset;

/// Largest covector set the composition closure will build.
pub const MAX_COVECTORS: usize = 200_000;

/// The covectors `V*(M)` of an oriented matroid, sorted, including `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CovectorSet {
    ground: GroundSet,
    covectors: Vec<SignVector>,
    cocircuits: Vec<SignVector>,
}

/// Sign vector of the linear functional `x` on the columns.
fn functional_signs(v: &VectorConfig, x: &[BigInt]) -> SignVector {
    SignVector::new(
        v.columns()
            .iter()
            .map(|c| sign_of(signum(&dot(x, &clear_denominators(c)))))
            .collect(),
    )
}

/// One antipodal pair per coatom `H` of the linear matroid: the signs of a
/// normal `x` to the span of the columns in `H`. Sorted.
pub fn cocircuits_from_vectors(v: &VectorConfig) -> Result<Vec<SignVector>> {
    let lattice = v.lattice()?;
    let mut out = Vec::with_capacity(2 * lattice.coatoms().len());
    for &h in lattice.coatoms() {
        let rows: Vec<Vec<BigRational>> = h.iter().map(|e| v.column(e).to_vec()).collect();
        let normals = nullspace(&rows, v.dimension());
        let [x] = normals.as_slice() else {
            return Err(Error::Internal(format!(
                "hyperplane {} has a {}-dimensional normal space",
                v.ground().format(h),
                normals.len()
            )));
        };
        let c = functional_signs(v, x);
        if zero_set(&c) != h {
            return Err(Error::Internal(format!(
                "normal to {} vanishes on {}",
                v.ground().format(h),
                v.ground().format(zero_set(&c))
            )));
        }
        out.push(-&c);
        out.push(c);
    }
    out.sort();
    Ok(out)
}

/// `X^{-1}(0)` as an element set.
pub fn zero_set(x: &SignVector) -> ElementSet {
    x.zeros().collect()
}

/// The smallest composition-closed set containing `0` and `cocircuits`.
///
/// Every covector is a composition of cocircuits, so closing `{0}` under
/// composition on the right by cocircuits reaches all of them.
pub fn covector_span(ground: &GroundSet, cocircuits: &[SignVector]) -> Result<CovectorSet> {
    let n = ground.len();
    if let Some(c) = cocircuits.iter().find(|c| c.len() != n) {
        return Err(Error::Malformed(format!("sign vector {c} has length {}, expected {n}", c.len())));
    }
    if let Some(c) = cocircuits.iter().find(|c| c.is_zero()) {
        return Err(Error::Malformed(format!("{c} is zero and cannot be a cocircuit")));
    }
    let mut seen: BTreeSet<SignVector> = BTreeSet::new();
    let mut queue = VecDeque::from([SignVector::zero(n)]);
    seen.insert(SignVector::zero(n));
    while let Some(x) = queue.pop_front() {
        for c in cocircuits {
            let y = x.compose(c);
            if !seen.contains(&y) {
                if seen.len() >= MAX_COVECTORS {
                    return Err(Error::TooLarge {
                        what: "number of covectors",
                        size: seen.len() + 1,
                        limit: MAX_COVECTORS,
                    });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut cocircuits = cocircuits.to_vec();
    cocircuits.sort();
    cocircuits.dedup();
    Ok(CovectorSet {
        ground: ground.clone(),
        covectors: seen.into_iter().collect(),
        cocircuits,
    })
}

impl CovectorSet {
    /// `V*` of the oriented matroid realized by `v`.
    pub fn from_vectors(v: &VectorConfig) -> Result<Self> {
        covector_span(v.ground(), &cocircuits_from_vectors(v)?)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.covectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covectors.is_empty()
    }

    pub fn covectors(&self) -> &[SignVector] {
        &self.covectors
    }

    pub fn cocircuits(&self) -> &[SignVector] {
        &self.cocircuits
    }

    pub fn contains(&self, x: &SignVector) -> bool {
        self.covectors.binary_search(x).is_ok()
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &SignVector> {
        self.covectors.iter().filter(|x| !x.is_zero())
    }

    /// Covectors with no zero entry.
    pub fn topes(&self) -> impl Iterator<Item = &SignVector> {
        self.covectors.iter().filter(|x| x.zeros().next().is_none())
    }

    /// Minimal non-zero covectors, recomputed from the full set.
    pub fn minimal_nonzero(&self) -> Vec<SignVector> {
        let nz: Vec<&SignVector> = self.nonzero().collect();
        nz.iter()
            .filter(|x| !nz.iter().any(|y| *y != **x && y.conforms_to(x)))
            .map(|x| (*x).clone())
            .collect()
    }

    pub fn is_closed_under_negation(&self) -> bool {
        self.covectors.iter().all(|x| self.contains(&-x))
    }

    pub fn is_closed_under_composition(&self) -> bool {
        self.covectors
            .iter()
            .all(|x| self.covectors.iter().all(|y| self.contains(&x.compose(y))))
    }

    /// Distinct zero sets, sorted.
    pub fn zero_sets(&self) -> Vec<ElementSet> {
        let sets: BTreeSet<ElementSet> = self.covectors.iter().map(zero_set).collect();
        sets.into_iter().collect()
    }

    /// The covector flat `M_G = {X : X(G) = 0}`. Fails unless `G` is the zero
    /// set of some covector, which is the same as being a flat.
    pub fn covector_flat(&self, g: Flat) -> Result<Vec<SignVector>> {
        if !self.covectors.iter().any(|x| zero_set(x) == g) {
            return Err(Error::NotAFlat(self.ground.format(g)));
        }
        Ok(self
            .covectors
            .iter()
            .filter(|x| g.is_subset(zero_set(x)))
            .cloned()
            .collect())
    }

    /// `V*(M ∖ e) = {X ∖ e : X ∈ V*(M)}`.
    pub fn deletion(&self, e: usize) -> Result<CovectorSet> {
        if e >= self.ground.len() {
            return Err(Error::UnknownElement(e.to_string()));
        }
        let labels = self
            .ground
            .labels()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, l)| l.clone());
        let ground = GroundSet::new(labels)?;
        let covectors: BTreeSet<SignVector> = self.covectors.iter().map(|x| x.delete(e)).collect();
        let mut out = CovectorSet {
            ground,
            covectors: covectors.into_iter().collect(),
            cocircuits: Vec::new(),
        };
        out.cocircuits = out.minimal_nonzero();
        Ok(out)
    }
}

/// The poset of `xs` under the componentwise order with `0` below `+` and `-`.
pub fn covector_poset(xs: Vec<SignVector>) -> Poset<SignVector> {
    Poset::from_relation(xs, |a, b| a.conforms_to(b))
}

/// The lattice of zero sets of `V*`.
pub fn underlying_matroid(v: &CovectorSet) -> Result<GeometricLattice> {
    GeometricLattice::from_flats(v.ground.clone(), v.zero_sets())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(text: &str) -> VectorConfig {
        VectorConfig::from_json(text).unwrap()
    }

    const U24: &str = r#"{"dimension":2,"columns":{"1":[1,0],"2":[0,1],"3":[1,1],"4":[1,-1]}}"#;

    #[test]
    fn u24_cocircuits() {
        let c = cocircuits_from_vectors(&config(U24)).unwrap();
        assert_eq!(c.len(), 8);
        for s in ["0++-", "0--+", "+0++", "-0--"] {
            assert!(c.contains(&s.parse().unwrap()), "{s}");
        }
    }

    #[test]
    fn u24_covectors() {
        let v = CovectorSet::from_vectors(&config(U24)).unwrap();
        assert_eq!(v.len(), 17);
        assert_eq!(v.topes().count(), 8);
        assert_eq!(v.minimal_nonzero(), v.cocircuits());
        assert!(v.is_closed_under_negation());
        assert!(v.is_closed_under_composition());
        let g = v.ground().subset(&["1"]).unwrap();
        let flat: Vec<String> = v.covector_flat(g).unwrap().iter().map(|x| x.to_string()).collect();
        assert_eq!(flat, vec!["0000", "0++-", "0--+"]);
        let two = v.ground().subset(&["1", "2"]).unwrap();
        assert!(matches!(v.covector_flat(two), Err(Error::NotAFlat(_))));
    }

    #[test]
    fn coordinate_rank_two() {
        let v = CovectorSet::from_vectors(&config(r#"{"dimension":2,"columns":{"1":[1,0],"2":[0,1]}}"#))
            .unwrap();
        assert_eq!(v.len(), 9);
        let l = underlying_matroid(&v).unwrap();
        assert_eq!(l.len(), 4);
    }

    #[test]
    fn single_element() {
        let v = CovectorSet::from_vectors(&config(r#"{"dimension":1,"columns":{"a":["3/2"]}}"#)).unwrap();
        let s: Vec<String> = v.covectors().iter().map(|x| x.to_string()).collect();
        assert_eq!(s, vec!["0", "+", "-"]);
    }

    #[test]
    fn deletion_matches_the_smaller_configuration() {
        let v = config(U24);
        let deleted = CovectorSet::from_vectors(&v).unwrap().deletion(3).unwrap();
        let direct = CovectorSet::from_vectors(&v.deletion(3).unwrap()).unwrap();
        assert_eq!(deleted, direct);
    }
}
