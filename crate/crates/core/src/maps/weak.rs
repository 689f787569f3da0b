//! Weak maps of matroids and of oriented matroids.

use serde::Serialize;

use crate::elements::{ElementSet, GroundSet};
use crate::error::{Error, Result};
use crate::lattice::GeometricLattice;
use crate::om::{underlying_matroid, CovectorSet};
use crate::sign::SignVector;

/// Largest ground set for which all `2^n` subsets are compared.
pub const MAX_WEAK_MAP_ELEMENTS: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankWitness {
    pub subset: Vec<String>,
    pub rank_m: usize,
    pub rank_n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeakMapReport {
    pub weak_map: bool,
    /// Subsets whose rank in `N` exceeds their rank in `M`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub rank_witnesses: Vec<RankWitness>,
    /// Covectors of `N` lying below no covector of `M`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub uncovered: Vec<SignVector>,
    /// For oriented matroids: whether the underlying matroids admit a weak map.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub underlying_weak_map: Option<bool>,
    pub checked: usize,
}

/// Position in `from` of each label of `to`.
fn permutation(from: &GroundSet, to: &GroundSet) -> Result<Vec<usize>> {
    if from.len() != to.len() {
        return Err(Error::GroundSetMismatch);
    }
    to.labels()
        .iter()
        .map(|l| from.position(l).ok_or(Error::GroundSetMismatch))
        .collect()
}

fn reindex_set(s: ElementSet, perm: &[usize]) -> ElementSet {
    s.iter().map(|e| perm[e]).collect()
}

/// `n` with its elements renumbered to follow the labels of `ground`.
pub fn reindex_lattice(n: &GeometricLattice, ground: &GroundSet) -> Result<GeometricLattice> {
    let perm = permutation(ground, n.ground())?;
    GeometricLattice::from_flats(
        ground.clone(),
        n.flats().iter().map(|&f| reindex_set(f, &perm)),
    )
}

/// `M ⇝ N` iff `rank_M(A) >= rank_N(A)` for every subset `A`. Elements are
/// matched by label.
pub fn is_weak_map_matroid(m: &GeometricLattice, n: &GeometricLattice) -> Result<WeakMapReport> {
    let size = m.ground().len();
    if size > MAX_WEAK_MAP_ELEMENTS {
        return Err(Error::TooLarge {
            what: "ground set for subset enumeration",
            size,
            limit: MAX_WEAK_MAP_ELEMENTS,
        });
    }
    let n = reindex_lattice(n, m.ground())?;
    let mut rank_witnesses = Vec::new();
    let all = m.ground().all();
    for a in all.subsets() {
        let (rm, rn) = (m.set_rank(a), n.set_rank(a));
        if rn > rm {
            rank_witnesses.push(RankWitness {
                subset: m.ground().labels_of(a),
                rank_m: rm,
                rank_n: rn,
            });
        }
    }
    Ok(WeakMapReport {
        weak_map: rank_witnesses.is_empty(),
        rank_witnesses,
        uncovered: Vec::new(),
        underlying_weak_map: None,
        checked: 1 << size,
    })
}

/// `M ⇝ N` iff every covector of `N` lies below some covector of `M`. When it
/// holds, the underlying matroids are compared as well.
pub fn is_weak_map_covectors(m: &CovectorSet, n: &CovectorSet) -> Result<WeakMapReport> {
    let perm = permutation(n.ground(), m.ground())?;
    let uncovered: Vec<SignVector> = n
        .covectors()
        .iter()
        .map(|x| SignVector::new(perm.iter().map(|&i| x.get(i)).collect()))
        .filter(|x| !m.covectors().iter().any(|y| x.conforms_to(y)))
        .collect();
    let weak_map = uncovered.is_empty();
    let underlying_weak_map = if weak_map {
        let lm = underlying_matroid(m)?;
        let ln = underlying_matroid(n)?;
        Some(is_weak_map_matroid(&lm, &ln)?.weak_map)
    } else {
        None
    };
    Ok(WeakMapReport {
        weak_map,
        rank_witnesses: Vec::new(),
        uncovered,
        underlying_weak_map,
        checked: n.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{load_matroid, MatroidSpec};
    use crate::om::VectorConfig;

    fn n134() -> GeometricLattice {
        let spec = MatroidSpec::from_json(
            r#"{"format":"flats","ground_set":[1,2,3,4],
                "flats":[[],[1],[2],[3],[4],[1,2],[2,3],[2,4],[1,3,4],[1,2,3,4]]}"#,
        )
        .unwrap();
        load_matroid(&spec).unwrap()
    }

    #[test]
    fn uniform_to_n134() {
        let u = load_matroid(&MatroidSpec::Uniform { r: 3, n: 4 }).unwrap();
        let n = n134();
        assert!(is_weak_map_matroid(&u, &n).unwrap().weak_map);
        assert!(is_weak_map_matroid(&u, &u).unwrap().weak_map);
        let back = is_weak_map_matroid(&n, &u).unwrap();
        assert!(!back.weak_map);
        assert_eq!(back.rank_witnesses.len(), 1);
        assert_eq!(back.rank_witnesses[0].subset, vec!["1", "3", "4"]);
        assert_eq!((back.rank_witnesses[0].rank_m, back.rank_witnesses[0].rank_n), (2, 3));
    }

    #[test]
    fn labels_are_matched_not_positions() {
        let u = load_matroid(&MatroidSpec::Uniform { r: 3, n: 4 }).unwrap();
        let spec = MatroidSpec::from_json(
            r#"{"format":"flats","ground_set":[4,3,2,1],
                "flats":[[],[1],[2],[3],[4],[1,2],[2,3],[2,4],[1,3,4],[1,2,3,4]]}"#,
        )
        .unwrap();
        let shuffled = load_matroid(&spec).unwrap();
        assert!(!is_weak_map_matroid(&shuffled, &u).unwrap().weak_map);
        assert!(is_weak_map_matroid(&u, &shuffled).unwrap().weak_map);
    }

    #[test]
    fn specialization_of_u24() {
        let generic = VectorConfig::from_json(
            r#"{"dimension":2,"columns":{"1":[1,0],"2":[0,1],"3":[1,1],"4":[1,-1]}}"#,
        )
        .unwrap();
        let special = VectorConfig::from_json(
            r#"{"dimension":2,"columns":{"1":[1,0],"2":[0,1],"3":[0,1],"4":[1,-1]}}"#,
        )
        .unwrap();
        let m = CovectorSet::from_vectors(&generic).unwrap();
        let n = CovectorSet::from_vectors(&special).unwrap();
        let forward = is_weak_map_covectors(&m, &n).unwrap();
        assert!(forward.weak_map);
        assert_eq!(forward.underlying_weak_map, Some(true));
        let back = is_weak_map_covectors(&n, &m).unwrap();
        assert!(!back.weak_map);
        assert!(!back.uncovered.is_empty());
    }
}
