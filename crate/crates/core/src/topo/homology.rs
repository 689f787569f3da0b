//! Reduced integral homology of simplicial complexes.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::complex::SimplicialComplex;
use super::snf::smith_invariants;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimHomology {
    pub d: usize,
    pub betti: usize,
    /// Torsion coefficients `> 1`, ascending.
    pub torsion: Vec<u64>,
}

/// `H̃_d(K; Z)` for `d = 0..=dim K`, each as `Z^betti ⊕ ⊕ Z/t`.
///
/// The empty complex has `H̃_{-1} = Z`, which is outside the range of `d`;
/// it is reported with no dimensions and recognised by
/// [`HomologyProfile::is_sphere`] with `d = -1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub dims: Vec<DimHomology>,
}

impl HomologyProfile {
    pub fn betti(&self, d: usize) -> usize {
        self.dims.get(d).map_or(0, |h| h.betti)
    }

    pub fn torsion(&self, d: usize) -> &[u64] {
        self.dims.get(d).map_or(&[], |h| &h.torsion)
    }

    /// All reduced groups vanish.
    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|h| h.betti == 0 && h.torsion.is_empty())
    }

    /// Reduced homology of `S^d`: `Z` in degree `d`, zero elsewhere. For
    /// `d = -1` this holds only for the empty complex.
    pub fn is_sphere(&self, d: isize) -> bool {
        if d < 0 {
            return self.dims.is_empty();
        }
        let d = d as usize;
        !self.dims.is_empty()
            && self.dims.iter().all(|h| {
                h.torsion.is_empty() && h.betti == usize::from(h.d == d)
            })
            && self.dims.len() > d
    }

    /// Same groups in every degree, ignoring trailing zero degrees.
    pub fn agrees_with(&self, other: &HomologyProfile) -> bool {
        if self.dims.is_empty() || other.dims.is_empty() {
            return self.dims.is_empty() == other.dims.is_empty();
        }
        let n = self.dims.len().max(other.dims.len());
        (0..n).all(|d| self.betti(d) == other.betti(d) && self.torsion(d) == other.torsion(d))
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dims.is_empty() {
            return write!(f, "H~_-1 = Z");
        }
        let parts: Vec<String> = self
            .dims
            .iter()
            .map(|h| {
                let mut terms = Vec::new();
                match h.betti {
                    0 => {}
                    1 => terms.push("Z".to_string()),
                    b => terms.push(format!("Z^{b}")),
                }
                terms.extend(h.torsion.iter().map(|t| format!("Z/{t}")));
                if terms.is_empty() {
                    terms.push("0".into());
                }
                format!("H~_{} = {}", h.d, terms.join(" + "))
            })
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Reduced homology from the augmented chain complex, via Smith normal form
/// of each boundary map. Boundary maps of different degrees are reduced on
/// separate threads.
pub fn reduced_homology<V: Ord + Clone>(k: &SimplicialComplex<V>) -> HomologyProfile {
    if k.is_empty() {
        return HomologyProfile { dims: Vec::new() };
    }
    let verts = k.vertices();
    let indexed = k.map_vertices(|v| verts.binary_search(v).expect("vertex of k"));
    let faces = indexed.all_faces();
    let top = faces.last().map_or(0, Vec::len) - 1;
    let mut by_dim: Vec<Vec<Vec<usize>>> = vec![Vec::new(); top + 1];
    for f in faces {
        by_dim[f.len() - 1].push(f);
    }
    let index: Vec<HashMap<&[usize], usize>> = by_dim
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect())
        .collect();

    // invariants[d] belongs to the boundary C_d -> C_{d-1}; C_{-1} = Z
    let invariants: Vec<Vec<BigInt>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..=top)
            .map(|d| {
                let by_dim = &by_dim;
                let index = &index;
                s.spawn(move || {
                    if d == 0 {
                        let entries: Vec<_> = (0..by_dim[0].len()).map(|c| (0, c, 1i64)).collect();
                        return smith_invariants(1, by_dim[0].len(), &entries);
                    }
                    let mut entries = Vec::new();
                    for (c, face) in by_dim[d].iter().enumerate() {
                        let mut sub = Vec::with_capacity(d);
                        for skip in 0..face.len() {
                            sub.clear();
                            sub.extend(face.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, v)| *v));
                            let r = index[d - 1][sub.as_slice()];
                            entries.push((r, c, if skip % 2 == 0 { 1 } else { -1 }));
                        }
                    }
                    smith_invariants(by_dim[d - 1].len(), by_dim[d].len(), &entries)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("homology worker")).collect()
    });

    let dims = (0..=top)
        .map(|d| {
            let rank_d = invariants[d].len();
            let rank_next = invariants.get(d + 1).map_or(0, Vec::len);
            let torsion = invariants
                .get(d + 1)
                .map(|inv| {
                    inv.iter()
                        .filter(|x| !x.is_one())
                        .map(|x| x.to_u64().expect("torsion coefficient fits in u64"))
                        .collect()
                })
                .unwrap_or_default();
            DimHomology {
                d,
                betti: by_dim[d].len() - rank_d - rank_next,
                torsion,
            }
        })
        .collect();
    HomologyProfile { dims }
}

/// `true` iff the complex is non-empty with vanishing reduced homology.
pub fn is_homology_point<V: Ord + Clone>(k: &SimplicialComplex<V>) -> bool {
    !k.is_empty() && reduced_homology(k).is_acyclic()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_and_simplex_are_acyclic() {
        assert!(is_homology_point(&SimplicialComplex::simplex([0usize])));
        assert!(is_homology_point(&SimplicialComplex::simplex(0usize..5)));
        assert!(!is_homology_point(&SimplicialComplex::<usize>::empty()));
    }

    #[test]
    fn spheres() {
        for n in 2..6 {
            let h = reduced_homology(&SimplicialComplex::simplex_boundary(n));
            assert!(h.is_sphere(n as isize - 2), "{h}");
        }
        for d in 1..5 {
            let h = reduced_homology(&SimplicialComplex::cross_polytope_boundary(d));
            assert!(h.is_sphere(d as isize - 1), "{h}");
        }
        assert!(reduced_homology(&SimplicialComplex::<usize>::empty()).is_sphere(-1));
    }

    #[test]
    fn two_points() {
        let k = SimplicialComplex::from_faces([[0usize], [1]]);
        let h = reduced_homology(&k);
        assert_eq!(h.betti(0), 1);
        assert!(h.is_sphere(0));
    }
}
