//! Exhaustive search for a sign-preserving simplicial map
//! `S_0̂(F, M) -> S_0̂(F, N)` that sends each `G_ε` to some `H_ε` with
//! `G ⊆ H`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::weak::reindex_lattice;
use crate::error::{Error, Result};
use crate::lattice::{Flag, GeometricLattice};
use crate::sign::{Sign, SignVector};
use crate::sphere::{format_face, SignedVertex, SphereRep};
use crate::topo::SimplicialComplex;

pub const DEFAULT_MAX_ASSIGNMENTS: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub face: Vec<String>,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub found: bool,
    pub map: Option<BTreeMap<String, String>>,
    pub obstruction: Option<Obstruction>,
    /// The map on vertices, when found.
    #[serde(skip)]
    pub vertex_map: Option<BTreeMap<SignedVertex, SignedVertex>>,
    /// The obstructing face and the candidate images of each of its vertices.
    #[serde(skip)]
    pub certificate: Option<Vec<(SignedVertex, Vec<SignedVertex>)>>,
    /// Tentative vertex assignments made by the search.
    #[serde(skip)]
    pub assignments: u64,
}

struct Search<'a> {
    vertices: Vec<SignedVertex>,
    candidates: Vec<Vec<SignedVertex>>,
    /// Facets of the source as vertex indices.
    facets: Vec<Vec<usize>>,
    facets_of: Vec<Vec<usize>>,
    target: &'a SimplicialComplex<SignedVertex>,
    count: u64,
    cap: u64,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.count += 1;
        if self.count > self.cap {
            return Err(Error::SearchCapExceeded(self.cap));
        }
        Ok(())
    }

    fn image_is_face(&self, assigned: &[Option<SignedVertex>], members: &[usize]) -> bool {
        let mut image: Vec<SignedVertex> = members.iter().filter_map(|&i| assigned[i]).collect();
        image.sort();
        image.dedup();
        self.target.contains_face(&image)
    }

    /// Backtracking over all vertices; facets through the newly assigned
    /// vertex are re-checked after each step.
    fn extend(&mut self, assigned: &mut Vec<Option<SignedVertex>>, i: usize) -> Result<bool> {
        if i == self.vertices.len() {
            return Ok(true);
        }
        for k in 0..self.candidates[i].len() {
            self.tick()?;
            assigned[i] = Some(self.candidates[i][k]);
            let ok = self.facets_of[i]
                .iter()
                .all(|&f| self.image_is_face(assigned, &self.facets[f]));
            if ok && self.extend(assigned, i + 1)? {
                return Ok(true);
            }
        }
        assigned[i] = None;
        Ok(false)
    }

    /// Whether some choice of candidates maps `face` onto a face.
    fn feasible(&mut self, face: &[usize]) -> Result<bool> {
        let mut assigned = vec![None; self.vertices.len()];
        self.feasible_from(face, 0, &mut assigned)
    }

    fn feasible_from(
        &mut self,
        face: &[usize],
        k: usize,
        assigned: &mut Vec<Option<SignedVertex>>,
    ) -> Result<bool> {
        if k == face.len() {
            return Ok(true);
        }
        let i = face[k];
        for c in 0..self.candidates[i].len() {
            self.tick()?;
            assigned[i] = Some(self.candidates[i][c]);
            if self.image_is_face(assigned, &face[..=k]) && self.feasible_from(face, k + 1, assigned)? {
                assigned[i] = None;
                return Ok(true);
            }
        }
        assigned[i] = None;
        Ok(false)
    }
}

/// Searches for the map. When none exists, the certificate is found by
/// scanning facets of the source in sign-vector order for the first one that
/// no choice of images sends to a face, then dropping its vertices one at a
/// time, in order, while it stays infeasible. The result is a minimal face of
/// the source that cannot be mapped to a face of the target.
///
/// Fails with [`Error::SearchCapExceeded`] after `max_assignments` tentative
/// assignments. If `flag` is not a complete flag of `N`, no map is defined and
/// the result says so.
pub fn poset_map_search(
    m: &GeometricLattice,
    n: &GeometricLattice,
    flag: &Flag,
    max_assignments: u64,
) -> Result<SearchResult> {
    let n = reindex_lattice(n, m.ground())?;
    let ground = m.ground();
    let flag_n = match Flag::new(&n, flag.chain().to_vec()) {
        Ok(f) => f,
        Err(e) => {
            return Ok(SearchResult {
                found: false,
                map: None,
                obstruction: Some(Obstruction {
                    face: Vec::new(),
                    reason: format!("obstacle 1: the flag is not a complete flag of N ({e})"),
                }),
                vertex_map: None,
                certificate: None,
                assignments: 0,
            })
        }
    };
    let rep_m = SphereRep::new(m, flag.clone())?;
    let rep_n = SphereRep::new(&n, flag_n)?;
    let source = rep_m.build_s(m.bottom()).complex;
    let target = rep_n.build_s(n.bottom()).complex;

    let vertices: Vec<SignedVertex> = m
        .coatoms()
        .iter()
        .flat_map(|&c| Sign::BOTH.map(|s| SignedVertex::new(c, s)))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let position = |v: &SignedVertex| vertices.binary_search(v).expect("source vertex");
    let candidates: Vec<Vec<SignedVertex>> = vertices
        .iter()
        .map(|v| {
            let closure = n.closure(v.coatom);
            let mut c: Vec<SignedVertex> = n
                .coatoms()
                .iter()
                .filter(|&&h| closure.is_subset(h))
                .map(|&h| SignedVertex::new(h, v.sign))
                .collect();
            c.sort();
            c
        })
        .collect();
    let facets: Vec<Vec<usize>> = source
        .facets()
        .iter()
        .map(|f| f.iter().map(position).collect())
        .collect();
    let mut facets_of = vec![Vec::new(); vertices.len()];
    for (k, f) in facets.iter().enumerate() {
        for &i in f {
            facets_of[i].push(k);
        }
    }
    let mut search = Search {
        vertices: vertices.clone(),
        candidates,
        facets,
        facets_of,
        target: &target,
        count: 0,
        cap: max_assignments,
    };

    let mut assigned = vec![None; vertices.len()];
    if search.extend(&mut assigned, 0)? {
        let vertex_map: BTreeMap<SignedVertex, SignedVertex> = vertices
            .iter()
            .zip(&assigned)
            .map(|(&v, w)| (v, w.expect("complete assignment")))
            .collect();
        return Ok(SearchResult {
            found: true,
            map: Some(
                vertex_map
                    .iter()
                    .map(|(v, w)| (v.display(ground), w.display(ground)))
                    .collect(),
            ),
            obstruction: None,
            vertex_map: Some(vertex_map),
            certificate: None,
            assignments: search.count,
        });
    }
    let searched = search.count;

    let mut certificate = None;
    for v in SignVector::all_full(m.rank()) {
        let facet: Vec<usize> = rep_m.sigma_of(&v, m.bottom()).iter().map(position).collect();
        if search.feasible(&facet)? {
            continue;
        }
        let mut face = facet.clone();
        for &x in &facet {
            let trial: Vec<usize> = face.iter().copied().filter(|&y| y != x).collect();
            if !search.feasible(&trial)? {
                face = trial;
            }
        }
        certificate = Some(face);
        break;
    }
    let (obstruction, certificate) = match certificate {
        Some(face) => {
            let pairs: Vec<(SignedVertex, Vec<SignedVertex>)> = face
                .iter()
                .map(|&i| (vertices[i], search.candidates[i].clone()))
                .collect();
            let reason = if pairs.iter().any(|(_, c)| c.is_empty()) {
                "some vertex has no admissible image".to_string()
            } else if pairs.iter().all(|(_, c)| c.len() == 1) {
                let mut images: Vec<SignedVertex> = pairs.iter().map(|(_, c)| c[0]).collect();
                images.sort();
                format!(
                    "the forced images {} span no face of S_0̂(F, N)",
                    format_face(ground, &images)
                )
            } else {
                "no choice of admissible images spans a face of S_0̂(F, N)".to_string()
            };
            let face_labels = pairs.iter().map(|(v, _)| v.display(ground)).collect();
            (
                Obstruction {
                    face: face_labels,
                    reason,
                },
                Some(pairs),
            )
        }
        None => (
            Obstruction {
                face: Vec::new(),
                reason: "every face maps somewhere on its own, but no global map exists".into(),
            },
            None,
        ),
    };
    Ok(SearchResult {
        found: false,
        map: None,
        obstruction: Some(obstruction),
        vertex_map: None,
        certificate,
        assignments: searched,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{load_matroid, MatroidSpec};

    fn n134() -> GeometricLattice {
        let spec = MatroidSpec::from_json(
            r#"{"format":"flats","ground_set":[1,2,3,4],
                "flats":[[],[1],[2],[3],[4],[1,2],[2,3],[2,4],[1,3,4],[1,2,3,4]]}"#,
        )
        .unwrap();
        load_matroid(&spec).unwrap()
    }

    fn flag(l: &GeometricLattice, sets: &[&[&str]]) -> Flag {
        Flag::new(l, sets.iter().map(|s| l.ground().subset(s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn identity_is_found() {
        let u = load_matroid(&MatroidSpec::Uniform { r: 3, n: 4 }).unwrap();
        let f = flag(&u, &[&[], &["1"], &["1", "2"], &["1", "2", "3", "4"]]);
        let r = poset_map_search(&u, &u, &f, DEFAULT_MAX_ASSIGNMENTS).unwrap();
        assert!(r.found);
        assert!(r.vertex_map.unwrap().iter().all(|(v, w)| v == w));
    }

    #[test]
    fn uniform_to_n134_is_obstructed() {
        let u = load_matroid(&MatroidSpec::Uniform { r: 3, n: 4 }).unwrap();
        let f = flag(&u, &[&[], &["1"], &["1", "2"], &["1", "2", "3", "4"]]);
        let r = poset_map_search(&u, &n134(), &f, DEFAULT_MAX_ASSIGNMENTS).unwrap();
        assert!(!r.found);
        let o = r.obstruction.unwrap();
        assert_eq!(o.face, vec!["{1,4}-", "{3,4}+"]);
        assert!(o.reason.contains("{{1,3,4}+, {1,3,4}-}"), "{}", o.reason);
    }

    #[test]
    fn incomplete_flag_in_target() {
        let u = load_matroid(&MatroidSpec::Uniform { r: 3, n: 4 }).unwrap();
        let f = flag(&u, &[&[], &["1"], &["1", "3"], &["1", "2", "3", "4"]]);
        let r = poset_map_search(&u, &n134(), &f, DEFAULT_MAX_ASSIGNMENTS).unwrap();
        assert!(!r.found);
        assert!(r.obstruction.unwrap().reason.starts_with("obstacle 1"));
    }

    #[test]
    fn cap_is_enforced() {
        let u = load_matroid(&MatroidSpec::Uniform { r: 3, n: 4 }).unwrap();
        let f = flag(&u, &[&[], &["1"], &["1", "2"], &["1", "2", "3", "4"]]);
        assert!(matches!(
            poset_map_search(&u, &u, &f, 3),
            Err(Error::SearchCapExceeded(3))
        ));
    }
}
