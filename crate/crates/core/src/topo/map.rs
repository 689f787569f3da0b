//! Vertex maps between simplicial complexes.

use std::collections::BTreeMap;
use std::fmt::Debug;

use super::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// A map on vertices, extended to faces by taking images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap<V, W> {
    vertex_map: BTreeMap<V, W>,
}

impl<V: Ord + Clone + Debug, W: Ord + Clone + Debug> SimplicialMap<V, W> {
    pub fn new(vertex_map: BTreeMap<V, W>) -> Self {
        SimplicialMap { vertex_map }
    }

    pub fn from_fn(vertices: impl IntoIterator<Item = V>, f: impl Fn(&V) -> W) -> Self {
        SimplicialMap {
            vertex_map: vertices.into_iter().map(|v| {
                let w = f(&v);
                (v, w)
            }).collect(),
        }
    }

    pub fn vertex_map(&self) -> &BTreeMap<V, W> {
        &self.vertex_map
    }

    pub fn apply(&self, v: &V) -> Option<&W> {
        self.vertex_map.get(v)
    }

    /// Image of a face as a sorted vertex list.
    pub fn apply_face(&self, face: &[V]) -> Result<Vec<W>> {
        let mut out = face
            .iter()
            .map(|v| {
                self.vertex_map
                    .get(v)
                    .cloned()
                    .ok_or_else(|| Error::Malformed(format!("vertex {v:?} is not in the domain")))
            })
            .collect::<Result<Vec<W>>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Checks that every facet of `source` lands on a face of `target`.
    pub fn check_simplicial(
        &self,
        source: &SimplicialComplex<V>,
        target: &SimplicialComplex<W>,
    ) -> Result<()> {
        for facet in source.facets() {
            let image = self.apply_face(facet)?;
            if !target.contains_face(&image) {
                return Err(Error::NotSimplicial(format!("{facet:?}")));
            }
        }
        Ok(())
    }

    pub fn image(&self, source: &SimplicialComplex<V>) -> Result<SimplicialComplex<W>> {
        let faces = source
            .facets()
            .iter()
            .map(|f| self.apply_face(f))
            .collect::<Result<Vec<_>>>()?;
        Ok(SimplicialComplex::from_faces(faces))
    }

    pub fn compose<U: Ord + Clone + Debug>(&self, after: &SimplicialMap<W, U>) -> Result<SimplicialMap<V, U>> {
        let vertex_map = self
            .vertex_map
            .iter()
            .map(|(v, w)| {
                after
                    .vertex_map
                    .get(w)
                    .cloned()
                    .map(|u| (v.clone(), u))
                    .ok_or_else(|| Error::Malformed(format!("vertex {w:?} is not in the domain")))
            })
            .collect::<Result<_>>()?;
        Ok(SimplicialMap { vertex_map })
    }
}

/// Checks that `inv` is a simplicial involution of `k` and that no face is
/// mapped to itself, i.e. the induced `Z/2` action is free. Returns `false`
/// when some face is fixed, and an error when `inv` is not an involution.
pub fn z2_free_check<V: Ord + Clone + Debug>(
    k: &SimplicialComplex<V>,
    inv: &SimplicialMap<V, V>,
) -> Result<bool> {
    for v in k.vertices() {
        let w = inv
            .apply(&v)
            .ok_or_else(|| Error::NotInvolution(format!("{v:?} has no image")))?;
        if inv.apply(w) != Some(&v) {
            return Err(Error::NotInvolution(format!("{v:?} -> {w:?} does not map back")));
        }
    }
    inv.check_simplicial(k, k)?;
    for face in k.all_faces() {
        if inv.apply_face(&face)? == face {
            return Ok(false);
        }
    }
    Ok(true)
}
