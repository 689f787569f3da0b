//! JSON form of complexes: a sorted vertex list and maximal faces as index
//! lists into it.

use serde::{Deserialize, Serialize};

use super::RepComplex;
use crate::elements::GroundSet;
use crate::error::{Error, Result};
use crate::sign::Sign;
use crate::topo::SimplicialComplex;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub coatom: Vec<String>,
    pub sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexJson<V> {
    pub vertices: Vec<V>,
    pub maximal_faces: Vec<Vec<usize>>,
}

impl RepComplex {
    pub fn to_json(&self, ground: &GroundSet) -> ComplexJson<VertexJson> {
        let vertices = self.complex.vertices();
        let maximal_faces = self
            .complex
            .facets()
            .iter()
            .map(|f| {
                f.iter()
                    .map(|v| vertices.binary_search(v).expect("vertex of the complex"))
                    .collect()
            })
            .collect();
        ComplexJson {
            vertices: vertices
                .iter()
                .map(|v| VertexJson {
                    coatom: ground.labels_of(v.coatom),
                    sign: v.sign,
                })
                .collect(),
            maximal_faces,
        }
    }
}

/// Reads a complex with arbitrary vertex payloads; vertices become their
/// indices.
pub fn complex_from_json<V>(json: &ComplexJson<V>) -> Result<SimplicialComplex<usize>> {
    let n = json.vertices.len();
    if let Some(bad) = json.maximal_faces.iter().flatten().find(|&&i| i >= n) {
        return Err(Error::Malformed(format!(
            "face refers to vertex {bad}, but there are only {n}"
        )));
    }
    Ok(SimplicialComplex::from_faces(json.maximal_faces.iter().cloned()))
}
