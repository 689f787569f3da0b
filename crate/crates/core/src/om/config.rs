//! Rational vector configurations: one column per ground element.

use indexmap::IndexMap;
use num_rational::BigRational;
use serde::Deserialize;

use crate::elements::GroundSet;
use crate::error::{Error, Result};
use crate::lattice::{GeometricLattice, LinearMatroid};
use crate::linalg::{ColumnMatrix, Scalar};

#[derive(Deserialize)]
struct VectorConfigJson {
    dimension: usize,
    columns: IndexMap<String, Vec<Scalar>>,
}

/// Columns `v_e` in `Q^dimension` whose span is all of `Q^dimension`.
#[derive(Clone, Debug)]
pub struct VectorConfig {
    ground: GroundSet,
    dimension: usize,
    columns: Vec<Vec<BigRational>>,
}

impl VectorConfig {
    pub fn new(ground: GroundSet, dimension: usize, columns: Vec<Vec<BigRational>>) -> Result<Self> {
        if ground.len() != columns.len() {
            return Err(Error::Malformed(format!(
                "{} labels for {} columns",
                ground.len(),
                columns.len()
            )));
        }
        if let Some((e, c)) = columns.iter().enumerate().find(|(_, c)| c.len() != dimension) {
            return Err(Error::Malformed(format!(
                "column {} has {} entries, expected {dimension}",
                ground.label(e),
                c.len()
            )));
        }
        let config = VectorConfig {
            ground,
            dimension,
            columns,
        };
        let rank = config.matrix()?.full_rank();
        if rank != dimension {
            return Err(Error::RankDeficient { rank, dimension });
        }
        Ok(config)
    }

    /// Parses `{"dimension": r, "columns": {"<label>": ["n/d", ...], ...}}`,
    /// keeping the column order of the file.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: VectorConfigJson = serde_json::from_str(text)?;
        let ground = GroundSet::new(raw.columns.keys().cloned())?;
        let columns = raw
            .columns
            .values()
            .map(|c| c.iter().map(Scalar::to_rational).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(ground, raw.dimension, columns)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn column(&self, e: usize) -> &[BigRational] {
        &self.columns[e]
    }

    pub fn columns(&self) -> &[Vec<BigRational>] {
        &self.columns
    }

    pub fn matrix(&self) -> Result<ColumnMatrix> {
        ColumnMatrix::rational(&self.columns)
    }

    pub fn linear_matroid(&self) -> Result<LinearMatroid> {
        Ok(LinearMatroid {
            ground: self.ground.clone(),
            matrix: self.matrix()?,
        })
    }

    pub fn lattice(&self) -> Result<GeometricLattice> {
        self.linear_matroid()?.lattice()
    }

    /// The configuration without element `e`; fails if `e` is a coloop.
    pub fn deletion(&self, e: usize) -> Result<VectorConfig> {
        if e >= self.len() {
            return Err(Error::UnknownElement(e.to_string()));
        }
        let labels = self
            .ground
            .labels()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, l)| l.clone());
        let mut columns = self.columns.clone();
        columns.remove(e);
        VectorConfig::new(GroundSet::new(labels)?, self.dimension, columns)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_json_in_file_order() {
        let v = VectorConfig::from_json(
            r#"{"dimension":2,"columns":{"b":["1","0"],"a":["0","1/2"],"c":[1,1]}}"#,
        )
        .unwrap();
        assert_eq!(v.ground().labels(), &["b", "a", "c"]);
        assert_eq!(v.lattice().unwrap().rank(), 2);
    }

    #[test]
    fn rank_deficiency_is_an_error() {
        let err = VectorConfig::from_json(r#"{"dimension":2,"columns":{"1":[1,1],"2":[2,2]}}"#);
        assert!(matches!(err, Err(Error::RankDeficient { rank: 1, dimension: 2 })));
    }

    #[test]
    fn deleting_a_coloop_fails() {
        let v = VectorConfig::from_json(r#"{"dimension":2,"columns":{"1":[1,0],"2":[0,1],"3":[1,1]}}"#)
            .unwrap();
        assert!(v.deletion(2).is_ok());
        let coord = VectorConfig::from_json(r#"{"dimension":2,"columns":{"1":[1,0],"2":[0,1]}}"#)
            .unwrap();
        assert!(coord.deletion(0).is_err());
    }
}
