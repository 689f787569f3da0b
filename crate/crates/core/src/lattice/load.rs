//! Matroid input formats: explicit flats, linear columns, uniform.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::GeometricLattice;
use crate::elements::{ElementSet, Flat, GroundSet};
use crate::error::{Error, Result};
use crate::linalg::{ColumnMatrix, Scalar};

/// Upper bound on the number of flats any loader will materialize.
const MAX_FLATS: usize = 200_000;

/// An element label; files may use numbers or strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Int(i64),
    Text(String),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(i) => write!(f, "{i}"),
            Label::Text(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldName {
    Q,
    GF,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "format", rename_all = "lowercase")]
pub enum MatroidSpec {
    Flats {
        ground_set: Vec<Label>,
        flats: Vec<Vec<Label>>,
    },
    Linear {
        field: FieldName,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        p: Option<u64>,
        columns: Vec<Vec<Scalar>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ground_set: Option<Vec<Label>>,
    },
    Uniform {
        r: usize,
        n: usize,
    },
}

impl MatroidSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Builds the lattice of flats described by `spec` and validates it.
pub fn load_matroid(spec: &MatroidSpec) -> Result<GeometricLattice> {
    match spec {
        MatroidSpec::Flats { ground_set, flats } => {
            let ground = GroundSet::new(ground_set.iter().map(Label::to_string))?;
            let sets = flats
                .iter()
                .map(|f| {
                    let labels: Vec<String> = f.iter().map(Label::to_string).collect();
                    ground.subset(&labels)
                })
                .collect::<Result<Vec<_>>>()?;
            GeometricLattice::from_flats(ground, sets)
        }
        MatroidSpec::Linear { .. } => LinearMatroid::from_spec(spec)?.lattice(),
        MatroidSpec::Uniform { r, n } => uniform(*r, *n),
    }
}

fn uniform(r: usize, n: usize) -> Result<GeometricLattice> {
    if r > n {
        return Err(Error::Malformed(format!("uniform rank {r} exceeds n = {n}")));
    }
    let ground = GroundSet::numbered(n)?;
    let count: usize = (0..r).map(|k| binomial(n, k)).sum::<usize>() + 1;
    if count > MAX_FLATS {
        return Err(Error::TooLarge {
            what: "number of flats",
            size: count,
            limit: MAX_FLATS,
        });
    }
    let mut flats: Vec<Flat> = ElementSet::full(n)
        .subsets()
        .filter(|s| s.len() < r)
        .collect();
    flats.push(ground.all());
    GeometricLattice::from_flats(ground, flats)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// A linear matroid together with its column matrix, so that lattice ranks
/// can be cross-checked against matrix ranks.
#[derive(Clone, Debug)]
pub struct LinearMatroid {
    pub ground: GroundSet,
    pub matrix: ColumnMatrix,
}

impl LinearMatroid {
    pub fn from_spec(spec: &MatroidSpec) -> Result<Self> {
        let MatroidSpec::Linear {
            field,
            p,
            columns,
            ground_set,
        } = spec
        else {
            return Err(Error::Malformed("not a linear matroid spec".into()));
        };
        let ground = match ground_set {
            Some(labels) => {
                if labels.len() != columns.len() {
                    return Err(Error::Malformed(format!(
                        "{} labels for {} columns",
                        labels.len(),
                        columns.len()
                    )));
                }
                GroundSet::new(labels.iter().map(Label::to_string))?
            }
            None => GroundSet::numbered(columns.len())?,
        };
        let matrix = match field {
            FieldName::Q => {
                if p.is_some() {
                    return Err(Error::Malformed("field Q takes no modulus".into()));
                }
                let cols = columns
                    .iter()
                    .map(|c| c.iter().map(Scalar::to_rational).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                ColumnMatrix::rational(&cols)?
            }
            FieldName::GF => {
                let p = p.ok_or_else(|| Error::Malformed("field GF needs \"p\"".into()))?;
                let cols = columns
                    .iter()
                    .map(|c| c.iter().map(integer_scalar).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                ColumnMatrix::modular(p, &cols)?
            }
        };
        Ok(LinearMatroid { ground, matrix })
    }

    /// Enumerates flats rank by rank as closures of `flat ∪ {e}`.
    pub fn lattice(&self) -> Result<GeometricLattice> {
        let n = self.ground.len();
        let bottom = self.matrix.span_closure(ElementSet::EMPTY);
        let mut all: BTreeSet<Flat> = BTreeSet::from([bottom]);
        let mut level = vec![bottom];
        while !level.is_empty() {
            let mut next = BTreeSet::new();
            for &x in &level {
                let mut seen = x;
                for e in 0..n {
                    if seen.contains(e) {
                        continue;
                    }
                    let y = self.matrix.span_closure(x.with(e));
                    seen = seen.union(y);
                    next.insert(y);
                }
            }
            if all.len() + next.len() > MAX_FLATS {
                return Err(Error::TooLarge {
                    what: "number of flats",
                    size: all.len() + next.len(),
                    limit: MAX_FLATS,
                });
            }
            all.extend(next.iter().copied());
            level = next.into_iter().collect();
        }
        GeometricLattice::from_flats(self.ground.clone(), all)
    }
}

fn integer_scalar(s: &Scalar) -> Result<i64> {
    match s {
        Scalar::Int(i) => Ok(*i),
        Scalar::Text(t) => t
            .trim()
            .parse()
            .map_err(|_| Error::Malformed(format!("not an integer: {t:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_rank_exceeding_n_is_malformed() {
        assert!(matches!(
            load_matroid(&MatroidSpec::Uniform { r: 3, n: 2 }),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn boolean_is_uniform_n_n() {
        let l = load_matroid(&MatroidSpec::Uniform { r: 3, n: 3 }).unwrap();
        assert_eq!(l.len(), 8);
        assert_eq!(l.rank(), 3);
    }

    #[test]
    fn parses_json_formats() {
        let spec = MatroidSpec::from_json(r#"{"format":"uniform","r":2,"n":4}"#).unwrap();
        assert_eq!(spec, MatroidSpec::Uniform { r: 2, n: 4 });
        let spec = MatroidSpec::from_json(
            r#"{"format":"linear","field":"GF","p":4,"columns":[[1],[1]]}"#,
        )
        .unwrap();
        assert!(matches!(load_matroid(&spec), Err(Error::NotPrime(4))));
        let spec = MatroidSpec::from_json(
            r#"{"format":"linear","field":"Q","columns":[["1/2",0],[0,"3"]]}"#,
        )
        .unwrap();
        assert_eq!(load_matroid(&spec).unwrap().len(), 4);
        assert!(MatroidSpec::from_json(r#"{"format":"nope"}"#).is_err());
    }

    #[test]
    fn loops_and_parallel_elements() {
        // column 3 is zero (a loop), columns 1 and 2 parallel
        let spec = MatroidSpec::from_json(
            r#"{"format":"linear","field":"Q","columns":[[1,0],[2,0],[0,0],[0,1]]}"#,
        )
        .unwrap();
        let l = load_matroid(&spec).unwrap();
        let g = l.ground();
        assert_eq!(l.bottom(), g.subset(&["3"]).unwrap());
        assert_eq!(l.atoms().len(), 2);
        assert!(l.contains(g.subset(&["1", "2", "3"]).unwrap()));
    }
}
