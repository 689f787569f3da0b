use serde::{Deserialize, Serialize};

use super::{GeometricLattice, Label};
use crate::elements::Flat;
use crate::error::{Error, Result};

/// A complete flag `0̂ = F_0 < F_1 < .. < F_r = 1̂`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Flag {
    chain: Vec<Flat>,
}

impl Flag {
    /// Validates that `chain` is a maximal chain of `lattice`.
    pub fn new(lattice: &GeometricLattice, chain: Vec<Flat>) -> Result<Self> {
        let g = lattice.ground();
        if chain.len() != lattice.rank() + 1 {
            return Err(Error::IncompleteFlag(format!(
                "expected {} flats, got {}",
                lattice.rank() + 1,
                chain.len()
            )));
        }
        for (i, &f) in chain.iter().enumerate() {
            if !lattice.contains(f) {
                return Err(Error::IncompleteFlag(format!("{} is not a flat", g.format(f))));
            }
            if lattice.rank_of(f) != i {
                return Err(Error::IncompleteFlag(format!(
                    "{} has rank {}, expected {i}",
                    g.format(f),
                    lattice.rank_of(f)
                )));
            }
            if i > 0 && !chain[i - 1].is_proper_subset(f) {
                return Err(Error::IncompleteFlag(format!(
                    "{} does not contain {}",
                    g.format(f),
                    g.format(chain[i - 1])
                )));
            }
        }
        Ok(Flag { chain })
    }

    pub fn chain(&self) -> &[Flat] {
        &self.chain
    }

    pub fn get(&self, i: usize) -> Flat {
        self.chain[i]
    }

    /// Number of steps, i.e. the rank of the lattice.
    pub fn rank(&self) -> usize {
        self.chain.len() - 1
    }

    /// Whether the same chain of sets is a complete flag of `other`.
    pub fn is_complete_in(&self, other: &GeometricLattice) -> bool {
        Flag::new(other, self.chain.clone()).is_ok()
    }

    pub fn describe(&self, lattice: &GeometricLattice) -> String {
        let g = lattice.ground();
        self.chain
            .iter()
            .map(|f| g.format(*f))
            .collect::<Vec<_>>()
            .join(" < ")
    }
}

/// Greedy flag: from `0̂`, repeatedly step to the lexicographically smallest
/// flat covering the current one.
pub fn default_flag(lattice: &GeometricLattice) -> Flag {
    let mut chain = vec![lattice.bottom()];
    while chain.len() <= lattice.rank() {
        let cur = *chain.last().unwrap();
        let next = lattice
            .covers_of(cur)
            .into_iter()
            .min()
            .expect("a non-top flat of a geometric lattice has a cover");
        chain.push(next);
    }
    Flag { chain }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagRestriction {
    /// `X ∨ F_i`, deduplicated: a maximal chain of `[X, 1̂]`.
    pub upper: Vec<Flat>,
    /// `X ∧ F_i`, deduplicated. A chain of `[0̂, X]` that need not be maximal
    /// outside modular lattices.
    pub lower: Vec<Flat>,
}

pub fn flag_restrict(lattice: &GeometricLattice, flag: &Flag, x: Flat) -> FlagRestriction {
    let mut upper: Vec<Flat> = flag.chain.iter().map(|f| lattice.join(x, *f)).collect();
    let mut lower: Vec<Flat> = flag.chain.iter().map(|f| lattice.meet(x, *f)).collect();
    upper.dedup();
    lower.dedup();
    FlagRestriction { upper, lower }
}

/// Flag as written in input files: `"default"` or `{"chain": [[..], ..]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FlagSpec {
    Named(String),
    Chain { chain: Vec<Vec<Label>> },
}

impl FlagSpec {
    pub fn resolve(&self, lattice: &GeometricLattice) -> Result<Flag> {
        match self {
            FlagSpec::Named(s) if s == "default" => Ok(default_flag(lattice)),
            FlagSpec::Named(s) => Err(Error::Malformed(format!("unknown flag {s:?}"))),
            FlagSpec::Chain { chain } => {
                let g = lattice.ground();
                let sets = chain
                    .iter()
                    .map(|f| {
                        let labels: Vec<String> = f.iter().map(Label::to_string).collect();
                        g.subset(&labels)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Flag::new(lattice, sets)
            }
        }
    }
}
