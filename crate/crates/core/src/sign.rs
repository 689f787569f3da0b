//! Signs and sign vectors over `{+, -, 0}`.
//!
//! A sign vector entry is an `Option<Sign>`, with `None` standing for `0`.
//! The order is componentwise with `0` below both `+` and `-`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self.flip()
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Sign of an integer-like comparison result.
pub fn sign_of(ord: std::cmp::Ordering) -> Option<Sign> {
    match ord {
        std::cmp::Ordering::Greater => Some(Sign::Plus),
        std::cmp::Ordering::Less => Some(Sign::Minus),
        std::cmp::Ordering::Equal => None,
    }
}

/// An element of `{+, -, 0}^I` for a finite ordered index set `I`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(Vec<Option<Sign>>);

impl SignVector {
    pub fn new(entries: Vec<Option<Sign>>) -> Self {
        SignVector(entries)
    }

    pub fn zero(len: usize) -> Self {
        SignVector(vec![None; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<Sign> {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, s: Option<Sign>) {
        self.0[i] = s;
    }

    pub fn entries(&self) -> &[Option<Sign>] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Option::is_none)
    }

    /// Positions with a non-zero entry.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(i, s)| s.map(|_| i))
    }

    /// Positions with a zero entry.
    pub fn zeros(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(i, s)| s.is_none().then_some(i))
    }

    /// Componentwise order: every non-zero entry of `self` agrees with `other`.
    pub fn conforms_to(&self, other: &SignVector) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .all(|(a, b)| a.is_none() || a == b)
    }

    /// Componentwise meet: agreeing entries survive, everything else is `0`.
    pub fn meet(&self, other: &SignVector) -> SignVector {
        SignVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| if a == b { *a } else { None })
                .collect(),
        )
    }

    /// Composition `self ∘ other`: take `self` where non-zero, else `other`.
    pub fn compose(&self, other: &SignVector) -> SignVector {
        SignVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.or(*b))
                .collect(),
        )
    }

    /// Zeroes every position in `positions` (the `X/F` operation).
    pub fn restrict_zero<I: IntoIterator<Item = usize>>(&self, positions: I) -> SignVector {
        let mut out = self.clone();
        for i in positions {
            out.0[i] = None;
        }
        out
    }

    /// Appends a coordinate with value `value`. The caller tracks labels.
    pub fn extend(&self, value: Option<Sign>) -> SignVector {
        let mut out = self.0.clone();
        out.push(value);
        SignVector(out)
    }

    /// Removes the coordinate at `position`.
    pub fn delete(&self, position: usize) -> SignVector {
        let mut out = self.0.clone();
        out.remove(position);
        SignVector(out)
    }

    /// The vector with zero components deleted.
    pub fn compressed(&self) -> Vec<Sign> {
        self.0.iter().flatten().copied().collect()
    }

    /// All vectors in `{+,-}^len`, `+` first, lexicographic.
    pub fn all_full(len: usize) -> Vec<SignVector> {
        (0..1usize << len)
            .map(|mask| {
                SignVector(
                    (0..len)
                        .map(|i| {
                            Some(if mask >> (len - 1 - i) & 1 == 0 {
                                Sign::Plus
                            } else {
                                Sign::Minus
                            })
                        })
                        .collect(),
                )
            })
            .collect()
    }
}

impl std::ops::Neg for &SignVector {
    type Output = SignVector;
    fn neg(self) -> SignVector {
        SignVector(self.0.iter().map(|s| s.map(Sign::flip)).collect())
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            match s {
                Some(s) => write!(f, "{s}")?,
                None => write!(f, "0")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !matches!(c, ',' | ' ' | '(' | ')'))
            .map(|c| match c {
                '+' => Ok(Some(Sign::Plus)),
                '-' | '−' => Ok(Some(Sign::Minus)),
                '0' => Ok(None),
                other => Err(Error::Malformed(format!("bad sign {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignVector)
    }
}

impl Serialize for SignVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
