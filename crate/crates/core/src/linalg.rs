//! Exact linear algebra over `Q` and `GF(p)`.
//!
//! Rank over `Q` uses fraction-free (Bareiss) elimination on integer columns.
//! Nullspace vectors use reduced row echelon form over `BigRational`. No
//! floating point is involved anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::elements::ElementSet;
use crate::error::{Error, Result};

/// A scalar as written in input files: an integer or a `"num/den"` string.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    pub fn to_rational(&self) -> Result<BigRational> {
        match self {
            Scalar::Int(i) => Ok(BigRational::from_integer(BigInt::from(*i))),
            Scalar::Text(s) => parse_rational(s),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Malformed(format!("not a rational number: {s:?}"));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Rational,
    Prime(u64),
}

/// A vector configuration: one column per ground-set element.
#[derive(Clone, Debug)]
pub struct ColumnMatrix {
    field: Field,
    dimension: usize,
    /// Over `Q`: each column scaled by a positive integer to clear
    /// denominators (rank and signs are unchanged). Over `GF(p)`: reduced
    /// representatives in `0..p`.
    columns: Vec<Vec<BigInt>>,
}

impl ColumnMatrix {
    pub fn rational(columns: &[Vec<BigRational>]) -> Result<Self> {
        let dimension = uniform_dimension(columns.iter().map(Vec::len))?;
        let columns = columns.iter().map(|c| clear_denominators(c)).collect();
        Ok(ColumnMatrix {
            field: Field::Rational,
            dimension,
            columns,
        })
    }

    pub fn modular(p: u64, columns: &[Vec<i64>]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let dimension = uniform_dimension(columns.iter().map(Vec::len))?;
        let pb = BigInt::from(p);
        let columns = columns
            .iter()
            .map(|c| c.iter().map(|&x| BigInt::from(x).mod_floor(&pb)).collect())
            .collect();
        Ok(ColumnMatrix {
            field: Field::Prime(p),
            dimension,
            columns,
        })
    }

    pub fn field(&self) -> Field {
        self.field
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

    /// Integer (scaled) column `e`.
    pub fn column(&self, e: usize) -> &[BigInt] {
        &self.columns[e]
    }

    /// Rank of the columns indexed by `subset`.
    pub fn rank(&self, subset: ElementSet) -> usize {
        let cols: Vec<&[BigInt]> = subset.iter().map(|e| self.columns[e].as_slice()).collect();
        match self.field {
            Field::Rational => bareiss_rank(&cols, self.dimension),
            Field::Prime(p) => modular_rank(&cols, self.dimension, p),
        }
    }

    pub fn full_rank(&self) -> usize {
        self.rank(ElementSet::full(self.len()))
    }

    /// Elements `e` not in `subset` whose column lies in the span of `subset`,
    /// together with `subset` itself.
    pub fn span_closure(&self, subset: ElementSet) -> ElementSet {
        let r = self.rank(subset);
        (0..self.len())
            .filter(|&e| subset.contains(e) || self.rank(subset.with(e)) == r)
            .collect()
    }
}

fn uniform_dimension(mut lens: impl Iterator<Item = usize>) -> Result<usize> {
    let Some(d) = lens.next() else {
        return Ok(0);
    };
    if lens.all(|l| l == d) {
        Ok(d)
    } else {
        Err(Error::Malformed("columns have different lengths".into()))
    }
}

pub fn clear_denominators(col: &[BigRational]) -> Vec<BigInt> {
    let l = col
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    col.iter()
        .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
        .collect()
}

/// Fraction-free Gaussian elimination. `cols` are matrix columns of length
/// `dim`; returns the rank.
pub fn bareiss_rank(cols: &[&[BigInt]], dim: usize) -> usize {
    if cols.is_empty() || dim == 0 {
        return 0;
    }
    // work on rows = columns of the input (rank is transpose-invariant)
    let mut m: Vec<Vec<BigInt>> = cols.iter().map(|c| c.to_vec()).collect();
    let nrows = m.len();
    let ncols = dim;
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let v = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

fn modular_rank(cols: &[&[BigInt]], dim: usize, p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = cols
        .iter()
        .map(|c| c.iter().map(|x| x.to_u64().unwrap_or(0) % p).collect())
        .collect();
    let nrows = m.len();
    let mut rank = 0;
    for col in 0..dim {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = mod_pow(m[rank][col], p - 2, p);
        for r in rank + 1..nrows {
            let f = mul_mod(m[r][col], inv, p);
            if f == 0 {
                continue;
            }
            for c in col..dim {
                let sub = mul_mod(f, m[rank][c], p);
                let cur = m[r][c];
                m[r][c] = if cur >= sub { cur - sub } else { cur + (p - sub) };
            }
        }
        rank += 1;
    }
    rank
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn mod_pow(b: u64, mut e: u64, p: u64) -> u64 {
    let pm = p as u128;
    let (mut acc, mut base) = (1u128, b as u128 % pm);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % pm;
        }
        base = base * base % pm;
        e >>= 1;
    }
    acc as u64
}

/// Reduced row echelon form over `Q`, in place. Returns pivot columns.
pub fn rref(rows: &mut [Vec<BigRational>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let lead = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x / &lead;
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let (pivot_row, other) = if i < r {
                    let (a, b) = rows.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = rows.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (x, y) in other.iter_mut().zip(pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{x : rows · x = 0}` over `Q`, each vector scaled to coprime
/// integers.
pub fn nullspace(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![BigRational::zero(); ncols];
            x[f] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -m[r][f].clone();
            }
            primitive(&x)
        })
        .collect()
}

/// Scales a rational vector to an integer vector with gcd 1, keeping signs.
pub fn primitive(x: &[BigRational]) -> Vec<BigInt> {
    let ints = clear_denominators(x);
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|v| v / &g).collect()
}

/// Rank over `Q` via `rref`; an independent route to [`bareiss_rank`].
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn signum(x: &BigInt) -> std::cmp::Ordering {
    if x.is_positive() {
        std::cmp::Ordering::Greater
    } else if x.is_negative() {
        std::cmp::Ordering::Less
    } else {
        std::cmp::Ordering::Equal
    }
}
