//! Smith normal form over the integers.
//!
//! Boundary matrices of the complexes handled here are large, very sparse and
//! mostly eliminable with unit pivots, so the reduction runs in two phases:
//! sparse elimination on `±1` entries, then a dense Smith reduction of what is
//! left.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Non-zero invariant factors of the integer matrix with the given entries,
/// in ascending order of divisibility. The count is the rank.
pub fn smith_invariants(nrows: usize, ncols: usize, entries: &[(usize, usize, i64)]) -> Vec<BigInt> {
    let mut m = Sparse::new(nrows, ncols, entries);
    let mut invariants = m.eliminate_units();
    let (dense, _) = m.into_dense();
    invariants.extend(dense_smith(dense));
    invariants.sort_by(|a, b| a.cmp(b));
    invariants
}

/// Rank of the integer matrix (over `Q`).
pub fn integer_rank(nrows: usize, ncols: usize, entries: &[(usize, usize, i64)]) -> usize {
    smith_invariants(nrows, ncols, entries).len()
}

struct Sparse {
    /// Row entries sorted by column, no explicit zeros.
    rows: Vec<Vec<(usize, BigInt)>>,
    /// Rows with a non-zero entry in each column.
    cols: Vec<BTreeSet<usize>>,
    alive: Vec<bool>,
}

impl Sparse {
    fn new(nrows: usize, ncols: usize, entries: &[(usize, usize, i64)]) -> Self {
        let mut rows: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); nrows];
        for &(r, c, v) in entries {
            assert!(r < nrows && c < ncols, "entry ({r}, {c}) out of bounds");
            rows[r].push((c, BigInt::from(v)));
        }
        let mut cols = vec![BTreeSet::new(); ncols];
        for (r, row) in rows.iter_mut().enumerate() {
            row.sort_by_key(|(c, _)| *c);
            let mut merged: Vec<(usize, BigInt)> = Vec::with_capacity(row.len());
            for (c, v) in row.drain(..) {
                match merged.last_mut() {
                    Some((lc, lv)) if *lc == c => *lv += v,
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            for (c, _) in &merged {
                cols[*c].insert(r);
            }
            *row = merged;
        }
        Sparse {
            alive: vec![true; nrows],
            rows,
            cols,
        }
    }

    /// Repeatedly pivots on unit entries, preferring sparse columns. Each
    /// pivot contributes an invariant factor 1.
    fn eliminate_units(&mut self) -> Vec<BigInt> {
        let mut invariants = Vec::new();
        let mut progress = true;
        while progress {
            progress = false;
            for r in 0..self.rows.len() {
                if !self.alive[r] {
                    continue;
                }
                let best = self.rows[r]
                    .iter()
                    .filter(|(_, v)| v.abs().is_one())
                    .min_by_key(|(c, _)| self.cols[*c].len())
                    .map(|(c, v)| (*c, v.clone()));
                if let Some((c, unit)) = best {
                    self.pivot(r, c, &unit);
                    invariants.push(BigInt::one());
                    progress = true;
                }
            }
        }
        invariants
    }

    fn pivot(&mut self, r: usize, c: usize, unit: &BigInt) {
        let prow = std::mem::take(&mut self.rows[r]);
        self.alive[r] = false;
        for (cc, _) in &prow {
            self.cols[*cc].remove(&r);
        }
        let others: Vec<usize> = self.cols[c].iter().copied().collect();
        for o in others {
            let a = self.rows[o]
                .iter()
                .find(|(cc, _)| *cc == c)
                .map(|(_, v)| v.clone())
                .expect("column index is consistent");
            // unit is ±1, so it is its own inverse
            let factor = a * unit;
            let old = std::mem::take(&mut self.rows[o]);
            let new = axpy(&old, &prow, &factor);
            for (cc, _) in &old {
                self.cols[*cc].remove(&o);
            }
            for (cc, _) in &new {
                self.cols[*cc].insert(o);
            }
            self.rows[o] = new;
        }
    }

    /// Remaining non-zero block as a dense matrix, plus its column indices.
    fn into_dense(self) -> (Vec<Vec<BigInt>>, Vec<usize>) {
        let live_cols: Vec<usize> = (0..self.cols.len())
            .filter(|&c| !self.cols[c].is_empty())
            .collect();
        let pos = |c: usize| live_cols.binary_search(&c).expect("live column");
        let mut dense = Vec::new();
        for (r, row) in self.rows.into_iter().enumerate() {
            if !self.alive[r] || row.is_empty() {
                continue;
            }
            let mut d = vec![BigInt::zero(); live_cols.len()];
            for (c, v) in row {
                d[pos(c)] = v;
            }
            dense.push(d);
        }
        (dense, live_cols)
    }
}

/// `x - factor * y` on sorted sparse rows.
fn axpy(x: &[(usize, BigInt)], y: &[(usize, BigInt)], factor: &BigInt) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(factor * &y[j].1)));
            j += 1;
        } else {
            let v = &x[i].1 - factor * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Diagonal of the Smith form of a dense matrix (non-zero entries only).
pub fn dense_smith(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let Some((i, j)) = min_abs(&a, t..m, t..n) else {
            break;
        };
        a.swap(t, i);
        swap_cols(&mut a, t, j);
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    row_sub(&mut a, i, t, &q);
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    col_sub(&mut a, j, t, &q);
                    clean &= a[t][j].is_zero();
                }
            }
            if !clean {
                // a remainder smaller than the pivot sits in row or column t
                let (i, j) = min_abs_cross(&a, t);
                a.swap(t, i);
                swap_cols(&mut a, t, j);
                continue;
            }
            let p = a[t][t].clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&a[i][j] % &p).is_zero()));
            match bad {
                Some(i) => {
                    let row_i = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(row_i) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

fn min_abs(
    a: &[Vec<BigInt>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in rows {
        for j in cols.clone() {
            let v = a[i][j].abs();
            if v.is_zero() {
                continue;
            }
            if best.as_ref().map_or(true, |(_, _, b)| v < *b) {
                let done = v.is_one();
                best = Some((i, j, v));
                if done {
                    return best.map(|(i, j, _)| (i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn min_abs_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let m = a.len();
    let n = a[0].len();
    let mut best = (t, t, a[t][t].abs());
    for i in t + 1..m {
        let v = a[i][t].abs();
        if !v.is_zero() && v < best.2 {
            best = (i, t, v);
        }
    }
    for j in t + 1..n {
        let v = a[t][j].abs();
        if !v.is_zero() && v < best.2 {
            best = (t, j, v);
        }
    }
    (best.0, best.1)
}

fn swap_cols(a: &mut [Vec<BigInt>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    }
}

fn row_sub(a: &mut [Vec<BigInt>], target: usize, src: usize, q: &BigInt) {
    let src_row = a[src].clone();
    for (x, y) in a[target].iter_mut().zip(&src_row) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

fn col_sub(a: &mut [Vec<BigInt>], target: usize, src: usize, q: &BigInt) {
    for row in a.iter_mut() {
        if !row[src].is_zero() {
            let d = q * &row[src];
            row[target] -= d;
        }
    }
}
