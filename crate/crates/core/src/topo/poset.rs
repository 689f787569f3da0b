//! Finite posets and their order complexes.

use super::complex::SimplicialComplex;

/// Fixed-width bit rows for the strict order relation.
#[derive(Clone, Debug, PartialEq, Eq)]
struct BitRows {
    words: usize,
    bits: Vec<u64>,
}

impl BitRows {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitRows {
            words,
            bits: vec![0; words * n],
        }
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }
}

fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &word)| {
        let mut x = word;
        std::iter::from_fn(move || {
            if x == 0 {
                return None;
            }
            let b = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(w * 64 + b)
        })
    })
}

/// A finite poset on `elements`, addressed by index.
#[derive(Clone, Debug)]
pub struct Poset<T> {
    elements: Vec<T>,
    /// `above.get(i, j)` iff `i < j`.
    above: BitRows,
    /// `below.get(j, i)` iff `i < j`.
    below: BitRows,
}

impl<T: Clone> Poset<T> {
    /// Builds the poset from a `<=` predicate, which is assumed to be a
    /// partial order; see [`Poset::is_partial_order`].
    pub fn from_relation(elements: Vec<T>, le: impl Fn(&T, &T) -> bool) -> Self {
        let n = elements.len();
        let mut above = BitRows::new(n);
        let mut below = BitRows::new(n);
        for i in 0..n {
            for j in 0..n {
                if i != j && le(&elements[i], &elements[j]) {
                    above.set(i, j);
                    below.set(j, i);
                }
            }
        }
        Poset {
            elements,
            above,
            below,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.above.get(i, j)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        i == j || self.lt(i, j)
    }

    /// Antisymmetry and transitivity of the strict relation.
    pub fn is_partial_order(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| {
            ones(self.above.row(i)).all(|j| {
                !self.lt(j, i) && ones(self.above.row(j)).all(|k| self.lt(i, k))
            })
        })
    }

    /// Indices strictly above `i`.
    pub fn strictly_above(&self, i: usize) -> Vec<usize> {
        ones(self.above.row(i)).collect()
    }

    /// Indices `>= i`.
    pub fn upper_set(&self, i: usize) -> Vec<usize> {
        let mut v = self.strictly_above(i);
        v.push(i);
        v.sort_unstable();
        v
    }

    /// Indices `<= i`.
    pub fn lower_set(&self, i: usize) -> Vec<usize> {
        let mut v: Vec<usize> = ones(self.below.row(i)).collect();
        v.push(i);
        v.sort_unstable();
        v
    }

    /// Upper covers of every element.
    pub fn covers(&self) -> Vec<Vec<usize>> {
        (0..self.len())
            .map(|i| {
                let up = self.above.row(i);
                ones(up)
                    .filter(|&j| {
                        // j covers i iff nothing strictly above i is strictly below j
                        self.below.row(j).iter().zip(up).all(|(a, b)| a & b == 0)
                    })
                    .collect()
            })
            .collect()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.below.row(i).iter().all(|w| *w == 0))
            .collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.above.row(i).iter().all(|w| *w == 0))
            .collect()
    }

    /// A greatest element, if any.
    pub fn maximum(&self) -> Option<usize> {
        match self.maximal().as_slice() {
            [m] if self.lower_set(*m).len() == self.len() => Some(*m),
            _ => None,
        }
    }

    /// A least element, if any.
    pub fn minimum(&self) -> Option<usize> {
        match self.minimal().as_slice() {
            [m] if self.upper_set(*m).len() == self.len() => Some(*m),
            _ => None,
        }
    }

    /// The induced subposet on `members` (in the given order).
    pub fn induced(&self, members: &[usize]) -> Poset<T> {
        let n = members.len();
        let mut above = BitRows::new(n);
        let mut below = BitRows::new(n);
        for (a, &i) in members.iter().enumerate() {
            for (b, &j) in members.iter().enumerate() {
                if self.lt(i, j) {
                    above.set(a, b);
                    below.set(b, a);
                }
            }
        }
        Poset {
            elements: members.iter().map(|&i| self.elements[i].clone()).collect(),
            above,
            below,
        }
    }

    /// Every maximal chain, bottom to top, as index lists.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let covers = self.covers();
        let mut chains = Vec::new();
        let mut stack: Vec<Vec<usize>> = self.minimal().into_iter().map(|m| vec![m]).collect();
        while let Some(chain) = stack.pop() {
            let last = *chain.last().expect("non-empty chain");
            if covers[last].is_empty() {
                chains.push(chain);
                continue;
            }
            for &next in covers[last].iter().rev() {
                let mut c = chain.clone();
                c.push(next);
                stack.push(c);
            }
        }
        chains.sort();
        chains
    }

    /// Whether the element indices form a chain.
    pub fn is_chain(&self, members: &[usize]) -> bool {
        members.iter().enumerate().all(|(a, &i)| {
            members[a + 1..]
                .iter()
                .all(|&j| self.lt(i, j) || self.lt(j, i))
        })
    }
}

/// `Δ(P)`: the complex of chains of `P`, on element indices.
pub fn order_complex<T: Clone>(p: &Poset<T>) -> SimplicialComplex<usize> {
    SimplicialComplex::from_faces(p.maximal_chains())
}

/// The poset of non-empty faces of `k` under inclusion.
pub fn face_poset<V: Ord + Clone>(k: &SimplicialComplex<V>) -> Poset<Vec<V>> {
    let faces = k.all_faces();
    Poset::from_relation(faces, |a, b| super::complex::is_sorted_subset(a, b))
}
