use std::collections::BTreeSet;
use std::fmt;

/// Largest facet for which [`SimplicialComplex::all_faces`] will enumerate
/// subsets.
pub const MAX_FACET_SIZE: usize = 24;

/// A finite abstract simplicial complex, stored by its maximal faces.
///
/// Facets are sorted vertex lists, the facet list is sorted, and no facet
/// contains another, so two complexes are equal iff they have the same faces.
/// The empty complex (no faces at all) plays the role of `S^{-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex<V> {
    facets: Vec<Vec<V>>,
}

impl<V: Ord + Clone> SimplicialComplex<V> {
    pub fn empty() -> Self {
        SimplicialComplex { facets: Vec::new() }
    }

    /// The complex generated by `faces`; non-maximal and empty faces are
    /// dropped.
    pub fn from_faces<I, F>(faces: I) -> Self
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = V>,
    {
        let mut all: Vec<Vec<V>> = faces
            .into_iter()
            .map(|f| {
                let mut f: Vec<V> = f.into_iter().collect();
                f.sort();
                f.dedup();
                f
            })
            .filter(|f| !f.is_empty())
            .collect();
        all.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        all.dedup();
        let mut kept: Vec<Vec<V>> = Vec::with_capacity(all.len());
        for f in all {
            if !kept.iter().any(|k| is_sorted_subset(&f, k)) {
                kept.push(f);
            }
        }
        kept.sort();
        SimplicialComplex { facets: kept }
    }

    /// The full simplex on `vertices`.
    pub fn simplex<I: IntoIterator<Item = V>>(vertices: I) -> Self {
        Self::from_faces([vertices])
    }

    pub fn facets(&self) -> &[Vec<V>] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn vertices(&self) -> Vec<V> {
        let set: BTreeSet<&V> = self.facets.iter().flatten().collect();
        set.into_iter().cloned().collect()
    }

    /// Largest face size minus one; `-1` for the empty complex.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(Vec::len).max().unwrap_or(0) as isize - 1
    }

    /// Whether `face` (in any order) is a face.
    pub fn contains_face(&self, face: &[V]) -> bool {
        let mut f = face.to_vec();
        f.sort();
        f.dedup();
        if f.is_empty() {
            return !self.is_empty();
        }
        self.facets.iter().any(|k| is_sorted_subset(&f, k))
    }

    /// Every non-empty face, sorted by size and then lexicographically.
    pub fn all_faces(&self) -> Vec<Vec<V>> {
        let mut set: BTreeSet<Vec<V>> = BTreeSet::new();
        for facet in &self.facets {
            assert!(
                facet.len() <= MAX_FACET_SIZE,
                "facet of size {} is too large to enumerate",
                facet.len()
            );
            for mask in 1u32..(1u32 << facet.len()) {
                let face: Vec<V> = facet
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, v)| v.clone())
                    .collect();
                set.insert(face);
            }
        }
        let mut faces: Vec<Vec<V>> = set.into_iter().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        faces
    }

    /// Faces common to both complexes.
    pub fn intersection(&self, other: &Self) -> Self {
        let mut faces = Vec::new();
        for a in &self.facets {
            for b in &other.facets {
                let common = sorted_intersection(a, b);
                if !common.is_empty() {
                    faces.push(common);
                }
            }
        }
        Self::from_faces(faces)
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::from_faces(self.facets.iter().chain(&other.facets).cloned())
    }

    pub fn is_subcomplex_of(&self, other: &Self) -> bool {
        self.facets.iter().all(|f| other.contains_face(f))
    }

    /// The subcomplex of faces whose vertices all lie in `keep`.
    pub fn induced(&self, keep: &BTreeSet<V>) -> Self {
        Self::from_faces(
            self.facets
                .iter()
                .map(|f| f.iter().filter(|v| keep.contains(v)).cloned().collect::<Vec<_>>()),
        )
    }

    /// Relabels vertices; the result is generated by the image faces.
    pub fn map_vertices<W: Ord + Clone>(&self, f: impl Fn(&V) -> W) -> SimplicialComplex<W> {
        SimplicialComplex::from_faces(self.facets.iter().map(|face| face.iter().map(&f).collect::<Vec<_>>()))
    }

    /// Number of non-empty faces in each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let faces = self.all_faces();
        let top = faces.last().map_or(0, Vec::len);
        let mut fv = vec![0; top];
        for f in faces {
            fv[f.len() - 1] += 1;
        }
        fv
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }
}

impl SimplicialComplex<usize> {
    /// Boundary of the simplex on `0..n` (a `(n-2)`-sphere).
    pub fn simplex_boundary(n: usize) -> Self {
        Self::from_faces((0..n).map(|skip| (0..n).filter(move |&v| v != skip)))
    }

    /// Boundary of the `d`-dimensional cross-polytope: vertices `2i` and
    /// `2i+1` are `+e_i` and `-e_i`.
    pub fn cross_polytope_boundary(d: usize) -> Self {
        Self::from_faces((0..1usize << d).map(|mask| (0..d).map(move |i| 2 * i + (mask >> i & 1))))
    }
}

impl<V: fmt::Debug> fmt::Debug for SimplicialComplex<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.facets).finish()
    }
}

pub(crate) fn is_sorted_subset<V: Ord>(small: &[V], big: &[V]) -> bool {
    if small.len() > big.len() {
        return false;
    }
    let mut it = big.iter();
    'outer: for x in small {
        for y in it.by_ref() {
            match y.cmp(x) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => continue 'outer,
                std::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

pub(crate) fn sorted_intersection<V: Ord + Clone>(a: &[V], b: &[V]) -> Vec<V> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    out
}
