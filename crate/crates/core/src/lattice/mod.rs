//! Geometric lattices of flats.
//!
//! A [`GeometricLattice`] is the lattice of flats of a matroid: a family of
//! subsets of the ground set closed under intersection, ordered by inclusion,
//! with `E` on top. It is immutable after construction and every query is a
//! pure function of it, so it can be shared freely between threads.

mod flag;
mod load;

use std::collections::HashMap;

pub use flag::{default_flag, flag_restrict, Flag, FlagRestriction, FlagSpec};
pub use load::{load_matroid, Label, LinearMatroid, MatroidSpec};

use crate::elements::{ElementSet, Flat, GroundSet};
use crate::error::{Error, Result};
use crate::report::ValidationReport;

#[derive(Clone, Debug)]
pub struct GeometricLattice {
    ground: GroundSet,
    /// Sorted by `(rank, lexicographic)`.
    flats: Vec<Flat>,
    ranks: Vec<usize>,
    index: HashMap<Flat, usize>,
    rank: usize,
    atoms: Vec<Flat>,
    coatoms: Vec<Flat>,
}

impl GeometricLattice {
    /// Builds the lattice from an explicit list of flats and validates it.
    pub fn from_flats(ground: GroundSet, flats: impl IntoIterator<Item = Flat>) -> Result<Self> {
        let lattice = Self::from_flats_unchecked(ground, flats)?;
        let e = lattice.ground.all();
        if !lattice.contains(e) {
            return Err(Error::NotGeometric("the ground set is not a flat".into()));
        }
        if let Some((a, b)) = lattice.meet_closure_violation() {
            return Err(Error::NotMeetClosed(
                lattice.ground.format(a),
                lattice.ground.format(b),
            ));
        }
        let report = lattice.verify();
        if let Some(c) = report.failures().next() {
            return Err(Error::NotGeometric(format!("{}: {}", c.name, c.detail)));
        }
        Ok(lattice)
    }

    /// Builds the poset of the given subsets without checking any lattice
    /// axiom. Ranks are chain heights above the minimal elements. Use
    /// [`GeometricLattice::verify`] to find out what is wrong with it.
    pub fn from_flats_unchecked(
        ground: GroundSet,
        flats: impl IntoIterator<Item = Flat>,
    ) -> Result<Self> {
        let e = ground.all();
        let mut flats: Vec<Flat> = flats.into_iter().collect();
        if let Some(bad) = flats.iter().find(|f| !f.is_subset(e)) {
            return Err(Error::Malformed(format!(
                "flat {bad:?} is not a subset of the ground set"
            )));
        }
        flats.sort_by_key(|f| (f.len(), *f));
        flats.dedup();

        // longest chain from below; subsets always come earlier in this order
        let mut height = vec![0usize; flats.len()];
        for j in 0..flats.len() {
            height[j] = (0..j)
                .filter(|&i| flats[i].is_proper_subset(flats[j]))
                .map(|i| height[i] + 1)
                .max()
                .unwrap_or(0);
        }
        let mut order: Vec<usize> = (0..flats.len()).collect();
        order.sort_by_key(|&i| (height[i], flats[i]));
        let flats: Vec<Flat> = order.iter().map(|&i| flats[i]).collect();
        let ranks: Vec<usize> = order.iter().map(|&i| height[i]).collect();
        let index = flats.iter().enumerate().map(|(i, f)| (*f, i)).collect::<HashMap<_, _>>();
        let rank = index
            .get(&e)
            .map(|&i| ranks[i])
            .or_else(|| ranks.iter().copied().max())
            .unwrap_or(0);
        let atoms = flats
            .iter()
            .zip(&ranks)
            .filter(|(_, &r)| r == 1)
            .map(|(f, _)| *f)
            .collect();
        let coatoms = if rank == 0 {
            Vec::new()
        } else {
            flats
                .iter()
                .zip(&ranks)
                .filter(|(_, &r)| r + 1 == rank)
                .map(|(f, _)| *f)
                .collect()
        };
        Ok(GeometricLattice {
            ground,
            flats,
            ranks,
            index,
            rank,
            atoms,
            coatoms,
        })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// All flats, sorted by rank and then lexicographically.
    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// Total rank `r`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn contains(&self, x: ElementSet) -> bool {
        self.index.contains_key(&x)
    }

    pub fn index_of(&self, x: Flat) -> Option<usize> {
        self.index.get(&x).copied()
    }

    /// Rank of a flat. Panics if `x` is not a flat.
    pub fn rank_of(&self, x: Flat) -> usize {
        match self.index.get(&x) {
            Some(&i) => self.ranks[i],
            None => panic!("{} is not a flat", self.ground.format(x)),
        }
    }

    pub fn corank_of(&self, x: Flat) -> usize {
        self.rank - self.rank_of(x)
    }

    pub fn bottom(&self) -> Flat {
        self.flats[0]
    }

    pub fn top(&self) -> Flat {
        self.ground.all()
    }

    pub fn atoms(&self) -> &[Flat] {
        &self.atoms
    }

    pub fn coatoms(&self) -> &[Flat] {
        &self.coatoms
    }

    /// Coatoms containing `x`.
    pub fn coat_above(&self, x: Flat) -> Vec<Flat> {
        self.coatoms
            .iter()
            .copied()
            .filter(|c| x.is_subset(*c))
            .collect()
    }

    /// Smallest flat containing `a`: the intersection of all flats above it.
    pub fn closure(&self, a: ElementSet) -> Flat {
        self.flats
            .iter()
            .filter(|f| a.is_subset(**f))
            .fold(self.ground.all(), |acc, f| acc.intersection(*f))
    }

    pub fn meet(&self, x: Flat, y: Flat) -> Flat {
        x.intersection(y)
    }

    pub fn join(&self, x: Flat, y: Flat) -> Flat {
        self.closure(x.union(y))
    }

    /// Matroid rank of an arbitrary subset.
    pub fn set_rank(&self, a: ElementSet) -> usize {
        self.rank_of(self.closure(a))
    }

    /// Flats covering `x`.
    pub fn covers_of(&self, x: Flat) -> Vec<Flat> {
        let r = self.rank_of(x);
        self.flats
            .iter()
            .zip(&self.ranks)
            .filter(|(f, &rf)| rf == r + 1 && x.is_subset(**f))
            .map(|(f, _)| *f)
            .collect()
    }

    /// Flats `y` with `lo ⊆ y ⊆ hi`.
    pub fn interval(&self, lo: Flat, hi: Flat) -> Vec<Flat> {
        self.flats
            .iter()
            .copied()
            .filter(|f| lo.is_subset(*f) && f.is_subset(hi))
            .collect()
    }

    fn meet_closure_violation(&self) -> Option<(Flat, Flat)> {
        for (i, &a) in self.flats.iter().enumerate() {
            for &b in &self.flats[i + 1..] {
                if !self.contains(a.intersection(b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Checks every geometric-lattice axiom and reports each separately.
    pub fn verify(&self) -> ValidationReport {
        verify_geometric(self)
    }
}

/// Checks: lattice property (bounded, graded), meets are intersections,
/// atomicity, semimodularity, `X = ∧ coat(X)` for `X ≠ 1̂`, and that every
/// interval is itself geometric.
pub fn verify_geometric(l: &GeometricLattice) -> ValidationReport {
    let g = l.ground();
    let fmt = |x: Flat| g.format(x);
    let mut report = ValidationReport::new();

    // lattice: 0̂ and 1̂ exist, ranks are consistent along covers
    let mut fails = Vec::new();
    let all_meet = l
        .flats
        .iter()
        .fold(g.all(), |acc, f| acc.intersection(*f));
    if !l.contains(g.all()) {
        fails.push("ground set E is not a flat".to_string());
    }
    if !l.contains(all_meet) {
        fails.push(format!("no least flat ({} missing)", fmt(all_meet)));
    }
    for (i, &x) in l.flats.iter().enumerate() {
        for (j, &y) in l.flats.iter().enumerate() {
            if x.is_proper_subset(y)
                && l.ranks[j] != l.ranks[i] + 1
                && !l
                    .flats
                    .iter()
                    .any(|z| x.is_proper_subset(*z) && z.is_proper_subset(y))
            {
                fails.push(format!("cover {} < {} skips a rank", fmt(x), fmt(y)));
            }
        }
    }
    report.push_all("lattice", fails);

    let meet_closed = l.meet_closure_violation();
    report.push(
        "meet is intersection",
        meet_closed.is_none(),
        meet_closed
            .map(|(a, b)| format!("not meet-closed: {} ∩ {}", fmt(a), fmt(b)))
            .unwrap_or_default(),
    );

    let join = |x: Flat, y: Flat| -> Option<Flat> {
        let j = l.closure(x.union(y));
        l.contains(j).then_some(j)
    };

    // atomicity, including E = join of all atoms
    let mut fails = Vec::new();
    for &x in &l.flats {
        let below = l
            .atoms
            .iter()
            .filter(|a| a.is_subset(x))
            .fold(ElementSet::EMPTY, |acc, a| acc.union(*a));
        if l.rank_of(x) > 0 && l.closure(below) != x {
            fails.push(format!("{} is not a join of atoms", fmt(x)));
        }
    }
    report.push_all("atomic", fails);

    let mut fails = Vec::new();
    for (i, &x) in l.flats.iter().enumerate() {
        for &y in &l.flats[i + 1..] {
            let (Some(j), true) = (join(x, y), l.contains(x.intersection(y))) else {
                fails.push(format!("no meet/join for {} and {}", fmt(x), fmt(y)));
                continue;
            };
            let lhs = l.rank_of(x) + l.rank_of(y);
            let rhs = l.rank_of(x.intersection(y)) + l.rank_of(j);
            if lhs < rhs {
                fails.push(format!(
                    "rank {} + rank {} = {lhs} < {rhs}",
                    fmt(x),
                    fmt(y)
                ));
            }
        }
    }
    report.push_all("semimodular", fails);

    let mut fails = Vec::new();
    for &x in &l.flats {
        if x == g.all() {
            continue;
        }
        let m = l
            .coat_above(x)
            .into_iter()
            .fold(g.all(), |acc, c| acc.intersection(c));
        if m != x {
            fails.push(format!("∧coat({}) = {}", fmt(x), fmt(m)));
        }
    }
    report.push_all("coatom meet", fails);

    // Atomicity of [X, 1̂] for every X gives atomicity of every [X, Y]; meets
    // and joins inside an interval agree with the global ones, so
    // semimodularity is inherited and only atomicity needs checking.
    let mut fails = Vec::new();
    for &x in &l.flats {
        let rx = l.rank_of(x);
        let covers: Vec<Flat> = l
            .flats
            .iter()
            .copied()
            .filter(|c| x.is_subset(*c) && l.rank_of(*c) == rx + 1)
            .collect();
        for &z in &l.flats {
            if !x.is_proper_subset(z) {
                continue;
            }
            let span = covers
                .iter()
                .filter(|c| c.is_subset(z))
                .fold(x, |acc, c| acc.union(*c));
            if l.closure(span) != z {
                fails.push(format!("{} is not a join of atoms of [{}, 1]", fmt(z), fmt(x)));
            }
        }
    }
    report.push_all("intervals geometric", fails);

    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground(n: usize) -> GroundSet {
        GroundSet::numbered(n).unwrap()
    }

    fn set(g: &GroundSet, labels: &[&str]) -> Flat {
        g.subset(labels).unwrap()
    }

    #[test]
    fn chain_fails_atomicity() {
        let g = ground(3);
        let flats = [vec![], vec!["1"], vec!["1", "2"], vec!["1", "2", "3"]]
            .iter()
            .map(|f| set(&g, f))
            .collect::<Vec<_>>();
        let l = GeometricLattice::from_flats_unchecked(g.clone(), flats.clone()).unwrap();
        let report = l.verify();
        assert!(!report.get("atomic").unwrap().passed);
        assert!(report.get("meet is intersection").unwrap().passed);
        assert!(GeometricLattice::from_flats(g, flats).is_err());
    }

    #[test]
    fn three_points_one_line_fails_semimodularity() {
        // {1},{2},{3} atoms, only {1,2} as a line, then E
        let g = ground(3);
        let flats = [vec![], vec!["1"], vec!["2"], vec!["3"], vec!["1", "2"], vec!["1", "2", "3"]]
            .iter()
            .map(|f| set(&g, f))
            .collect::<Vec<_>>();
        let l = GeometricLattice::from_flats_unchecked(g, flats).unwrap();
        let report = l.verify();
        assert!(!report.get("semimodular").unwrap().passed);
    }

    #[test]
    fn missing_intersection_is_reported() {
        let g = ground(3);
        let flats = [vec!["1", "2"], vec!["2", "3"], vec!["1", "2", "3"], vec![]]
            .iter()
            .map(|f| set(&g, f))
            .collect::<Vec<_>>();
        let err = GeometricLattice::from_flats(g, flats).unwrap_err();
        assert!(err.to_string().contains("not meet-closed"), "{err}");
    }
}
