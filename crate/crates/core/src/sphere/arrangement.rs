//! The arrangement `(S_0̂, {S_a : a an atom})` and the lattice it determines.

use std::collections::HashMap;

use super::{RepComplex, SignedVertex, SphereRep};
use crate::elements::{ElementSet, Flat, GroundSet};
use crate::error::{Error, Result};
use crate::lattice::{Flag, GeometricLattice};
use crate::report::ValidationReport;
use crate::topo::{
    cross_polytope_nerve_iso, index_subsets, reduced_homology, z2_free_check, HomologyProfile,
    SimplicialComplex, SubsetBound,
};

/// Largest number of members for which all `2^m` intersections are formed.
const MAX_MEMBERS: usize = 20;

#[derive(Clone, Debug)]
pub struct HomotopyArrangement<'a> {
    lattice: &'a GeometricLattice,
    flag: Flag,
    pub ambient: RepComplex,
    /// One member per atom, in lattice order.
    pub members: Vec<RepComplex>,
}

impl<'a> HomotopyArrangement<'a> {
    pub(super) fn new(rep: &SphereRep<'a>) -> Self {
        let lattice = rep.lattice();
        HomotopyArrangement {
            lattice,
            flag: rep.flag().clone(),
            ambient: rep.build_s(lattice.bottom()),
            members: lattice.atoms().iter().map(|&a| rep.build_s(a)).collect(),
        }
    }

    pub fn lattice(&self) -> &'a GeometricLattice {
        self.lattice
    }

    pub fn flag(&self) -> &Flag {
        &self.flag
    }

    fn rep(&self) -> SphereRep<'a> {
        SphereRep::new(self.lattice, self.flag.clone()).expect("flag was valid at construction")
    }

    /// `∩_{i ∈ S} T_i` for every subset `S` of members, indexed by bitmask;
    /// the empty subset gives the ambient complex.
    fn all_intersections(&self) -> Result<Vec<SimplicialComplex<SignedVertex>>> {
        let m = self.members.len();
        if m > MAX_MEMBERS {
            return Err(Error::TooLarge {
                what: "number of arrangement members",
                size: m,
                limit: MAX_MEMBERS,
            });
        }
        let mut out: Vec<SimplicialComplex<SignedVertex>> = Vec::with_capacity(1 << m);
        out.push(self.ambient.complex.clone());
        for mask in 1usize..1 << m {
            let top = usize::BITS as usize - 1 - mask.leading_zeros() as usize;
            let rest = mask & !(1 << top);
            let t = out[rest].intersection(&self.members[top].complex);
            out.push(t);
        }
        Ok(out)
    }
}

/// Flats of the arrangement: subsets `S` of members such that adding any
/// other member strictly shrinks `∩_S T`. The ground set is the atoms of the
/// source lattice, labelled by their elements. The result is validated as a
/// geometric lattice.
pub fn arrangement_flats(a: &HomotopyArrangement) -> Result<GeometricLattice> {
    let m = a.members.len();
    let inter = a.all_intersections()?;
    let g = a.lattice.ground();
    let labels: Vec<String> = a
        .lattice
        .atoms()
        .iter()
        .map(|&atom| g.labels_of(atom).join(","))
        .collect();
    let ground = GroundSet::new(labels)?;
    let flats = (0usize..1 << m).filter(|&mask| {
        (0..m)
            .filter(|e| mask >> e & 1 == 0)
            .all(|e| inter[mask | 1 << e] != inter[mask])
    });
    GeometricLattice::from_flats(ground, flats.map(|mask| ElementSet::from_bits(mask as u64)))
}

/// Checks that `flats` (on the atoms of `l`, in order) are exactly the sets
/// of atoms below the flats of `l`, which makes `X -> atoms(X)` a lattice
/// isomorphism.
pub fn atom_roundtrip(l: &GeometricLattice, flats: &GeometricLattice) -> std::result::Result<(), String> {
    let atoms = l.atoms();
    let mut expected: Vec<ElementSet> = l
        .flats()
        .iter()
        .map(|&x| {
            ElementSet::from_indices(
                atoms
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.is_subset(x))
                    .map(|(i, _)| i),
            )
        })
        .collect();
    let mut got: Vec<ElementSet> = flats.flats().to_vec();
    expected.sort();
    got.sort();
    if expected == got {
        return Ok(());
    }
    let g = flats.ground();
    if let Some(x) = expected.iter().find(|x| !got.contains(x)) {
        return Err(format!("atom set {} is not a flat of the arrangement", g.format(*x)));
    }
    let x = got.iter().find(|x| !expected.contains(x)).expect("sets differ");
    Err(format!("arrangement flat {} is not a flat of the lattice", g.format(*x)))
}

/// Certifies the arrangement axioms with exact and homological checks.
///
/// Reported checks: the ambient complex is a homology `S^{r-1}` whose facet
/// nerve is a cross-polytope's; each member is a homology `S^{r-2}`; every
/// intersection of members equals `S_H` for the join `H` of its atoms and is
/// a homology sphere of dimension `corank(H) - 1`; the sign swap is a free
/// involution preserving every member; and for an intersection `U = S_H` and
/// a member `T = S_a` not containing it, `rank(H ∨ a) = rank(H) + 1` and
/// `U ∩ T` is a homology sphere one dimension lower.
pub fn verify_arrangement(a: &HomotopyArrangement, bound: SubsetBound) -> ValidationReport {
    let l = a.lattice;
    let g = l.ground();
    let r = l.rank() as isize;
    let rep = a.rep();
    let mut report = ValidationReport::new();
    let mut cache: HashMap<SimplicialComplex<SignedVertex>, HomologyProfile> = HashMap::new();
    let mut homology = |k: &SimplicialComplex<SignedVertex>| -> HomologyProfile {
        cache.entry(k.clone()).or_insert_with(|| reduced_homology(k)).clone()
    };

    let h0 = homology(&a.ambient.complex);
    report.push(
        "ambient homology sphere",
        h0.is_sphere(r - 1),
        if h0.is_sphere(r - 1) { String::new() } else { h0.to_string() },
    );
    let nerve = cross_polytope_nerve_iso(&a.ambient.complex, l.rank());
    report.push(
        "ambient nerve is a cross-polytope's",
        nerve.iso,
        nerve.witness.unwrap_or_default(),
    );

    let mut fails = Vec::new();
    for (atom, member) in l.atoms().iter().zip(&a.members) {
        let h = homology(&member.complex);
        if !h.is_sphere(r - 2) {
            fails.push(format!("S_{}: {h}", g.format(*atom)));
        }
    }
    report.push_all("member homology spheres", fails);

    // intersections over non-empty subfamilies
    let m = a.members.len();
    let k = bound.max_size(m);
    let subsets = index_subsets(m, k);
    let mut law = Vec::new();
    let mut spheres = Vec::new();
    let mut seen: Vec<(Flat, SimplicialComplex<SignedVertex>)> = Vec::new();
    for js in &subsets {
        let mut t = a.members[js[0]].complex.clone();
        let mut h = l.atoms()[js[0]];
        for &j in &js[1..] {
            t = t.intersection(&a.members[j].complex);
            h = l.join(h, l.atoms()[j]);
        }
        if let Some((_, known)) = seen.iter().find(|(f, _)| *f == h) {
            if *known != t {
                law.push(format!("two subfamilies with join {} differ", g.format(h)));
            }
            continue;
        }
        let expected = rep.build_s(h);
        if expected.complex != t {
            law.push(format!("members {js:?} do not intersect in S_{}", g.format(h)));
        }
        let hp = homology(&t);
        if !hp.is_sphere(l.corank_of(h) as isize - 1) {
            spheres.push(format!("S_{}: {hp}", g.format(h)));
        }
        seen.push((h, t));
    }
    report.push_all("intersections are S_H", law);
    report.push_all("intersections are homology spheres", spheres);
    report.note(format!(
        "{} member subfamilies checked ({}), {} distinct intersections",
        subsets.len(),
        bound.describe(m),
        seen.len()
    ));

    let swap = rep.swap();
    let free = match z2_free_check(&a.ambient.complex, &swap) {
        Ok(true) => Vec::new(),
        Ok(false) => vec!["some face is fixed by the sign swap".to_string()],
        Err(e) => vec![e.to_string()],
    };
    report.push_all("free Z2 action", free);
    let mut invariant = Vec::new();
    for (atom, member) in l.atoms().iter().zip(&a.members) {
        match swap.image(&member.complex) {
            Ok(img) if img == member.complex => {}
            _ => invariant.push(format!("S_{} is not swap-invariant", g.format(*atom))),
        }
    }
    report.push_all("members are Z2-invariant", invariant);

    let mut drops = Vec::new();
    let ambient = (l.bottom(), a.ambient.complex.clone());
    for (h, u) in std::iter::once(&ambient).chain(&seen) {
        for (atom, member) in l.atoms().iter().zip(&a.members) {
            if u.is_subcomplex_of(&member.complex) {
                continue;
            }
            let joined = l.join(*h, *atom);
            if l.rank_of(joined) != l.rank_of(*h) + 1 {
                drops.push(format!(
                    "rank of {} ∨ {} is not rank + 1",
                    g.format(*h),
                    g.format(*atom)
                ));
                continue;
            }
            let hp = homology(&u.intersection(&member.complex));
            if !hp.is_sphere(l.corank_of(*h) as isize - 2) {
                drops.push(format!("S_{} ∩ S_{}: {hp}", g.format(*h), g.format(*atom)));
            }
        }
    }
    report.push_all("dimension drops by one", drops);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{default_flag, load_matroid, MatroidSpec};

    #[test]
    fn u24_roundtrip_and_axioms() {
        let l = load_matroid(&MatroidSpec::Uniform { r: 2, n: 4 }).unwrap();
        let rep = SphereRep::new(&l, default_flag(&l)).unwrap();
        let arr = rep.arrangement();
        assert_eq!(arr.ambient.complex.vertices().len(), 8);
        assert_eq!(arr.members.len(), 4);
        let flats = arrangement_flats(&arr).unwrap();
        assert_eq!(flats.len(), 6);
        atom_roundtrip(&l, &flats).unwrap();
        let report = verify_arrangement(&arr, SubsetBound::Auto);
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn rank_one() {
        let l = load_matroid(&MatroidSpec::Uniform { r: 1, n: 1 }).unwrap();
        let rep = SphereRep::new(&l, default_flag(&l)).unwrap();
        let arr = rep.arrangement();
        assert_eq!(arr.ambient.complex.facets().len(), 2);
        assert!(arr.members[0].complex.is_empty());
        assert_eq!(arrangement_flats(&arr).unwrap().len(), 2);
        assert!(verify_arrangement(&arr, SubsetBound::Auto).all_passed());
    }
}
