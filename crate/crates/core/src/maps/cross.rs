//! Change of flag: coatoms in distinct parts of two partitions, and the
//! retraction onto the cross-polytope they span.

use std::collections::BTreeMap;

use crate::elements::Flat;
use crate::error::{Error, Result};
use crate::lattice::{Flag, GeometricLattice};
use crate::report::ValidationReport;
use crate::sign::{Sign, SignVector};
use crate::sphere::{format_face, CoatomPartition, SignedVertex, SphereRep};
use crate::topo::{reduced_homology, SimplicialComplex, SimplicialMap};

/// Coatoms `C_0, .., C_{r-1}` with `C_i ∈ A_i(F)`, lying in pairwise distinct
/// parts of the partition induced by `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossSelection {
    pub coatoms: Vec<Flat>,
    /// Part of `C_i` under the first flag.
    pub f_parts: Vec<usize>,
    /// Part of `C_i` under the second flag.
    pub g_parts: Vec<usize>,
}

impl CrossSelection {
    /// Whether both lists of part indices are free of repeats.
    pub fn parts_distinct(&self) -> bool {
        let distinct = |v: &[usize]| {
            let mut s = v.to_vec();
            s.sort_unstable();
            s.windows(2).all(|w| w[0] != w[1])
        };
        distinct(&self.f_parts) && distinct(&self.g_parts)
    }
}

/// Selection inside the interval `[f[0], 1̂]`, where `f` and `g` are complete
/// flags of that interval starting at the same flat. The first coatom avoids
/// `f[1]` and contains `g[s-1]`, where `s` is least with `f[1] ⊆ g[s]`; the
/// rest come from `[f[1], 1̂]` with the flag `g[j] ∨ f[1]`, whose parts are
/// the parts of `g` other than `s-1`, merged in order.
fn select(l: &GeometricLattice, f: &[Flat], g: &[Flat]) -> Vec<Flat> {
    let r = f.len() - 1;
    if r == 0 {
        return Vec::new();
    }
    let atom = f[1];
    let s = g
        .iter()
        .position(|x| atom.is_subset(*x))
        .expect("the top contains every flat");
    let below = g[s - 1];
    let first = l
        .coatoms()
        .iter()
        .copied()
        .filter(|&c| below.is_subset(c) && !atom.is_subset(c))
        .min()
        .expect("a flat not above an atom lies in a coatom avoiding it");
    let mut lifted: Vec<Flat> = g.iter().map(|&x| l.join(x, atom)).collect();
    lifted.dedup();
    let mut out = vec![first];
    out.extend(select(l, &f[1..], &lifted));
    out
}

/// Picks `C_i ∈ A_i(F)` such that the `C_i` lie in pairwise distinct parts of
/// both partitions, recursing upwards through `[F_i, 1̂]`. Ties are broken by
/// the lexicographically smallest coatom.
pub fn select_cross_coatoms(l: &GeometricLattice, f: &Flag, g: &Flag) -> Result<CrossSelection> {
    for flag in [f, g] {
        if flag.chain().len() != l.rank() + 1 || flag.chain().iter().any(|&x| !l.contains(x)) {
            return Err(Error::IncompleteFlag(flag.describe(l)));
        }
    }
    let coatoms = select(l, f.chain(), g.chain());
    let pf = CoatomPartition::new(l, f)?;
    let pg = CoatomPartition::new(l, g)?;
    let lookup = |p: &CoatomPartition, c: Flat| {
        p.part_of(c)
            .ok_or_else(|| Error::Internal(format!("{} is not a coatom", l.ground().format(c))))
    };
    let f_parts = coatoms.iter().map(|&c| lookup(&pf, c)).collect::<Result<Vec<_>>>()?;
    let g_parts = coatoms.iter().map(|&c| lookup(&pg, c)).collect::<Result<Vec<_>>>()?;
    Ok(CrossSelection {
        coatoms,
        f_parts,
        g_parts,
    })
}

/// The maps `f: G_ε -> (C_i)_ε` for `G ∈ A_i(F)` and `f_G: G_ε -> (C_i)_ε`
/// for `G` in the `G`-part of `C_i`, with the cross-polytope `P` on the
/// selected coatoms and both ambient complexes.
#[derive(Clone, Debug)]
pub struct RetractDescriptor {
    pub selection: CrossSelection,
    pub f_map: SimplicialMap<SignedVertex, SignedVertex>,
    pub g_map: SimplicialMap<SignedVertex, SignedVertex>,
    pub cross_polytope: SimplicialComplex<SignedVertex>,
    pub source: SimplicialComplex<SignedVertex>,
    pub target: SimplicialComplex<SignedVertex>,
    pub rank: usize,
}

fn part_map(
    partition: &CoatomPartition,
    parts: &[usize],
    coatoms: &[Flat],
) -> SimplicialMap<SignedVertex, SignedVertex> {
    let mut map = BTreeMap::new();
    for (&p, &c) in parts.iter().zip(coatoms) {
        for &g in partition.part(p) {
            for s in Sign::BOTH {
                map.insert(SignedVertex::new(g, s), SignedVertex::new(c, s));
            }
        }
    }
    SimplicialMap::new(map)
}

pub fn retraction_map(l: &GeometricLattice, f: &Flag, g: &Flag) -> Result<RetractDescriptor> {
    let selection = select_cross_coatoms(l, f, g)?;
    let rep_f = SphereRep::new(l, f.clone())?;
    let rep_g = SphereRep::new(l, g.clone())?;
    let f_map = part_map(rep_f.partition(), &selection.f_parts, &selection.coatoms);
    let g_map = part_map(rep_g.partition(), &selection.g_parts, &selection.coatoms);
    let cross_polytope = SimplicialComplex::from_faces(SignVector::all_full(selection.coatoms.len()).into_iter().map(
        |v| {
            selection
                .coatoms
                .iter()
                .zip(v.entries())
                .map(|(&c, s)| SignedVertex::new(c, s.expect("full sign vector")))
                .collect::<Vec<_>>()
        },
    ));
    Ok(RetractDescriptor {
        f_map,
        g_map,
        cross_polytope,
        source: rep_f.build_s(l.bottom()).complex,
        target: rep_g.build_s(l.bottom()).complex,
        rank: l.rank(),
        selection,
    })
}

fn retraction_failures(
    map: &SimplicialMap<SignedVertex, SignedVertex>,
    complex: &SimplicialComplex<SignedVertex>,
    p: &SimplicialComplex<SignedVertex>,
) -> Vec<String> {
    let mut out = Vec::new();
    if let Err(e) = map.check_simplicial(complex, p) {
        out.push(format!("not simplicial into P: {e}"));
    }
    match map.image(complex) {
        Ok(img) if img == *p => {}
        Ok(_) => out.push("image is not all of P".into()),
        Err(e) => out.push(e.to_string()),
    }
    if let Some(v) = p.vertices().into_iter().find(|v| map.apply(v) != Some(v)) {
        out.push(format!("moves the vertex {v:?} of P"));
    }
    if let Some((v, _)) = map
        .vertex_map()
        .iter()
        .find(|(_, w)| map.apply(w) != Some(*w))
    {
        out.push(format!("f∘f differs from f at {v:?}"));
    }
    out
}

/// Checks that both maps are retractions onto `P`, that `P` lies in both
/// ambient complexes, that `S_0̂(F) -> P -> S_0̂(G)` is simplicial, and that
/// all three complexes have the homology of `S^{r-1}`.
pub fn verify_retraction(d: &RetractDescriptor) -> ValidationReport {
    let mut report = ValidationReport::new();
    report.push(
        "selection in distinct parts",
        d.selection.parts_distinct(),
        format!("F-parts {:?}, G-parts {:?}", d.selection.f_parts, d.selection.g_parts),
    );
    report.push("P ⊆ S_0̂(F)", d.cross_polytope.is_subcomplex_of(&d.source), "");
    report.push("P ⊆ S_0̂(G)", d.cross_polytope.is_subcomplex_of(&d.target), "");
    report.push_all(
        "f retracts S_0̂(F) onto P",
        retraction_failures(&d.f_map, &d.source, &d.cross_polytope),
    );
    report.push_all(
        "f_G retracts S_0̂(G) onto P",
        retraction_failures(&d.g_map, &d.target, &d.cross_polytope),
    );
    report.push(
        "S_0̂(F) -> S_0̂(G) simplicial",
        d.f_map.check_simplicial(&d.source, &d.target).is_ok(),
        "",
    );
    let dim = d.rank as isize - 1;
    let mut spheres = Vec::new();
    for (name, k) in [("S_0̂(F)", &d.source), ("S_0̂(G)", &d.target), ("P", &d.cross_polytope)] {
        let h = reduced_homology(k);
        if !h.is_sphere(dim) {
            spheres.push(format!("{name}: {h}"));
        }
    }
    report.push_all(format!("homology of S^{dim} thrice"), spheres);
    report
}

/// Renders a retraction's selection for reports.
pub fn describe_selection(l: &GeometricLattice, s: &CrossSelection) -> String {
    let g = l.ground();
    let faces: Vec<String> = s
        .coatoms
        .iter()
        .enumerate()
        .map(|(i, &c)| format!("C_{i} = {} (G-part {})", g.format(c), s.g_parts[i]))
        .collect();
    faces.join(", ")
}

/// Renders `P` as its vertex set.
pub fn describe_cross_polytope(l: &GeometricLattice, d: &RetractDescriptor) -> String {
    format_face(l.ground(), &d.cross_polytope.vertices())
}
