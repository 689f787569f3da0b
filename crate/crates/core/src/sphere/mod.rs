//! The flag-dependent complexes `S_G` and their sign-vector combinatorics.
//!
//! A complete flag `F_0 < .. < F_r` splits the coatoms into parts
//! `A_i = coat(F_i) \ coat(F_{i+1})`. Each coatom `C` gives two vertices
//! `C_+` and `C_-`, and `S_G` has one maximal face for every way of choosing
//! a sign on each non-empty block `coat(G) ∩ A_i`.

mod arrangement;
mod json;

use std::collections::BTreeSet;
use std::fmt;

pub use arrangement::{
    arrangement_flats, atom_roundtrip, verify_arrangement, HomotopyArrangement,
};
pub use json::{complex_from_json, ComplexJson, VertexJson};

use crate::elements::{Flat, GroundSet};
use crate::error::{Error, Result};
use crate::lattice::{Flag, GeometricLattice};
use crate::sign::{Sign, SignVector};
use crate::topo::{index_subsets, NerveIso, SimplicialComplex, SimplicialMap};

/// The vertex `C_+` or `C_-` for a coatom `C`. Ordered by coatom, then `+`
/// before `-`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedVertex {
    pub coatom: Flat,
    pub sign: Sign,
}

impl SignedVertex {
    pub fn new(coatom: Flat, sign: Sign) -> Self {
        SignedVertex { coatom, sign }
    }

    pub fn flipped(self) -> Self {
        SignedVertex::new(self.coatom, self.sign.flip())
    }

    pub fn display(self, ground: &GroundSet) -> String {
        format!("{}{}", ground.format(self.coatom), self.sign.symbol())
    }
}

/// Renders a face as `{C_s, ..}` with element labels.
pub fn format_face(ground: &GroundSet, face: &[SignedVertex]) -> String {
    let parts: Vec<String> = face.iter().map(|v| v.display(ground)).collect();
    format!("{{{}}}", parts.join(", "))
}

/// The blocks `A_0, .., A_{r-1}` of coatoms induced by a flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoatomPartition {
    parts: Vec<Vec<Flat>>,
}

impl CoatomPartition {
    /// Coatom `C` lands in block `i` for the largest `i` with `F_i ⊆ C`.
    pub fn new(lattice: &GeometricLattice, flag: &Flag) -> Result<Self> {
        let r = lattice.rank();
        let mut parts = vec![Vec::new(); r];
        for &c in lattice.coatoms() {
            let i = (0..r)
                .rev()
                .find(|&i| flag.get(i).is_subset(c))
                .ok_or_else(|| Error::Internal("coatom does not contain the bottom flat".into()))?;
            parts[i].push(c);
        }
        if let Some(i) = parts.iter().position(Vec::is_empty) {
            return Err(Error::Internal(format!(
                "coatom block {i} is empty; the lattice is not geometric"
            )));
        }
        Ok(CoatomPartition { parts })
    }

    pub fn parts(&self) -> &[Vec<Flat>] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &[Flat] {
        &self.parts[i]
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Block index of a coatom.
    pub fn part_of(&self, coatom: Flat) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(&coatom))
    }
}

/// `S_G` together with the flat it represents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepComplex {
    pub flat: Flat,
    pub complex: SimplicialComplex<SignedVertex>,
}

/// The representation of a lattice with respect to one complete flag.
#[derive(Clone, Debug)]
pub struct SphereRep<'a> {
    lattice: &'a GeometricLattice,
    flag: Flag,
    partition: CoatomPartition,
}

impl<'a> SphereRep<'a> {
    pub fn new(lattice: &'a GeometricLattice, flag: Flag) -> Result<Self> {
        let partition = CoatomPartition::new(lattice, &flag)?;
        Ok(SphereRep {
            lattice,
            flag,
            partition,
        })
    }

    pub fn lattice(&self) -> &'a GeometricLattice {
        self.lattice
    }

    pub fn flag(&self) -> &Flag {
        &self.flag
    }

    pub fn partition(&self) -> &CoatomPartition {
        &self.partition
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    /// The blocks `coat(G) ∩ A_i`, indexed by `i`.
    pub fn blocks(&self, g: Flat) -> Vec<Vec<Flat>> {
        self.partition
            .parts
            .iter()
            .map(|p| p.iter().copied().filter(|c| g.is_subset(*c)).collect())
            .collect()
    }

    /// `c(G)`: indices of the non-empty blocks of `G`.
    pub fn support_c(&self, g: Flat) -> Vec<usize> {
        self.blocks(g)
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.is_empty())
            .map(|(i, _)| i)
            .collect()
    }

    /// Builds `S_G`. Panics if `g` is not a flat.
    pub fn build_s(&self, g: Flat) -> RepComplex {
        assert!(self.lattice.contains(g), "{} is not a flat", self.lattice.ground().format(g));
        let blocks = self.blocks(g);
        let c = self.support_c(g);
        let facets = SignVector::all_full(c.len()).into_iter().map(|choice| {
            let mut face = Vec::new();
            for (k, &i) in c.iter().enumerate() {
                let s = choice.get(k).expect("full sign vector");
                face.extend(blocks[i].iter().map(|&coat| SignedVertex::new(coat, s)));
            }
            face
        });
        RepComplex {
            flat: g,
            complex: SimplicialComplex::from_faces(facets),
        }
    }

    /// `sign(σ)`: entry `i` is the common sign of the vertices of `σ` in block
    /// `i`, or `0` if there are none.
    pub fn sign_of_simplex(&self, face: &[SignedVertex], g: Flat) -> Result<SignVector> {
        let ground = self.lattice.ground();
        let mut v = SignVector::zero(self.rank());
        for vert in face {
            if !g.is_subset(vert.coatom) {
                return Err(Error::NotAFace(format!(
                    "{} is not a vertex of S_{}",
                    vert.display(ground),
                    ground.format(g)
                )));
            }
            let i = self.partition.part_of(vert.coatom).ok_or_else(|| {
                Error::NotAFace(format!("{} is not a coatom", ground.format(vert.coatom)))
            })?;
            match v.get(i) {
                Some(s) if s != vert.sign => {
                    return Err(Error::NotAFace(format!("mixed signs in block {i}")))
                }
                _ => v.set(i, Some(vert.sign)),
            }
        }
        Ok(v)
    }

    /// `σ(v, G)`: all vertices `C_{v_i}` with `C ∈ coat(G) ∩ A_i`, `v_i ≠ 0`.
    pub fn sigma_of(&self, v: &SignVector, g: Flat) -> Vec<SignedVertex> {
        let mut face: Vec<SignedVertex> = self
            .blocks(g)
            .iter()
            .enumerate()
            .filter_map(|(i, block)| v.get(i).map(|s| (block, s)))
            .flat_map(|(block, s)| block.iter().map(move |&c| SignedVertex::new(c, s)))
            .collect();
        face.sort();
        face
    }

    /// `S_G ∩ S_H = S_{G ∨ H}` as sets of faces.
    pub fn intersection_law_check(&self, g: Flat, h: Flat) -> bool {
        let lhs = self.build_s(g).complex.intersection(&self.build_s(h).complex);
        lhs == self.build_s(self.lattice.join(g, h)).complex
    }

    /// The involution `C_± -> C_∓` on all vertices of `S_0̂`.
    pub fn swap(&self) -> SimplicialMap<SignedVertex, SignedVertex> {
        let vertices = self
            .lattice
            .coatoms()
            .iter()
            .flat_map(|&c| Sign::BOTH.map(|s| SignedVertex::new(c, s)));
        SimplicialMap::from_fn(vertices, |v| v.flipped())
    }

    /// Checks that `σ -> sign(σ)_*` identifies the facet nerve of `S_G` with
    /// that of the `corank(G)`-dimensional cross-polytope: there are
    /// `2^|c(G)|` facets with distinct labels, and the facets through each
    /// vertex `C_ε`, `C ∈ A_i`, are exactly those with `sign_i = ε`.
    pub fn canonical_nerve_check(&self, g: Flat) -> NerveIso {
        let fail = |witness: String| NerveIso {
            iso: false,
            labels: None,
            witness: Some(witness),
        };
        let s = self.build_s(g);
        let c = self.support_c(g);
        let facets = s.complex.facets();
        if c.is_empty() {
            // the 0-dimensional cross-polytope has empty boundary
            return if facets.is_empty() {
                NerveIso {
                    iso: true,
                    labels: Some(Vec::new()),
                    witness: None,
                }
            } else {
                fail("c(G) is empty but S_G is not".into())
            };
        }
        if facets.len() != 1 << c.len() {
            return fail(format!("{} facets for |c(G)| = {}", facets.len(), c.len()));
        }
        let signs: Vec<SignVector> = match facets
            .iter()
            .map(|f| self.sign_of_simplex(f, g))
            .collect::<Result<_>>()
        {
            Ok(v) => v,
            Err(e) => return fail(e.to_string()),
        };
        let labels: Vec<SignVector> = signs
            .iter()
            .map(|v| SignVector::new(v.compressed().into_iter().map(Some).collect()))
            .collect();
        if labels.iter().collect::<BTreeSet<_>>().len() != labels.len() {
            return fail("two facets have the same sign vector".into());
        }
        for vert in s.complex.vertices() {
            let i = self.partition.part_of(vert.coatom).expect("vertex coatom");
            for (facet, sign) in facets.iter().zip(&signs) {
                let through = facet.binary_search(&vert).is_ok();
                if through != (sign.get(i) == Some(vert.sign)) {
                    return fail(format!(
                        "star of {} is not a half-space of sign vectors",
                        vert.display(self.lattice.ground())
                    ));
                }
            }
        }
        NerveIso {
            iso: true,
            labels: Some(labels),
            witness: None,
        }
    }

    /// For subfamilies of facets of `S_G` of size up to `max_size`, checks
    /// `∩ σ_i = σ(∧ sign(σ_i), G)`. Returns the number of subfamilies checked
    /// or a description of the first failure.
    pub fn facet_meet_law(&self, g: Flat, max_size: usize) -> std::result::Result<usize, String> {
        let s = self.build_s(g);
        let facets = s.complex.facets();
        let signs: Vec<SignVector> = facets
            .iter()
            .map(|f| self.sign_of_simplex(f, g))
            .collect::<Result<_>>()
            .map_err(|e| e.to_string())?;
        let subsets = index_subsets(facets.len(), max_size);
        for js in &subsets {
            let mut common: Vec<SignedVertex> = facets[js[0]].clone();
            let mut meet = signs[js[0]].clone();
            for &j in &js[1..] {
                common.retain(|v| facets[j].binary_search(v).is_ok());
                meet = meet.meet(&signs[j]);
            }
            if common != self.sigma_of(&meet, g) {
                return Err(format!(
                    "facets {js:?} of S_{} meet in {} but the sign meet is {meet}",
                    self.lattice.ground().format(g),
                    format_face(self.lattice.ground(), &common)
                ));
            }
        }
        Ok(subsets.len())
    }

    pub fn arrangement(&self) -> HomotopyArrangement<'a> {
        HomotopyArrangement::new(self)
    }
}

impl fmt::Display for RepComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.complex)
    }
}
