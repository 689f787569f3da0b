//! Oracles computed from first principles, sharing nothing with the
//! library's construction code beyond the lattice data.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use hsrep::elements::{ElementSet, Flat};
use hsrep::lattice::{load_matroid, Flag, GeometricLattice, MatroidSpec};
use hsrep::om::VectorConfig;
use hsrep::sign::{Sign, SignVector};
use hsrep::sphere::SignedVertex;
use hsrep::topo::SimplicialComplex;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn lattice(name: &str) -> GeometricLattice {
    load_matroid(&MatroidSpec::from_json(&fixture_text(name)).unwrap()).unwrap()
}

pub fn vectors(name: &str) -> VectorConfig {
    VectorConfig::from_json(&fixture_text(name)).unwrap()
}

pub const MATROID_FIXTURES: [&str; 6] = [
    "u24.json",
    "u34.json",
    "bool3.json",
    "fano_gf2.json",
    "nonfano_q.json",
    "n134.json",
];

pub const VECTOR_FIXTURES: [&str; 7] = [
    "u24_vec.json",
    "u34_vec.json",
    "n_vec.json",
    "coord2.json",
    "coord3.json",
    "nonfano_vec.json",
    "u24_special.json",
];

pub fn set(l: &GeometricLattice, labels: &[&str]) -> ElementSet {
    l.ground().subset(labels).unwrap()
}

/// Every complete flag, by walking covers upward from the bottom.
pub fn all_flags(l: &GeometricLattice) -> Vec<Flag> {
    let flats = l.flats();
    let rank = |x: Flat| flats.iter().position(|f| *f == x).map(|i| l.rank_of(flats[i])).unwrap();
    let mut chains: Vec<Vec<Flat>> = vec![vec![l.bottom()]];
    for _ in 0..l.rank() {
        let mut next = Vec::new();
        for c in &chains {
            let last = *c.last().unwrap();
            for &y in flats {
                if last.is_proper_subset(y) && rank(y) == rank(last) + 1 {
                    let mut d = c.clone();
                    d.push(y);
                    next.push(d);
                }
            }
        }
        chains = next;
    }
    chains.into_iter().map(|c| Flag::new(l, c).unwrap()).collect()
}

/// Smallest flat containing `a`, as the intersection of all flats above it.
pub fn closure(l: &GeometricLattice, a: ElementSet) -> Flat {
    l.flats()
        .iter()
        .filter(|f| a.is_subset(**f))
        .fold(l.ground().all(), |acc, f| acc.intersection(*f))
}

pub fn coatoms(l: &GeometricLattice) -> Vec<Flat> {
    let top = l.ground().all();
    let maximal: Vec<Flat> = l.flats().iter().copied().filter(|&f| f != top).collect();
    maximal
        .iter()
        .copied()
        .filter(|&f| !maximal.iter().any(|&g| f.is_proper_subset(g)))
        .collect()
}

/// Part of a coatom under a flag: the largest `i` with `F_i ⊆ C`.
pub fn part(flag: &Flag, c: Flat) -> usize {
    (0..flag.chain().len()).rev().find(|&i| flag.get(i).is_subset(c)).unwrap()
}

pub type Vertex = (Flat, bool);
pub type Face = BTreeSet<Vertex>;

/// Maximal faces of `S_G`: one sign per non-empty block `coat(G) ∩ A_i`.
pub fn oracle_facets(l: &GeometricLattice, flag: &Flag, g: Flat) -> Vec<Face> {
    let mut blocks: BTreeMap<usize, Vec<Flat>> = BTreeMap::new();
    for c in coatoms(l) {
        if g.is_subset(c) {
            blocks.entry(part(flag, c)).or_default().push(c);
        }
    }
    let blocks: Vec<Vec<Flat>> = blocks.into_values().collect();
    if blocks.is_empty() {
        return Vec::new();
    }
    (0..1u32 << blocks.len())
        .map(|mask| {
            blocks
                .iter()
                .enumerate()
                .flat_map(|(k, b)| b.iter().map(move |&c| (c, mask >> k & 1 == 0)))
                .collect()
        })
        .collect()
}

/// All non-empty faces generated by `facets`.
pub fn faces_of<V: Ord + Clone>(facets: &[BTreeSet<V>]) -> BTreeSet<BTreeSet<V>> {
    let mut out = BTreeSet::new();
    for f in facets {
        let items: Vec<V> = f.iter().cloned().collect();
        for mask in 1u64..1 << items.len() {
            out.insert(
                items
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, v)| v.clone())
                    .collect(),
            );
        }
    }
    out
}

pub fn oracle_faces(l: &GeometricLattice, flag: &Flag, g: Flat) -> BTreeSet<Face> {
    faces_of(&oracle_facets(l, flag, g))
}

/// Non-empty faces of a library complex in oracle form.
pub fn library_faces(k: &SimplicialComplex<SignedVertex>) -> BTreeSet<Face> {
    k.all_faces()
        .into_iter()
        .filter(|f| !f.is_empty())
        .map(|f| f.iter().map(|v| (v.coatom, v.sign == Sign::Plus)).collect())
        .collect()
}

const P: u64 = 1_000_003;

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = pow_mod(rows[rank][c], P - 2);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % P;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c];
                for k in 0..cols {
                    rows[r][k] = (rows[r][k] + P - f * rows[rank][k] % P) % P;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced Betti numbers over `Z/p` for a large prime `p`, from the facet
/// list. Index `d` holds `b̃_d`; an empty complex gives `[]`.
pub fn betti_mod_p<V: Ord + Clone>(facets: &[BTreeSet<V>]) -> Vec<usize> {
    let faces = faces_of(facets);
    if faces.is_empty() {
        return Vec::new();
    }
    let top = faces.iter().map(BTreeSet::len).max().unwrap();
    let by_dim: Vec<Vec<BTreeSet<V>>> = (1..=top)
        .map(|k| faces.iter().filter(|f| f.len() == k).cloned().collect())
        .collect();
    // rank of the boundary from dimension d to d - 1; d = 0 is augmentation
    let mut ranks = vec![1usize];
    for d in 1..top {
        let lower: BTreeMap<&BTreeSet<V>, usize> =
            by_dim[d - 1].iter().enumerate().map(|(i, f)| (f, i)).collect();
        let rows: Vec<Vec<u64>> = by_dim[d]
            .iter()
            .map(|f| {
                let mut row = vec![0u64; lower.len()];
                for (i, v) in f.iter().enumerate() {
                    let mut g = f.clone();
                    g.remove(v);
                    row[lower[&g]] = if i % 2 == 0 { 1 } else { P - 1 };
                }
                row
            })
            .collect();
        ranks.push(rank_mod_p(rows));
    }
    ranks.push(0);
    (0..top).map(|d| by_dim[d].len() - ranks[d] - ranks[d + 1]).collect()
}

/// `[0, .., 0, 1]` of length `d + 1`; the empty list for `d = -1`.
pub fn sphere_betti(d: isize) -> Vec<usize> {
    if d < 0 {
        return Vec::new();
    }
    let mut v = vec![0; d as usize + 1];
    v[d as usize] = 1;
    v
}

/// Drops trailing zeros so that profiles of different dimension compare.
pub fn trim(mut b: Vec<usize>) -> Vec<usize> {
    while b.last() == Some(&0) {
        b.pop();
    }
    b
}

/// Sign patterns `(⟨y, v_e⟩)_e` over an integer grid of functionals `y`.
pub fn grid_covectors(v: &VectorConfig, radius: i64) -> BTreeSet<SignVector> {
    let r = v.dimension();
    let mut out = BTreeSet::new();
    let side = (2 * radius + 1) as usize;
    for idx in 0..side.pow(r as u32) {
        let y: Vec<i64> = (0..r)
            .map(|k| (idx / side.pow(k as u32) % side) as i64 - radius)
            .collect();
        let signs = v
            .columns()
            .iter()
            .map(|col| {
                let dot = col
                    .iter()
                    .zip(&y)
                    .fold(num_rational::BigRational::from_integer(0.into()), |acc, (a, b)| {
                        acc + a * num_rational::BigRational::from_integer((*b).into())
                    });
                hsrep::sign::sign_of(dot.cmp(&num_rational::BigRational::from_integer(0.into())))
            })
            .collect();
        out.insert(SignVector::new(signs));
    }
    out
}

/// Maximal chains of a finite poset given by a strict order relation.
pub fn order_complex_facets<T: Clone + Ord>(items: &[T], less: impl Fn(&T, &T) -> bool) -> Vec<BTreeSet<T>> {
    fn extend<T: Clone + Ord>(
        items: &[T],
        less: &dyn Fn(&T, &T) -> bool,
        chain: &mut Vec<usize>,
        out: &mut Vec<BTreeSet<T>>,
    ) {
        let last = *chain.last().unwrap();
        let ups: Vec<usize> = (0..items.len()).filter(|&j| less(&items[last], &items[j])).collect();
        if ups.is_empty() {
            out.push(chain.iter().map(|&i| items[i].clone()).collect());
            return;
        }
        for j in ups {
            chain.push(j);
            extend(items, less, chain, out);
            chain.pop();
        }
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        if items.iter().any(|x| less(x, &items[i])) {
            continue;
        }
        extend(items, &less, &mut vec![i], &mut out);
    }
    out
}

/// Conformal order `X ≤ Y`: `X_e ∈ {0, Y_e}` everywhere.
pub fn conforms(x: &SignVector, y: &SignVector) -> bool {
    x.entries().iter().zip(y.entries()).all(|(a, b)| a.is_none() || a == b)
}

pub fn label_face(l: &GeometricLattice, face: &Face) -> Vec<String> {
    face.iter()
        .map(|(c, plus)| format!("{}{}", l.ground().format(*c), if *plus { "+" } else { "-" }))
        .collect()
}
