//! The injection `ι` of the covector poset into the face poset of `S_0̂`,
//! and the covers used to show it is a homotopy equivalence on each `M_G`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use super::covectors::{covector_poset, underlying_matroid, zero_set, CovectorSet};
use crate::elements::{ElementSet, Flat};
use crate::error::{Error, Result};
use crate::lattice::{Flag, GeometricLattice};
use crate::report::ValidationReport;
use crate::sign::{Sign, SignVector};
use crate::sphere::{format_face, SignedVertex, SphereRep};
use crate::topo::{
    carrier_check, face_poset, order_complex, quillen_fibers_check, reduced_homology,
    HomologyProfile, Poset, SimplicialComplex, SubsetBound,
};

/// `e_i`: the lexicographically smallest element of `F_i ∖ F_{i-1}`, for
/// `i = 1..r`.
pub fn default_pivots(flag: &Flag) -> Vec<usize> {
    flag.chain()
        .windows(2)
        .map(|w| w[1].difference(w[0]).first().expect("complete flag"))
        .collect()
}

fn check_pivot_positions(l: &GeometricLattice, flag: &Flag, pivots: &[usize]) -> Result<()> {
    let g = l.ground();
    if pivots.len() != flag.rank() {
        return Err(Error::BadPivot(format!(
            "{} pivots for a flag of rank {}",
            pivots.len(),
            flag.rank()
        )));
    }
    for (i, &e) in pivots.iter().enumerate() {
        let diff = flag.get(i + 1).difference(flag.get(i));
        if e >= g.len() || !diff.contains(e) {
            let name = if e < g.len() { g.label(e).to_string() } else { e.to_string() };
            return Err(Error::BadPivot(format!(
                "e_{} = {name} is not in F_{} ∖ F_{} = {}",
                i + 1,
                i + 1,
                i,
                g.format(diff)
            )));
        }
    }
    Ok(())
}

/// For each `i = 0..r`, compares `coat(F_i)` with the zero sets of the
/// cocircuits that vanish on `e_1, ..., e_i`.
pub fn pivots_check(
    l: &GeometricLattice,
    flag: &Flag,
    covectors: &CovectorSet,
    pivots: &[usize],
) -> Result<ValidationReport> {
    check_pivot_positions(l, flag, pivots)?;
    let g = l.ground();
    let mut report = ValidationReport::new();
    for i in 0..=flag.rank() {
        let prefix = ElementSet::from_indices(pivots[..i].iter().copied());
        let expected: BTreeSet<Flat> = l.coat_above(flag.get(i)).into_iter().collect();
        let got: BTreeSet<Flat> = covectors
            .cocircuits()
            .iter()
            .map(zero_set)
            .filter(|z| prefix.is_subset(*z))
            .collect();
        let detail = if expected == got {
            String::new()
        } else {
            let fmt = |s: &BTreeSet<Flat>| s.iter().map(|&x| g.format(x)).collect::<Vec<_>>().join(" ");
            format!("coatoms [{}] vs cocircuit zero sets [{}]", fmt(&expected), fmt(&got))
        };
        report.push(format!("coat(F_{i}) from pivots"), expected == got, detail);
    }
    Ok(report)
}

/// Which covectors of `M_G` go into the member `A_v(G)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverRule {
    /// `X(e_i) ∈ {0, v_i}` at every pivot `e_i` whose block meets `coat(G)`.
    #[default]
    Conformal,
    /// `X(e_{i_X}) = v_{i_X}` at the first pivot where `X` is non-zero.
    FirstPivot,
}

/// A flag, a choice of pivots, and the covectors of an oriented matroid whose
/// underlying matroid is the lattice of the flag.
#[derive(Clone, Debug)]
pub struct EmbeddingData<'a> {
    rep: SphereRep<'a>,
    covectors: &'a CovectorSet,
    pivots: Vec<usize>,
}

/// The covers `{A_v(G)}` of `M_G ∖ 0` and `{B_v(G)}` of the faces of `S_G`,
/// one member per `v ∈ {+,-}^r`, with `ι` between them.
#[derive(Clone, Debug)]
pub struct EmbeddingCovers {
    pub source: Poset<SignVector>,
    pub target: Poset<Vec<SignedVertex>>,
    pub map: Vec<usize>,
    pub labels: Vec<SignVector>,
    pub a: Vec<Vec<usize>>,
    pub b: Vec<Vec<usize>>,
}

impl EmbeddingCovers {
    pub fn carrier_check(&self, bound: SubsetBound) -> Result<ValidationReport> {
        carrier_check(&self.source, &self.target, &self.map, &self.a, &self.b, bound)
    }
}

impl<'a> EmbeddingData<'a> {
    /// Fails unless the zero sets of `covectors` are the flats of the
    /// representation's lattice and the pivots satisfy `e_i ∈ F_i ∖ F_{i-1}`.
    pub fn new(rep: SphereRep<'a>, covectors: &'a CovectorSet, pivots: Vec<usize>) -> Result<Self> {
        let l = rep.lattice();
        if covectors.ground().labels() != l.ground().labels() {
            return Err(Error::GroundSetMismatch);
        }
        let mut ours: Vec<Flat> = l.flats().to_vec();
        ours.sort();
        if covectors.zero_sets() != ours {
            return Err(Error::Malformed(
                "the covectors do not have this lattice as underlying matroid".into(),
            ));
        }
        check_pivot_positions(l, rep.flag(), &pivots)?;
        Ok(EmbeddingData {
            rep,
            covectors,
            pivots,
        })
    }

    pub fn rep(&self) -> &SphereRep<'a> {
        &self.rep
    }

    pub fn covectors(&self) -> &'a CovectorSet {
        self.covectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `i_X - 1`: the position of the first pivot where `X` is non-zero.
    pub fn pivot_index(&self, x: &SignVector) -> Option<usize> {
        self.pivots.iter().position(|&e| x.get(e).is_some())
    }

    /// `ι(Y)`: the vertices `(X(e_{i_X}))_{X^{-1}(0)}` over cocircuits
    /// `X <= Y`, sorted.
    pub fn iota(&self, y: &SignVector) -> Result<Vec<SignedVertex>> {
        if y.is_zero() {
            return Err(Error::ZeroCovector);
        }
        if !self.covectors.contains(y) {
            return Err(Error::Malformed(format!("{y} is not a covector")));
        }
        let mut face: Vec<SignedVertex> = self
            .covectors
            .cocircuits()
            .iter()
            .filter(|x| x.conforms_to(y))
            .map(|x| {
                let k = self.pivot_index(x).expect("pivots span, so no cocircuit vanishes on all");
                let s = x.get(self.pivots[k]).expect("non-zero at its pivot");
                SignedVertex::new(zero_set(x), s)
            })
            .collect();
        face.sort();
        face.dedup();
        Ok(face)
    }

    /// `M_G ∖ 0`.
    pub fn nonzero_flat(&self, g: Flat) -> Result<Vec<SignVector>> {
        let mut m = self.covectors.covector_flat(g)?;
        m.retain(|x| !x.is_zero());
        Ok(m)
    }

    /// Whether `x ∈ M_G ∖ 0` lies in `A_v(G)` under `rule`.
    pub fn in_a_v(&self, x: &SignVector, g: Flat, v: &SignVector, rule: CoverRule) -> bool {
        match rule {
            CoverRule::Conformal => self
                .rep
                .support_c(g)
                .into_iter()
                .all(|k| x.get(self.pivots[k]).is_none_or(|s| v.get(k) == Some(s))),
            CoverRule::FirstPivot => self
                .pivot_index(x)
                .is_some_and(|k| x.get(self.pivots[k]) == v.get(k)),
        }
    }

    pub fn a_v(&self, g: Flat, v: &SignVector, rule: CoverRule) -> Result<Vec<SignVector>> {
        let mut m = self.nonzero_flat(g)?;
        m.retain(|x| self.in_a_v(x, g, v, rule));
        Ok(m)
    }

    /// The vertex set of the simplex `B_v(G)`: `(v_i)_C` for `C ∈ A_i ∩ coat(G)`.
    pub fn b_v(&self, g: Flat, v: &SignVector) -> Vec<SignedVertex> {
        self.rep.sigma_of(v, g)
    }

    pub fn build_covers(&self, g: Flat, rule: CoverRule) -> Result<EmbeddingCovers> {
        let l = self.rep.lattice();
        if !l.contains(g) {
            return Err(Error::NotAFlat(l.ground().format(g)));
        }
        let source = covector_poset(self.nonzero_flat(g)?);
        let target = face_poset(&self.rep.build_s(g).complex);
        let index: BTreeMap<&Vec<SignedVertex>, usize> =
            target.elements().iter().enumerate().map(|(i, f)| (f, i)).collect();
        let map = source
            .elements()
            .iter()
            .map(|y| {
                let face = self.iota(y)?;
                index.get(&face).copied().ok_or_else(|| {
                    Error::NotAFace(format!(
                        "ι({y}) = {} is not a face of S_{}",
                        format_face(l.ground(), &face),
                        l.ground().format(g)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let labels = SignVector::all_full(self.rep.rank());
        let a = labels
            .iter()
            .map(|v| {
                (0..source.len())
                    .filter(|&i| self.in_a_v(source.element(i), g, v, rule))
                    .collect()
            })
            .collect();
        let b = labels
            .iter()
            .map(|v| {
                let simplex = self.b_v(g, v);
                (0..target.len())
                    .filter(|&i| is_subset(target.element(i), &simplex))
                    .collect()
            })
            .collect();
        Ok(EmbeddingCovers {
            source,
            target,
            map,
            labels,
            a,
            b,
        })
    }
}

fn is_subset(a: &[SignedVertex], b: &[SignedVertex]) -> bool {
    a.iter().all(|v| b.binary_search(v).is_ok())
}

/// Checks that `ι` is a well-defined, injective, order-preserving,
/// `Z/2`-equivariant map taking each `M_G ∖ 0` into the faces of `S_G`, and
/// compares reduced homology of `Δ(M_G ∖ 0)` with that of `S_G` for every
/// flat `G`.
pub fn verify_embedding(e: &EmbeddingData) -> ValidationReport {
    let l = e.rep.lattice();
    let ground = l.ground();
    let show = |face: &[SignedVertex]| format_face(ground, face);
    let mut report = ValidationReport::new();
    let nonzero: Vec<&SignVector> = e.covectors.nonzero().collect();
    let mut images: HashMap<&SignVector, Vec<SignedVertex>> = HashMap::new();
    let mut errors = Vec::new();
    for &y in &nonzero {
        match e.iota(y) {
            Ok(face) => {
                images.insert(y, face);
            }
            Err(err) => errors.push(format!("ι({y}): {err}")),
        }
    }
    report.push_all("ι defined on every non-zero covector", errors);

    let mut s_cache: HashMap<Flat, SimplicialComplex<SignedVertex>> = HashMap::new();
    let mut complex_of = |g: Flat| s_cache.entry(g).or_insert_with(|| e.rep.build_s(g).complex).clone();

    let mut signs = Vec::new();
    let mut faces = Vec::new();
    for (y, face) in &images {
        let z = zero_set(y);
        if let Err(err) = e.rep.sign_of_simplex(face, z) {
            signs.push(format!("ι({y}) = {}: {err}", show(face)));
        }
        if face.is_empty() || !complex_of(z).contains_face(face) {
            faces.push(format!("ι({y}) = {} is not a face of S_{}", show(face), ground.format(z)));
        }
    }
    report.push_all("one sign per block", signs);
    report.push_all("ι(Y) is a face of S_{zero set of Y}", faces);

    let mut seen: HashMap<&Vec<SignedVertex>, &SignVector> = HashMap::new();
    let mut clashes = Vec::new();
    for (y, face) in &images {
        if let Some(other) = seen.insert(face, y) {
            clashes.push(format!("ι({y}) = ι({other}) = {}", show(face)));
        }
    }
    report.push_all("injective", clashes);

    let mut order = Vec::new();
    for (x, fx) in &images {
        for (y, fy) in &images {
            if x != y && x.conforms_to(y) && !is_subset(fx, fy) {
                order.push(format!("{x} < {y} but ι({x}) ⊄ ι({y})"));
            }
        }
    }
    report.push_all("order-preserving", order);

    let mut into = Vec::new();
    for &g in l.flats() {
        let s = complex_of(g);
        for (y, face) in &images {
            if g.is_subset(zero_set(y)) && !s.contains_face(face) {
                into.push(format!("ι({y}) is not a face of S_{}", ground.format(g)));
            }
        }
    }
    report.push_all("ι(M_G) lies in S_G", into);

    let swap = e.rep.swap();
    let mut equi = Vec::new();
    for (y, face) in &images {
        let neg = -*y;
        let flipped = swap.apply_face(face).unwrap_or_default();
        if images.get(&neg) != Some(&flipped) {
            equi.push(format!("ι(-{y}) is not the swap of ι({y})"));
        }
    }
    report.push_all("Z2-equivariant", equi);

    let mut pairs = Vec::new();
    let mut hit: BTreeSet<SignedVertex> = BTreeSet::new();
    for x in e.covectors.cocircuits() {
        match images.get(x).map(Vec::as_slice) {
            Some([v]) if v.coatom == zero_set(x) => {
                hit.insert(*v);
            }
            _ => pairs.push(format!("ι({x}) is not a single vertex on its zero set")),
        }
    }
    let all_vertices: BTreeSet<SignedVertex> = l
        .coatoms()
        .iter()
        .flat_map(|&c| Sign::BOTH.map(|s| SignedVertex::new(c, s)))
        .collect();
    if pairs.is_empty() && hit != all_vertices {
        pairs.push(format!(
            "cocircuits reach {} of {} vertices",
            hit.len(),
            all_vertices.len()
        ));
    }
    report.push_all("cocircuits map onto vertex pairs", pairs);

    let mut homology = Vec::new();
    let mut summary = Vec::new();
    for &g in l.flats() {
        let Ok(m) = e.nonzero_flat(g) else {
            homology.push(format!("{} is not a zero set", ground.format(g)));
            continue;
        };
        let hm = reduced_homology(&order_complex(&covector_poset(m)));
        let hs = reduced_homology(&complex_of(g));
        let dim = l.corank_of(g) as isize - 1;
        if !hm.agrees_with(&hs) || !hs.is_sphere(dim) {
            homology.push(format!("G = {}: Δ(M_G∖0) has {hm}, S_G has {hs}", ground.format(g)));
        }
        if g == l.bottom() {
            summary.push(describe(&hm));
        }
    }
    report.push_all("Δ(M_G∖0) and S_G have equal homology", homology);
    if let Some(s) = summary.first() {
        report.note(format!("Δ(V*∖0): {s}; {} flats compared", l.len()));
    }
    report
}

fn describe(h: &HomologyProfile) -> String {
    let s = h.to_string();
    if s.is_empty() {
        "acyclic".into()
    } else {
        s.trim().replace('\n', ", ")
    }
}

/// Removes element `f` from a set and renumbers the elements after it.
fn drop_element(s: ElementSet, f: usize) -> ElementSet {
    s.iter().filter(|&e| e != f).map(|e| if e > f { e - 1 } else { e }).collect()
}

/// For a non-pivot `f`, checks that `d: X -> X ∖ f` maps `A_v(G)` into
/// `A_v(G ∖ f)` of the deletion, that every fiber `d^{-1}(Y)` has a unique
/// minimal element, and Quillen's fiber condition for `d`.
pub fn deletion_fibers_check(
    e: &EmbeddingData,
    g: Flat,
    v: &SignVector,
    f: usize,
    rule: CoverRule,
) -> Result<ValidationReport> {
    let l = e.rep.lattice();
    let ground = l.ground();
    if f >= ground.len() {
        return Err(Error::UnknownElement(f.to_string()));
    }
    if e.pivots.contains(&f) {
        return Err(Error::BadPivot(format!("{} is a pivot and cannot be deleted", ground.label(f))));
    }
    let deleted = e.covectors.deletion(f)?;
    let lattice = underlying_matroid(&deleted)?;
    let chain = e.rep.flag().chain().iter().map(|&x| drop_element(x, f)).collect();
    let flag = Flag::new(&lattice, chain)?;
    let pivots = e.pivots.iter().map(|&p| if p > f { p - 1 } else { p }).collect();
    let small = EmbeddingData::new(SphereRep::new(&lattice, flag)?, &deleted, pivots)?;
    let g_small = drop_element(g, f);

    let p = covector_poset(e.a_v(g, v, rule)?);
    let q = covector_poset(small.a_v(g_small, v, rule)?);
    let index: BTreeMap<&SignVector, usize> = q.elements().iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut report = ValidationReport::new();
    let mut outside = Vec::new();
    let map: Vec<usize> = p
        .elements()
        .iter()
        .filter_map(|x| {
            let y = x.delete(f);
            let found = index.get(&y).copied();
            if found.is_none() {
                outside.push(format!("{x} ∖ {} = {y}", ground.label(f)));
            }
            found
        })
        .collect();
    let lands = outside.is_empty();
    report.push_all("deletion lands in A_v(G ∖ f)", outside);
    if !lands {
        return Ok(report);
    }
    let mut minima = Vec::new();
    for y in 0..q.len() {
        let fiber: Vec<usize> = (0..p.len()).filter(|&x| map[x] == y).collect();
        let mins = p.induced(&fiber).minimal().len();
        if mins != 1 {
            minima.push(format!("fiber over {} has {mins} minimal elements", q.element(y)));
        }
    }
    report.push_all("fibers have a unique minimal element", minima);
    report.extend("", quillen_fibers_check(&p, &q, &map)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::default_flag;
    use crate::om::config::VectorConfig;

    const U24: &str = r#"{"dimension":2,"columns":{"1":[1,0],"2":[0,1],"3":[1,1],"4":[1,-1]}}"#;

    fn setup(text: &str) -> (GeometricLattice, CovectorSet) {
        let v = VectorConfig::from_json(text).unwrap();
        let cov = CovectorSet::from_vectors(&v).unwrap();
        (underlying_matroid(&cov).unwrap(), cov)
    }

    fn sv(s: &str) -> SignVector {
        s.parse().unwrap()
    }

    #[test]
    fn u24_iota_values() {
        let (l, cov) = setup(U24);
        let flag = default_flag(&l);
        let pivots = default_pivots(&flag);
        assert_eq!(pivots, vec![0, 1]);
        let e = EmbeddingData::new(SphereRep::new(&l, flag).unwrap(), &cov, pivots).unwrap();
        let g = l.ground();
        let show = |y: &str| format_face(g, &e.iota(&sv(y)).unwrap());
        assert_eq!(show("0++-"), "{{1}+}");
        assert_eq!(show("+0++"), "{{2}+}");
        assert_eq!(show("++++"), "{{2}+, {4}+}");
        assert!(matches!(e.iota(&sv("0000")), Err(Error::ZeroCovector)));
        let report = verify_embedding(&e);
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn bad_pivot_is_rejected() {
        let (l, cov) = setup(U24);
        let flag = default_flag(&l);
        assert!(matches!(pivots_check(&l, &flag, &cov, &[1, 0]), Err(Error::BadPivot(_))));
        assert!(pivots_check(&l, &flag, &cov, &[0, 1]).unwrap().all_passed());
        assert!(pivots_check(&l, &flag, &cov, &[0, 3]).unwrap().all_passed());
    }

    #[test]
    fn u24_covers_at_every_flat() {
        let (l, cov) = setup(U24);
        let flag = default_flag(&l);
        let pivots = default_pivots(&flag);
        let e = EmbeddingData::new(SphereRep::new(&l, flag).unwrap(), &cov, pivots).unwrap();
        for &g in l.flats() {
            let covers = e.build_covers(g, CoverRule::Conformal).unwrap();
            let r = covers.carrier_check(SubsetBound::Full).unwrap();
            assert!(r.all_passed(), "G = {}: {r}", l.ground().format(g));
        }
    }

    #[test]
    fn first_pivot_rule_is_not_carried() {
        let (l, cov) = setup(U24);
        let flag = default_flag(&l);
        let pivots = default_pivots(&flag);
        let e = EmbeddingData::new(SphereRep::new(&l, flag).unwrap(), &cov, pivots).unwrap();
        let v = sv("++");
        let a: BTreeSet<SignVector> = e.a_v(l.bottom(), &v, CoverRule::FirstPivot).unwrap().into_iter().collect();
        assert!(a.iter().all(|x| e.pivot_index(x).and_then(|k| x.get(e.pivots()[k])) == Some(Sign::Plus)));
        assert_eq!(format_face(l.ground(), &e.b_v(l.bottom(), &v)), "{{1}+, {2}+, {3}+, {4}+}");
        // the tope (+,+,+,-) starts with + but lies above the cocircuit (0,+,+,-)
        let tope = sv("+++-");
        assert!(e.in_a_v(&tope, l.bottom(), &sv("+-"), CoverRule::FirstPivot));
        let r = e
            .build_covers(l.bottom(), CoverRule::FirstPivot)
            .unwrap()
            .carrier_check(SubsetBound::Full)
            .unwrap();
        assert!(!r.get("carried").unwrap().passed);
    }

    #[test]
    fn deletion_fibers_on_u24() {
        let (l, cov) = setup(U24);
        let flag = default_flag(&l);
        let pivots = default_pivots(&flag);
        let e = EmbeddingData::new(SphereRep::new(&l, flag).unwrap(), &cov, pivots).unwrap();
        for v in SignVector::all_full(2) {
            let r = deletion_fibers_check(&e, l.bottom(), &v, 3, CoverRule::Conformal).unwrap();
            assert!(r.all_passed(), "v = {v}: {r}");
        }
        assert!(deletion_fibers_check(&e, l.bottom(), &sv("++"), 0, CoverRule::Conformal).is_err());
    }
}
