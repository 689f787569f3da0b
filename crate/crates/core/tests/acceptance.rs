//! Acceptance gate: one PASS/FAIL line per criterion, checked against the
//! oracles in `common`. Runs without the test harness so the lines always
//! print; exits non-zero if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use common::*;
use hsrep::elements::Flat;
use hsrep::lattice::{default_flag, Flag, GeometricLattice};
use hsrep::maps::{poset_map_search, retraction_map, select_cross_coatoms, verify_retraction, DEFAULT_MAX_ASSIGNMENTS};
use hsrep::om::{default_pivots, pivots_check, verify_embedding, CovectorSet, CoverRule, EmbeddingData};
use hsrep::sign::Sign;
use hsrep::sphere::{arrangement_flats, complex_from_json, ComplexJson, SignedVertex, SphereRep};
use hsrep::topo::{cross_polytope_nerve_iso, reduced_homology, z2_free_check, SimplicialComplex, SimplicialMap, SubsetBound};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

const THEOREM_FIXTURES: [&str; 5] = ["u24.json", "u34.json", "bool3.json", "fano_gf2.json", "n134.json"];

fn name(l: &GeometricLattice, g: Flat) -> String {
    l.ground().format(g)
}

fn four_tetrahedra() -> Outcome {
    let l = lattice("u24.json");
    let flag = Flag::new(&l, vec![set(&l, &[]), set(&l, &["1"]), l.top()]).map_err(|e| e.to_string())?;
    let rep = SphereRep::new(&l, flag).map_err(|e| e.to_string())?;
    let s0 = rep.build_s(l.bottom()).complex;
    let facets: BTreeSet<Face> = s0
        .facets()
        .iter()
        .map(|f| f.iter().map(|v| (v.coatom, v.sign == Sign::Plus)).collect())
        .collect();
    // {1} alone in its part; {2},{3},{4} share one sign
    let mut expected = BTreeSet::new();
    for a in [true, false] {
        for b in [true, false] {
            let mut f: Face = ["2", "3", "4"].iter().map(|x| (set(&l, &[x]), b)).collect();
            f.insert((set(&l, &["1"]), a));
            expected.insert(f);
        }
    }
    ensure(facets == expected, || format!("facets {facets:?}"))?;
    for x in ["1", "2", "3", "4"] {
        let g = set(&l, &[x]);
        let got = library_faces(&rep.build_s(g).complex);
        let want: BTreeSet<Face> = [BTreeSet::from([(g, true)]), BTreeSet::from([(g, false)])].into();
        ensure(got == want, || format!("S_{{{x}}} = {got:?}"))?;
    }
    Ok("4 tetrahedra; S_{x} = {x_+, x_-} for every atom".into())
}

fn sphere_types() -> Outcome {
    let mut flats = 0;
    for fx in THEOREM_FIXTURES {
        let l = lattice(fx);
        let rep = SphereRep::new(&l, default_flag(&l)).unwrap();
        for &g in l.flats() {
            let k = rep.build_s(g).complex;
            let corank = l.corank_of(g);
            let nerve = cross_polytope_nerve_iso(&k, corank);
            ensure(nerve.iso, || format!("{fx} S_{}: nerve {:?}", name(&l, g), nerve.witness))?;
            ensure(rep.canonical_nerve_check(g).iso, || format!("{fx} S_{}: canonical nerve", name(&l, g)))?;
            let h = reduced_homology(&k);
            ensure(h.is_sphere(corank as isize - 1), || format!("{fx} S_{}: {h}", name(&l, g)))?;
            let oracle = trim(betti_mod_p(&oracle_facets(&l, rep.flag(), g)));
            ensure(oracle == sphere_betti(corank as isize - 1), || {
                format!("{fx} S_{}: oracle betti {oracle:?}", name(&l, g))
            })?;
            flats += 1;
        }
    }
    Ok(format!("{flats} flats over 5 fixtures; nerve and homology agree with S^(corank-1)"))
}

fn join(l: &GeometricLattice, a: Flat, b: Flat) -> Flat {
    closure(l, a.union(b))
}

fn intersection_law() -> Outcome {
    let mut pairs = 0;
    for fx in THEOREM_FIXTURES {
        let l = lattice(fx);
        let flag = default_flag(&l);
        let rep = SphereRep::new(&l, flag.clone()).unwrap();
        let faces: BTreeMap<Flat, BTreeSet<Face>> = l
            .flats()
            .iter()
            .map(|&g| (g, oracle_faces(&l, &flag, g)))
            .collect();
        for &g in l.flats() {
            ensure(library_faces(&rep.build_s(g).complex) == faces[&g], || {
                format!("{fx}: library S_{} differs from the definition", name(&l, g))
            })?;
        }
        for &g in l.flats() {
            for &h in l.flats() {
                let lhs: BTreeSet<Face> = faces[&g].intersection(&faces[&h]).cloned().collect();
                ensure(lhs == faces[&join(&l, g, h)], || {
                    format!("{fx}: S_{} ∩ S_{}", name(&l, g), name(&l, h))
                })?;
                ensure(rep.intersection_law_check(g, h), || {
                    format!("{fx}: library law at {} {}", name(&l, g), name(&l, h))
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} ordered flat pairs"))
}

fn roundtrip() -> Outcome {
    for fx in THEOREM_FIXTURES {
        let l = lattice(fx);
        let flag = default_flag(&l);
        let rep = SphereRep::new(&l, flag.clone()).unwrap();
        let recovered = arrangement_flats(&rep.arrangement()).map_err(|e| format!("{fx}: {e}"))?;
        // oracle: subsets of atoms closed under "adding a member shrinks the intersection"
        let atoms: Vec<Flat> = l.flats().iter().copied().filter(|&f| l.rank_of(f) == 1).collect();
        let members: Vec<BTreeSet<Face>> = atoms.iter().map(|&a| oracle_faces(&l, &flag, a)).collect();
        let ambient = oracle_faces(&l, &flag, l.bottom());
        let m = atoms.len();
        let inter = |mask: usize| {
            (0..m)
                .filter(|i| mask >> i & 1 == 1)
                .fold(ambient.clone(), |acc, i| acc.intersection(&members[i]).cloned().collect())
        };
        let all: Vec<BTreeSet<Face>> = (0..1usize << m).map(inter).collect();
        let oracle: BTreeSet<u64> = (0..1usize << m)
            .filter(|&mask| (0..m).filter(|e| mask >> e & 1 == 0).all(|e| all[mask | 1 << e] != all[mask]))
            .map(|mask| mask as u64)
            .collect();
        let expected: BTreeSet<u64> = l
            .flats()
            .iter()
            .map(|&x| {
                atoms
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.is_subset(x))
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        ensure(oracle == expected, || format!("{fx}: oracle arrangement flats differ"))?;
        let got: BTreeSet<u64> = recovered.flats().iter().map(|f| f.bits()).collect();
        ensure(got == expected, || format!("{fx}: library arrangement flats differ"))?;
    }
    Ok("lattice recovered from the arrangement for all 5 fixtures".into())
}

fn z2_freeness() -> Outcome {
    let mut count = 0;
    for fx in THEOREM_FIXTURES.iter().chain(["nonfano_q.json"].iter()) {
        let l = lattice(fx);
        for flag in all_flags(&l) {
            let rep = SphereRep::new(&l, flag.clone()).unwrap();
            let s0 = rep.build_s(l.bottom()).complex;
            ensure(matches!(z2_free_check(&s0, &rep.swap()), Ok(true)), || {
                format!("{fx} flag {}: not free", flag.describe(&l))
            })?;
            // oracle: a face fixed by the swap would hold both C_+ and C_-
            let pair = oracle_faces(&l, &flag, l.bottom())
                .into_iter()
                .any(|f| f.iter().any(|&(c, s)| f.contains(&(c, !s))));
            ensure(!pair, || format!("{fx}: oracle finds an antipodal pair"))?;
            count += 1;
        }
    }
    let a = |s| SignedVertex::new(hsrep::elements::ElementSet::singleton(0), s);
    let edge = SimplicialComplex::simplex([a(Sign::Plus), a(Sign::Minus)]);
    let swap = SimplicialMap::from_fn(edge.vertices(), |v| v.flipped());
    ensure(matches!(z2_free_check(&edge, &swap), Ok(false)), || "fixed edge reported free".into())?;
    Ok(format!("{count} fixture/flag pairs free; fixed edge rejected"))
}

fn embedding() -> Outcome {
    let mut detail = Vec::new();
    for fx in ["u24_vec.json", "u34_vec.json"] {
        let v = vectors(fx);
        let l = v.lattice().unwrap();
        let cov = CovectorSet::from_vectors(&v).unwrap();
        let grid = grid_covectors(&v, 10);
        let ours: BTreeSet<_> = cov.covectors().iter().cloned().collect();
        ensure(grid == ours, || format!("{fx}: {} grid covectors vs {}", grid.len(), ours.len()))?;
        let flag = default_flag(&l);
        let rep = SphereRep::new(&l, flag.clone()).unwrap();
        let data = EmbeddingData::new(rep, &cov, default_pivots(&flag)).map_err(|e| e.to_string())?;
        let report = verify_embedding(&data);
        ensure(report.all_passed(), || format!("{fx}:\n{report}"))?;
        // oracle: order complex of the non-zero covectors against S_0
        let nonzero: Vec<_> = cov.nonzero().cloned().collect();
        let delta = order_complex_facets(&nonzero, |x, y| x != y && conforms(x, y));
        let b = trim(betti_mod_p(&delta));
        ensure(b == sphere_betti(l.rank() as isize - 1), || format!("{fx}: Δ(V*∖0) betti {b:?}"))?;
        for &g in l.flats() {
            if g == l.top() {
                continue;
            }
            let covers = data.build_covers(g, CoverRule::Conformal).map_err(|e| e.to_string())?;
            let r = covers.carrier_check(SubsetBound::Full).map_err(|e| e.to_string())?;
            ensure(r.all_passed(), || format!("{fx} G = {}:\n{r}", name(&l, g)))?;
        }
        detail.push(format!("{fx}: {} covectors", cov.len()));
    }
    Ok(format!("{}; carrier check with every subfamily", detail.join(", ")))
}

fn pivots() -> Outcome {
    let mut count = 0;
    for fx in VECTOR_FIXTURES {
        let v = vectors(fx);
        let l = v.lattice().unwrap();
        let cov = CovectorSet::from_vectors(&v).unwrap();
        for flag in all_flags(&l) {
            let r = pivots_check(&l, &flag, &cov, &default_pivots(&flag)).map_err(|e| e.to_string())?;
            ensure(r.all_passed(), || format!("{fx} {}:\n{r}", flag.describe(&l)))?;
            count += 1;
        }
    }
    Ok(format!("{count} orientation/flag pairs with lex pivots"))
}

/// Whether some choice of `C_i ∈ A_i(F)` has distinct `G`-parts.
fn selection_exists(l: &GeometricLattice, f: &Flag, g: &Flag) -> bool {
    let coat = coatoms(l);
    let mut by_part: Vec<Vec<Flat>> = vec![Vec::new(); l.rank()];
    for &c in &coat {
        by_part[part(f, c)].push(c);
    }
    fn go(g: &Flag, parts: &[Vec<Flat>], used: &mut Vec<usize>) -> bool {
        let i = used.len();
        if i == parts.len() {
            return true;
        }
        for &c in &parts[i] {
            let p = part(g, c);
            if !used.contains(&p) {
                used.push(p);
                if go(g, parts, used) {
                    return true;
                }
                used.pop();
            }
        }
        false
    }
    go(g, &by_part, &mut Vec::new())
}

fn retractions() -> Outcome {
    let mut count = 0;
    for (fx, limit) in [("u34.json", usize::MAX), ("bool3.json", usize::MAX), ("fano_gf2.json", 4)] {
        let l = lattice(fx);
        let flags = all_flags(&l);
        let flags = &flags[..flags.len().min(limit)];
        for f in flags {
            for g in flags {
                let s = select_cross_coatoms(&l, f, g).map_err(|e| e.to_string())?;
                let f_parts: BTreeSet<usize> = s.coatoms.iter().map(|&c| part(f, c)).collect();
                let g_parts: BTreeSet<usize> = s.coatoms.iter().map(|&c| part(g, c)).collect();
                let ok = f_parts.len() == l.rank()
                    && g_parts.len() == l.rank()
                    && s.coatoms.iter().enumerate().all(|(i, &c)| part(f, c) == i);
                ensure(ok && selection_exists(&l, f, g), || {
                    format!("{fx}: selection for {} / {}", f.describe(&l), g.describe(&l))
                })?;
                let d = retraction_map(&l, f, g).map_err(|e| e.to_string())?;
                let r = verify_retraction(&d);
                ensure(r.all_passed(), || format!("{fx} {} / {}:\n{r}", f.describe(&l), g.describe(&l)))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} ordered flag pairs (all of U34 and B3, 16 of Fano)"))
}

fn obstruction() -> Outcome {
    let m = lattice("u34.json");
    let n = lattice("n134.json");
    let flag = Flag::new(
        &m,
        vec![set(&m, &[]), set(&m, &["1"]), set(&m, &["1", "2"]), m.top()],
    )
    .unwrap();
    let r = poset_map_search(&m, &n, &flag, DEFAULT_MAX_ASSIGNMENTS).map_err(|e| e.to_string())?;
    ensure(!r.found, || "a map was found".into())?;
    let o = r.obstruction.as_ref().ok_or("no obstruction")?;
    ensure(o.face == ["{1,4}-", "{3,4}+"], || format!("face {:?}", o.face))?;
    // oracle: both vertices are forced onto {1,3,4}, and S_0(F, N) has no
    // face holding {1,3,4}_+ together with {1,3,4}_-
    let c134 = set(&n, &["1", "3", "4"]);
    for e in [["1", "4"], ["3", "4"]] {
        let cl = closure(&n, set(&n, &e));
        let targets: Vec<Flat> = coatoms(&n).into_iter().filter(|&h| cl.is_subset(h)).collect();
        ensure(targets == [c134], || format!("{e:?} has targets {targets:?}"))?;
    }
    let nflag = Flag::new(&n, flag.chain().to_vec()).unwrap();
    let both = oracle_faces(&n, &nflag, n.bottom())
        .into_iter()
        .any(|f| f.contains(&(c134, true)) && f.contains(&(c134, false)));
    ensure(!both, || "target has a face with both signs of {1,3,4}".into())?;
    Ok(format!("NONE; edge {{{}}}; {} assignments, cap not reached", o.face.join(", "), r.assignments))
}

fn homology_engine() -> Outcome {
    for d in 1..=5 {
        let cross = SimplicialComplex::cross_polytope_boundary(d);
        let h = reduced_homology(&cross);
        ensure(h.is_sphere(d as isize - 1), || format!("cross-polytope {d}: {h}"))?;
        let facets: Vec<BTreeSet<usize>> = cross.facets().iter().map(|f| f.iter().copied().collect()).collect();
        ensure(trim(betti_mod_p(&facets)) == sphere_betti(d as isize - 1), || format!("oracle cross {d}"))?;
        let simplex = SimplicialComplex::simplex_boundary(d + 1);
        let h = reduced_homology(&simplex);
        ensure(h.is_sphere(d as isize - 1), || format!("simplex {d}: {h}"))?;
    }
    let raw: ComplexJson<serde_json::Value> = serde_json::from_str(&fixture_text("rp2.json")).unwrap();
    let rp2 = complex_from_json(&raw).unwrap();
    let h = reduced_homology(&rp2);
    ensure(h.torsion(1) == [2] && h.betti(1) == 0 && h.betti(2) == 0 && h.torsion(2).is_empty(), || {
        format!("RP2: {h}")
    })?;
    let facets: Vec<BTreeSet<usize>> = rp2.facets().iter().map(|f| f.iter().copied().collect()).collect();
    ensure(trim(betti_mod_p(&facets)).is_empty(), || "RP2 is not Q-acyclic".into())?;
    Ok("spheres for d = 1..5; RP2 has H_1 = Z/2".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 U(2,4) tetrahedra", four_tetrahedra),
        ("2 sphere homotopy types", sphere_types),
        ("3 intersection law", intersection_law),
        ("4 lattice roundtrip", roundtrip),
        ("5 Z2 freeness", z2_freeness),
        ("6 oriented embedding", embedding),
        ("7 pivots", pivots),
        ("8 change of flag", retractions),
        ("9 weak-map obstruction", obstruction),
        ("10 homology engine", homology_engine),
    ];
    let mut failed = 0;
    for (label, f) in criteria {
        let start = Instant::now();
        let result = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(msg) => println!("PASS criterion {label} ({secs:.2}s): {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {label} ({secs:.2}s): {msg}");
            }
        }
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
