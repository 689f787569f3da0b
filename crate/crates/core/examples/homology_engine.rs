//! Integral homology via Smith normal form: spheres from cross-polytope and
//! simplex boundaries, and the torsion of the projective plane.

use hsrep::sphere::{complex_from_json, ComplexJson};
use hsrep::topo::{reduced_homology, SimplicialComplex};

fn main() -> hsrep::error::Result<()> {
    for d in 1..=5 {
        let cross = SimplicialComplex::cross_polytope_boundary(d);
        let simplex = SimplicialComplex::simplex_boundary(d + 1);
        println!("d = {d}: cross-polytope {} | simplex {}", reduced_homology(&cross), reduced_homology(&simplex));
    }
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/rp2.json");
    let raw: ComplexJson<serde_json::Value> = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    let rp2 = complex_from_json(&raw)?;
    println!("projective plane: {}", reduced_homology(&rp2));
    Ok(())
}
