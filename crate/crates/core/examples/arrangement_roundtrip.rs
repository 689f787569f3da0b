//! Builds the arrangement of the Fano plane over GF(2), certifies its axioms
//! and recovers the lattice of flats from intersections alone.

use hsrep::lattice::{default_flag, load_matroid, MatroidSpec};
use hsrep::sphere::{arrangement_flats, atom_roundtrip, verify_arrangement, SphereRep};
use hsrep::topo::SubsetBound;

fn main() -> hsrep::error::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/fano_gf2.json");
    let l = load_matroid(&MatroidSpec::from_json(&std::fs::read_to_string(path)?)?)?;
    let rep = SphereRep::new(&l, default_flag(&l))?;
    let arr = rep.arrangement();
    print!("{}", verify_arrangement(&arr, SubsetBound::Auto));
    let flats = arrangement_flats(&arr)?;
    println!("recovered {} flats from {} members", flats.len(), arr.members.len());
    match atom_roundtrip(&l, &flats) {
        Ok(()) => println!("lattice recovered exactly"),
        Err(e) => println!("mismatch: {e}"),
    }
    Ok(())
}
