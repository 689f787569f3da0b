//! Checks S_G ∩ S_H = S_{G ∨ H} for every pair of flats of U(3,4) under
//! every complete flag.

use hsrep::lattice::{load_matroid, Flag, MatroidSpec};
use hsrep::sphere::SphereRep;

fn main() -> hsrep::error::Result<()> {
    let l = load_matroid(&MatroidSpec::Uniform { r: 3, n: 4 })?;
    let mut flags = 0;
    let mut pairs = 0;
    for &a in l.atoms() {
        for b in l.covers_of(a) {
            let rep = SphereRep::new(&l, Flag::new(&l, vec![l.bottom(), a, b, l.top()])?)?;
            for &g in l.flats() {
                for &h in l.flats() {
                    assert!(rep.intersection_law_check(g, h));
                    pairs += 1;
                }
            }
            flags += 1;
        }
    }
    println!("intersection law holds for {pairs} flat pairs across {flags} flags");
    Ok(())
}
