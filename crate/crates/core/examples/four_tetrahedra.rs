//! The representation of U(2,4) for the flag {} < {1} < E: four tetrahedra
//! glued into a 2-sphere, with each atom represented by an antipodal pair.

use hsrep::lattice::{load_matroid, Flag, MatroidSpec};
use hsrep::sphere::{format_face, SphereRep};
use hsrep::topo::reduced_homology;

fn main() -> hsrep::error::Result<()> {
    let l = load_matroid(&MatroidSpec::Uniform { r: 2, n: 4 })?;
    let g = l.ground();
    let flag = Flag::new(&l, vec![l.bottom(), g.subset(&["1"])?, l.top()])?;
    let rep = SphereRep::new(&l, flag)?;
    let s0 = rep.build_s(l.bottom());
    println!("S_0 has {} maximal faces:", s0.complex.facets().len());
    for facet in s0.complex.facets() {
        println!("  {}", format_face(g, facet));
    }
    println!("homology: {}", reduced_homology(&s0.complex));
    for &atom in l.atoms() {
        let s = rep.build_s(atom);
        println!("S_{} = {}", g.format(atom), format_face(g, &s.complex.vertices()));
    }
    Ok(())
}
