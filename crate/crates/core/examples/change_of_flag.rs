//! Two flags of U(3,4): coatoms in distinct parts of both partitions span a
//! cross-polytope onto which both representations retract.

use hsrep::lattice::{load_matroid, Flag, MatroidSpec};
use hsrep::maps::{describe_cross_polytope, describe_selection, retraction_map, verify_retraction};

fn main() -> hsrep::error::Result<()> {
    let l = load_matroid(&MatroidSpec::Uniform { r: 3, n: 4 })?;
    let g = l.ground();
    let f = Flag::new(&l, vec![l.bottom(), g.subset(&["1"])?, g.subset(&["1", "2"])?, l.top()])?;
    let h = Flag::new(&l, vec![l.bottom(), g.subset(&["3"])?, g.subset(&["3", "4"])?, l.top()])?;
    let d = retraction_map(&l, &f, &h)?;
    println!("selection: {}", describe_selection(&l, &d.selection));
    println!("P = {}", describe_cross_polytope(&l, &d));
    print!("{}", verify_retraction(&d));
    Ok(())
}
