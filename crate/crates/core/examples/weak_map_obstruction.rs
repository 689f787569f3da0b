//! U(3,4) weakly maps to the matroid where 1, 3, 4 are collinear, yet no
//! sign-preserving simplicial map between their representations exists.

use hsrep::lattice::{load_matroid, Flag, MatroidSpec};
use hsrep::maps::{is_weak_map_matroid, poset_map_search, DEFAULT_MAX_ASSIGNMENTS};

fn main() -> hsrep::error::Result<()> {
    let m = load_matroid(&MatroidSpec::Uniform { r: 3, n: 4 })?;
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/n134.json");
    let n = load_matroid(&MatroidSpec::from_json(&std::fs::read_to_string(path)?)?)?;
    println!("M ⇝ N: {}", is_weak_map_matroid(&m, &n)?.weak_map);
    for w in is_weak_map_matroid(&n, &m)?.rank_witnesses {
        println!("N ⇝ M fails at {:?}: ranks {} and {}", w.subset, w.rank_m, w.rank_n);
    }
    let g = m.ground();
    let flag = Flag::new(&m, vec![m.bottom(), g.subset(&["1"])?, g.subset(&["1", "2"])?, m.top()])?;
    let r = poset_map_search(&m, &n, &flag, DEFAULT_MAX_ASSIGNMENTS)?;
    println!("map found: {}", r.found);
    if let Some(o) = r.obstruction {
        println!("obstruction {:?}: {}", o.face, o.reason);
    }
    Ok(())
}
