//! The three matroid input formats and the lattice checks run on each.

use hsrep::lattice::{load_matroid, MatroidSpec};

fn main() -> hsrep::error::Result<()> {
    let inputs = [
        r#"{"format":"uniform","r":2,"n":4}"#,
        r#"{"format":"linear","field":"GF","p":2,"columns":[[1,0,0],[0,1,0],[0,0,1],[1,1,0],[1,0,1],[0,1,1],[1,1,1]]}"#,
        r#"{"format":"linear","field":"Q","columns":[["1","0"],["0","1"],["1/2","3"]]}"#,
        r#"{"format":"flats","ground_set":["a","b","c"],"flats":[[],["a"],["b"],["c"],["a","b","c"]]}"#,
    ];
    for text in inputs {
        let l = load_matroid(&MatroidSpec::from_json(text)?)?;
        println!("{text}\n  rank {}, {} flats, coatoms {:?}", l.rank(), l.len(), l.coatoms().iter().map(|&c| l.ground().format(c)).collect::<Vec<_>>());
        print!("{}", l.verify());
    }
    let broken = r#"{"format":"flats","ground_set":[1,2,3],"flats":[[],[1],[3],[1,2],[2,3],[1,2,3]]}"#;
    match load_matroid(&MatroidSpec::from_json(broken)?) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
