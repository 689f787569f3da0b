//! Covectors of a real configuration, the map ι into S_0 and the checks that
//! it is an order embedding compatible with every flat.

use hsrep::lattice::default_flag;
use hsrep::om::{default_pivots, verify_embedding, CovectorSet, CoverRule, EmbeddingData, VectorConfig};
use hsrep::sphere::{format_face, SphereRep};
use hsrep::topo::SubsetBound;

fn main() -> hsrep::error::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/u24_vec.json");
    let v = VectorConfig::from_json(&std::fs::read_to_string(path)?)?;
    let l = v.lattice()?;
    let cov = CovectorSet::from_vectors(&v)?;
    let flag = default_flag(&l);
    let pivots = default_pivots(&flag);
    let data = EmbeddingData::new(SphereRep::new(&l, flag)?, &cov, pivots)?;
    for y in cov.nonzero() {
        println!("ι({y}) = {}", format_face(l.ground(), &data.iota(y)?));
    }
    print!("{}", verify_embedding(&data));
    let covers = data.build_covers(l.bottom(), CoverRule::Conformal)?;
    print!("{}", covers.carrier_check(SubsetBound::Full)?);
    Ok(())
}
