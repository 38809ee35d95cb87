//! The double cover of the triangle boundary by the hexagon.

use cmdual::algebra::Ring;
use cmdual::complex::Subcomplex;
use cmdual::fixtures;
use cmdual::functor::{fundamental_class_preserved, verify_naturality, SimplicialMap, StarLocalMap};
use cmdual::mv::Item;

fn main() -> cmdual::Result<()> {
    let (hex, c3) = (fixtures::hex(), fixtures::c3());
    let map = SimplicialMap::parse(&hex, &c3, fixtures::HEX_TO_C3)?;
    println!("orientation preserving: {}", map.is_orientation_preserving());
    let f = StarLocalMap::new(map)?;
    println!("star-local, {} stars lifted", f.certificate().stars());
    println!("f^!([C3]) = [HEX]: {}", fundamental_class_preserved(&f));
    for item in Item::ALL {
        let r = verify_naturality(&f, &Subcomplex::whole(&c3), item, Ring::Integers)?;
        println!("{:<5} square commutes: {}", item.label(), r.commutes);
    }
    Ok(())
}
