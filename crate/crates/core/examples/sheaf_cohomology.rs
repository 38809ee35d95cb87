//! A user-supplied sheaf on the triangle boundary: a Möbius-type twist along one edge.

use cmdual::algebra::Ring;
use cmdual::complex::Region;
use cmdual::fixtures;
use cmdual::report::Group;
use cmdual::sheaf::{parse_sheaf, sheaf_cochain_complex, CombinatorialSheaf, Support};

const TWISTED: &str = "
stalk: 0 rank 1
stalk: 1 rank 1
stalk: 2 rank 1
stalk: 0 1 rank 1
stalk: 1 2 rank 1
stalk: 0 2 rank 1
map: 0 < 0 1 matrix [[1]]
map: 1 < 0 1 matrix [[1]]
map: 1 < 1 2 matrix [[1]]
map: 2 < 1 2 matrix [[1]]
map: 0 < 0 2 matrix [[1]]
map: 2 < 0 2 matrix [[-1]]
";

fn main() -> cmdual::Result<()> {
    let x = fixtures::c3();
    for ring in [Ring::Integers, Ring::PrimeField(2)] {
        let constant = CombinatorialSheaf::constant(&x, ring);
        let twisted = parse_sheaf(TWISTED, &x, ring)?;
        for (name, f) in [("constant", &constant), ("twisted", &twisted)] {
            let c = sheaf_cochain_complex(&x, f, &Region::Whole, Support::Plain)?;
            let h0 = Group::new(&c.complex.homology(0), &[]).summary();
            let h1 = Group::new(&c.complex.homology(-1), &[]).summary();
            println!("{ring} {name:>8}: H^0 = {h0}, H^1 = {h1}");
        }
    }
    Ok(())
}
