//! Smith normal form and homology of the projective plane over three rings.

use cmdual::algebra::{smith_normal_form, Matrix, Ring};
use cmdual::complex::Region;
use cmdual::fixtures;
use cmdual::report::Group;
use cmdual::simplicial::chains;

fn main() -> cmdual::Result<()> {
    let m = Matrix::from_ints(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
    let s = smith_normal_form(&m, Ring::Integers);
    let d: Vec<String> = s.diagonal.iter().map(|v| v.to_string()).collect();
    println!("invariant factors: {}", d.join(" "));

    let x = fixtures::rp6();
    for ring in [Ring::Integers, Ring::Rationals, Ring::PrimeField(2)] {
        let c = chains(&x, &Region::Whole, ring)?;
        let hs: Vec<String> = (0..=2).map(|k| Group::new(&c.complex.homology(k), &[]).summary()).collect();
        println!("{ring}: H_0, H_1, H_2 = {}", hs.join(", "));
    }
    Ok(())
}
