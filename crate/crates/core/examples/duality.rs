//! `[X]⌢−` as an isomorphism, item by item, on the sphere relative to an edge.

use cmdual::algebra::Ring;
use cmdual::complex::Subcomplex;
use cmdual::fixtures;
use cmdual::mv::{verify_duality, Item};

fn main() -> cmdual::Result<()> {
    let x = fixtures::t4();
    let l = Subcomplex::from_labels(&x, &["2", "3"])?;
    let y = l.orient_vc_before(&x);
    for item in Item::ALL {
        let r = verify_duality(&y, &l, item, Ring::Integers)?;
        let groups: Vec<String> = r.degrees.iter().map(|d| format!("{} → {}", d.source.summary(), d.target.summary())).collect();
        println!("{:<5} {} ≅ {}: {}  iso = {}", item.label(), r.source, r.target, groups.join("; "), r.iso);
    }

    let rp = fixtures::rp6();
    let r = verify_duality(&rp, &Subcomplex::whole(&rp), Item::I1ai, Ring::PrimeField(2))?;
    println!("RP² over F_2: ranks {:?}, iso = {}", r.ranks(), r.iso);

    let b = fixtures::bowtie();
    match verify_duality(&b, &Subcomplex::whole(&b), Item::I1ai, Ring::Integers) {
        Err(e) => println!("bowtie: {e}"),
        Ok(_) => unreachable!("the bowtie is not Cohen–Macaulay"),
    }
    Ok(())
}
