//! Every chain-level identity of the double complex, generator by generator.

use std::time::Instant;

use cmdual::algebra::Ring;
use cmdual::complex::Subcomplex;
use cmdual::fixtures;
use cmdual::identities::sweep;

fn main() -> cmdual::Result<()> {
    let x = fixtures::t4();
    let l = Subcomplex::from_labels(&x, &["1", "2", "3"])?;
    let start = Instant::now();
    let r = sweep(&l.orient_vc_before(&x), &l, Ring::Integers)?;
    for c in &r.checks {
        println!("{:<44} {:>6} {}", c.name, c.cases, if c.holds() { "ok" } else { "FAIL" });
    }
    println!("all hold: {} in {:.2?}", r.holds(), start.elapsed());
    Ok(())
}
