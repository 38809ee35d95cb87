//! Sections of `h_n` and their restriction system along a filtration of the circle.

use cmdual::algebra::Ring;
use cmdual::complex::{parse_filtration, Subcomplex};
use cmdual::fixtures;
use cmdual::sections::{compactly_determined_dual, lf_h0_check, semistability_check, RestrictionSystem};

fn main() -> cmdual::Result<()> {
    let x = fixtures::c3();
    let h0 = lf_h0_check(&x, &Subcomplex::whole(&x), Ring::Integers)?;
    println!("Γ rank {}, H_0 = {}, iso = {}", h0.sections_rank, h0.h0.summary(), h0.iso);

    let stages = parse_filtration("stage: 0\nstage: 0 1\nstage: 0 1 2", &x)?;
    let c = compactly_determined_dual(&x, &stages, Ring::Integers)?;
    println!("colimit rank {}, semistable {}, iso = {}", c.colimit_rank, c.semistability.semistable, c.iso);

    for ring in [Ring::Integers, Ring::Rationals] {
        let r = semistability_check(&RestrictionSystem::multiplication(ring, 2, 5));
        println!("×2 over {ring}: semistable = {}", r.semistable);
    }
    Ok(())
}
