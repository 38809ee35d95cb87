//! The cap product with coefficients and its Leibniz rule, checked on every pair of generators.

use cmdual::fixtures;
use cmdual::identities::{homotopy_checks, leibniz_checks};

fn main() {
    for (name, x) in [("c3", fixtures::c3()), ("t4", fixtures::t4()), ("rp6", fixtures::rp6())] {
        for c in leibniz_checks(&x).into_iter().chain(homotopy_checks(&x)) {
            println!("{name:<4} {:<40} {:>6} cases  {}", c.name, c.cases, if c.holds() { "ok" } else { "FAIL" });
        }
    }
}
