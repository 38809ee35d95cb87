//! Local homology stalks, the link comparison and the Cohen–Macaulay test.

use cmdual::algebra::Ring;
use cmdual::complex::Subcomplex;
use cmdual::fixtures;
use cmdual::local::{cm_check, link_crosscheck, local_homology};
use cmdual::report::Group;

fn main() -> cmdual::Result<()> {
    let ring = Ring::Integers;
    for (name, x) in [("triangle", fixtures::triangle()), ("bowtie", fixtures::bowtie())] {
        println!("{name}");
        for s in x.all_simplices() {
            let h: Vec<String> = (0..=x.dim() as i32)
                .map(|k| local_homology(&x, s, k, ring).map(|g| Group::new(&g, &[]).summary()))
                .collect::<cmdual::Result<_>>()?;
            println!("  {:<8} h_* = [{}]  link agrees: {}", x.display(s), h.join(", "), link_crosscheck(&x, s, ring)?);
        }
        let cm = cm_check(&x, &Subcomplex::whole(&x), x.dim() as i32, ring)?;
        println!("  Cohen–Macaulay: {} ({} witnesses)", cm.cm, cm.witnesses.len());
    }
    Ok(())
}
