//! Stars, links and reorientation on the boundary of the tetrahedron.

use cmdual::complex::{parse_complex, serialize_complex, Subcomplex};
use cmdual::fixtures;

fn main() -> cmdual::Result<()> {
    let x = fixtures::t4();
    println!("f-vector {:?}, pure: {}", x.f_vector(), x.is_pure());

    let e = x.simplex_by_labels(&["0", "1"])?;
    let show = |set: &std::collections::BTreeSet<_>| set.iter().map(|s| x.display(s)).collect::<Vec<_>>().join(" ");
    println!("st [0,1]  = {}", show(&x.star(&e)?));
    println!("lk [0,1]  = {}", show(&x.link(&e)?));

    let l = Subcomplex::from_labels(&x, &["0", "1"])?;
    let y = l.orient_vc_before(&x);
    println!("order with L^vc first: {:?}", y.order_labels());
    println!("[0,1] is now written {}", y.display(&y.orient(&e)));

    // files round trip
    let back = parse_complex(&serialize_complex(&y))?;
    assert_eq!(back.order_labels(), y.order_labels());
    Ok(())
}
