//! The small complexes used throughout the tests and examples.

use crate::complex::{parse_complex, SimplicialComplex};

pub const C3: &str = include_str!("../fixtures/c3.cplx");
pub const TRIANGLE: &str = include_str!("../fixtures/triangle.cplx");
pub const T4: &str = include_str!("../fixtures/t4.cplx");
pub const BOWTIE: &str = include_str!("../fixtures/bowtie.cplx");
pub const RP6: &str = include_str!("../fixtures/rp6.cplx");
pub const HEX: &str = include_str!("../fixtures/hex.cplx");
pub const HEX_TO_C3: &str = include_str!("../fixtures/hex_to_c3.map");

fn load(text: &str) -> SimplicialComplex {
    parse_complex(text).expect("bundled fixture parses")
}

/// Boundary of a triangle.
pub fn c3() -> SimplicialComplex {
    load(C3)
}

/// The full triangle.
pub fn triangle() -> SimplicialComplex {
    load(TRIANGLE)
}

/// Boundary of a tetrahedron.
pub fn t4() -> SimplicialComplex {
    load(T4)
}

/// Two triangles sharing a vertex; not locally Cohen–Macaulay.
pub fn bowtie() -> SimplicialComplex {
    load(BOWTIE)
}

/// Minimal triangulation of the real projective plane.
pub fn rp6() -> SimplicialComplex {
    load(RP6)
}

/// A 6-cycle, double covering [`c3`].
pub fn hex() -> SimplicialComplex {
    load(HEX)
}

pub fn point() -> SimplicialComplex {
    load("simplex: 0")
}

pub fn edge() -> SimplicialComplex {
    load("simplex: 0 1")
}

pub fn two_edges() -> SimplicialComplex {
    load("simplex: 0 1\nsimplex: 2 3")
}

/// Every named fixture.
pub fn all() -> Vec<(&'static str, SimplicialComplex)> {
    vec![
        ("c3", c3()),
        ("triangle", triangle()),
        ("t4", t4()),
        ("bowtie", bowtie()),
        ("rp6", rp6()),
        ("hex", hex()),
    ]
}
