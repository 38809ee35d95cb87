//! Exact linear algebra over ℤ, ℚ and 𝔽_p.

mod homology;
mod matrix;
mod ring;
mod smith;

pub use homology::{ChainComplex, ChainMap, HomologyPresentation, InducedMap};
pub use matrix::Matrix;
pub use ring::{int, Ring, Scalar};
pub use smith::{is_invertible, smith_normal_form, Smith};
