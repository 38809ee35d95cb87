use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring: {0}")]
    Ring(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("differentials do not square to zero at degree {0}")]
    NotAComplex(i32),
    #[error("map does not commute with the differentials at degree {0}")]
    NotAChainMap(i32),
    #[error("face index {index} out of range for a simplex of dimension {dim}")]
    FaceIndex { index: usize, dim: isize },
    #[error("simplex {0} is not in the complex")]
    NotInComplex(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("sheaf data is not functorial at {0}")]
    NotFunctorial(String),
    #[error("inadmissible morphism entry at {0}")]
    Inadmissible(String),
    #[error("degree mismatch: cochain degree {l} exceeds chain degree {k}")]
    DegreeMismatch { k: usize, l: usize },
    #[error("orientation: {0}")]
    Orientation(String),
    #[error("complex is not pure of dimension {0}")]
    NotPure(isize),
    #[error("hypothesis fails: {0}")]
    Hypothesis(String),
    #[error("stalk at {0} has torsion")]
    TorsionStalk(String),
    #[error("not simplicial: {0}")]
    NotSimplicial(String),
    #[error("dimension collapses on {0}")]
    DimensionCollapse(String),
    #[error("not star-local: {0}")]
    NotStarLocal(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
