pub mod algebra;
pub mod cap;
pub mod chain;
pub mod cli;
pub mod complex;
mod error;
pub mod fixtures;
pub mod functor;
pub mod identities;
pub mod local;
pub mod mv;
pub mod report;
pub mod sections;
pub mod sheaf;
pub mod simplicial;

pub use error::{Error, Result};
