pub mod cli;
pub mod configcheck;
pub mod coordinatize;
pub mod error;
pub mod field;
pub mod plane;
pub mod scalars;
pub mod symmetry;

pub use error::{Error, Result};
