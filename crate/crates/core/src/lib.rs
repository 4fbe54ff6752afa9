//! Exact computation with polynomial functors over ℚ: evaluation,
//! decomposition into homogeneous pieces, classification by symmetric-group
//! modules, and the comparison between operations and Schur functors.

pub mod cli;
pub mod decompose;
pub mod equivalence;
pub mod error;
pub mod exactmath;
pub mod polyfunctor;
pub mod symgroup;

pub use error::{Error, Result};
