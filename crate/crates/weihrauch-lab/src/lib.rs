//! An executable laboratory for Weihrauch-style reductions between
//! represented problems on Baire space: oracles, coded graphs and trees,
//! certified instances, and verified forward/back transforms.

pub mod cli;
pub mod encodings;
pub mod error;
pub mod harness;
pub mod oracle;
pub mod problems;
pub mod reductions;
pub mod verdict;

pub use error::{Error, Result};
pub use verdict::Verdict;
