//! Command-line driver, file formats and JSON reports over `torelli-core`.

pub mod checks;
pub mod cli;
pub mod fixtures;
pub mod format;
pub mod report;

pub use report::{Report, Verdict};
