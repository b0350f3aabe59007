//! File formats, shipped fixtures and the `splitkit` command line on top of `splitkit-core`.

pub mod cli;
pub mod error;
pub mod fixtures;
pub mod formats;
pub mod report;

pub use error::{CliError, Result};
pub use report::RunReport;
