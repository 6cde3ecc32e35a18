//! JSON formats, a thread-pool executor, verification suites and the
//! command-line front end for `operad-forge-core`.

pub mod cli;
pub mod commands;
pub mod error;
pub mod exec;
pub mod json;
pub mod names;
pub mod report;
pub mod suites;

pub use error::{CliError, CliResult};
pub use names::Names;
