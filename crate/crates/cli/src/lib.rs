//! Command-line front end: file formats, suite files, the built-in suite and
//! the machine report.

pub mod commands;
pub mod error;
pub mod formats;
pub mod report;
pub mod suite;
pub mod suitefile;

pub use error::CliError;
