//! Command-line driver, file formats and the verification harness for
//! `borel-core`.

pub mod bfile;
pub mod commands;
pub mod error;
pub mod format;
pub mod report;
pub mod suites;
