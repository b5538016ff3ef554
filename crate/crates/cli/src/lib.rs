//! Command-line front end and file formats for `anyon-deg-core`.

pub mod cli;
pub mod format;
pub mod golden;
pub mod parallel;
pub mod reproduce;
