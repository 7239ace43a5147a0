//! File formats, reports and the command-line front end for `tpt-core`.

pub mod cli;
pub mod format;
pub mod report;
