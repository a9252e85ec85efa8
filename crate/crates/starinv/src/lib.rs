//! File formats, fixtures and the command-line driver for `starinv-core`.

pub mod cli;
pub mod fixtures;
pub mod record;
pub mod report;
pub mod text;
