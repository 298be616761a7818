//! Command-line front end: group-spec parsing, single checks, family sweeps
//! and the regression tables.

pub mod app;
pub mod report;
pub mod spec;
pub mod tables;

pub use app::{run, Cli, Io};
pub use spec::{parse_group_spec, GroupSpec, ParseError, SpecError};
