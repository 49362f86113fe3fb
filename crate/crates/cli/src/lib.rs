//! Command-line front end: problem files, bundled example data, the
//! subcommand implementations, and printers for results.

pub mod datasets;
pub mod emit;
pub mod m06;
pub mod problem;
pub mod run;
