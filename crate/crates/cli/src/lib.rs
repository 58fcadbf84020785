//! Library side of the `garside-kit` command-line tool: argument handling,
//! the reproduction report, and the committed lattice fixtures.

pub mod app;
pub mod fixtures;
pub mod report;
