//! Command-line runner for the verification suites: configuration, suite
//! execution, report artifacts and parameter grids.

pub mod config;
pub mod grid;
pub mod run;
pub mod suites;
