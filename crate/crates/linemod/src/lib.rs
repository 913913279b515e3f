//! Presentation files, JSON reports, and the verification suites behind the
//! `linemod` command.

pub mod cli;
pub mod dsl;
pub mod report;
pub mod suites;
