//! Command-line front end and verification suites for `diamondlat`: file
//! formats, subcommands, and the reproducible acceptance suites.

pub mod commands;
pub mod formats;
pub mod suites;

pub use commands::{run, Cli, Outcome};
