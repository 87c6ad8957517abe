//! The `scope-lab` command line: JSON state files in, CSV reports out.
//!
//! Exit status is 0 on success, 1 when a verification ran and failed, and
//! 2 for usage, parse and invariant errors.

pub mod cli;
pub mod commands;
pub mod parse;
pub mod report;
pub mod statefile;

pub use cli::Cli;
pub use commands::{run, Outcome};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED_CHECK: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
