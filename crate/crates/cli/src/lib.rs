//! The `weylkit` command line: argument parsing, result records, the
//! on-disk cache and the subcommands.

pub mod args;
pub mod cache;
pub mod commands;
pub mod error;
pub mod record;

pub use args::Cli;
pub use commands::{run, Output};
pub use error::{CliError, CliResult};
