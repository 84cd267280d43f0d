//! Edge-list ingestion, experiment configuration, result emission and the `centra` commands.

pub mod bench;
pub mod cli;
pub mod config;
pub mod emit;
pub mod error;
pub mod io;

pub use error::{CliError, CliResult};
