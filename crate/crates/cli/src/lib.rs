//! Command-line front end around `ucomp-core`.

pub mod app;
pub mod cache;
pub mod config;
pub mod document;
pub mod emit;
pub mod error;
pub mod names;

pub use app::{run, Cli};
pub use error::{CliError, Result};
