//! Command-line front end of the `khovanov-p` library: argument parsing, JSON
//! input and output, and ASCII, TikZ and Graphviz renderings.

pub mod commands;
pub mod config;
pub mod error;
pub mod json;
pub mod render;

pub use commands::{run, Cli, Output};
pub use error::{CliError, CliResult};
