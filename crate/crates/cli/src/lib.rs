//! Library side of the command-line tool, split out so the integration
//! tests can drive every subcommand in-process and byte-compare outputs.

pub mod app;
pub mod render;
pub mod verify;

pub use app::{command_output, run};
