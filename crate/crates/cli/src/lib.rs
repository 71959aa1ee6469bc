//! Command-line front end for the `polyfunc` library.

pub mod app;
pub mod parse;
pub mod render;

pub use app::{run, run_args, Cli, Output};
