//! Command-line front end: parse a script of ring and ideal declarations,
//! run one command, print text, JSON or CSV.

pub mod app;
pub mod script;

pub use app::{execute, run, Cli, CliError, Output};
pub use script::{parse, render_script, ParseError, Script};
