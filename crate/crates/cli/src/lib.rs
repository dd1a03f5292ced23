//! Command-line front end for the Novikov calculator.
//!
//! `parse` holds the expression grammars, `commands` the verb dispatch.
//! The binary itself is a thin wrapper around [`commands::run`].

pub mod commands;
pub mod parse;

pub use commands::{run, Cli, CmdOutput};
pub use parse::{parse_diff, parse_nov, ParseError};
