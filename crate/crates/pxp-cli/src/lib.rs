//! Command-line front end for `pxp`: fixtures, reports and subcommands.

pub mod commands;
pub mod fixtures;
