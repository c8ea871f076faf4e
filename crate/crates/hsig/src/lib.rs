//! Pieces of the `hsig` command line that are also useful to tests: input
//! parsing for Langlands-style arguments and the reference signature tables.

pub mod input;
pub mod tables;
