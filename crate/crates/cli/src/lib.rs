//! Command-line front end: gamma-term expressions and subcommands.

pub mod expr;
pub mod run;

pub use expr::{parse_expr, parse_rational, Expr, Primary};
pub use run::{execute, run, Cli, Command, OutputFormat};
