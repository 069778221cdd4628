//! Command-line front end for the `homlie-core` kernel: expression parsing,
//! brackets in a context, verification suites, tables and JSON reports.

pub mod commands;
pub mod expr;

pub use commands::{run, Cli, CliError, Outcome};
pub use expr::{parse_laurent, parse_rational, parse_scalar, ExprError, SyntaxError};
