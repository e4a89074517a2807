//! Expression parser and command-line surface over `slicereg-core`.

pub mod app;
pub mod commands;
pub mod parse;
pub mod report;
pub mod worked;

pub use app::{run, Cli, Invocation};
pub use parse::{parse_pair, parse_point, parse_stem, Mode, ParseError};
pub use report::Report;
