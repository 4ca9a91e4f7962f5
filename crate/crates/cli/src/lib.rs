//! Building blocks of the `bkvpg` command-line tool: report schemas, the
//! benchmark sweep, SVG rendering and argument parsers.

pub mod args;
pub mod bench;
pub mod render;
pub mod report;
