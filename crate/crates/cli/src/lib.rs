//! Command-line front end for the `markoff-hurwitz` engine.
//!
//! Exit codes: `0` success, `1` a verification check failed, `2` usage or
//! parse error (also used when output cannot be written), `3` a point is not
//! on the variety, `4` reduction got stuck.

pub mod args;
pub mod dto;
pub mod render;
pub mod run;

pub use run::{run, CliError, Outcome};
