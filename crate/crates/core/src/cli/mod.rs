//! Text front end: problem files, generator specs and the `msf4` command.

pub mod parse;
pub mod run;

pub use parse::{parse_polynomial, parse_problem, render_problem, Problem};
pub use run::{parse_gen_spec, run, GenSpec};
