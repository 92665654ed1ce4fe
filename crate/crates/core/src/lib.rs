//! Gröbner bases of polynomial systems over GF(2).
//!
//! The engine is an F4 implementation with three cumulative accelerations
//! that only make sense over GF(2):
//!
//! * **FE-F4** adjoins the field equations `x^2 + x` to the input, which
//!   restricts the variety to GF(2)-rational points and bounds every basis
//!   degree by the number of variables.
//! * **S-F4** seeds each reduction matrix with one S-polynomial row per
//!   critical pair instead of two products, and puts every product in field
//!   normal form before it enters the matrix.
//! * **MS-F4** (middle solving) inspects the new polynomials after every
//!   elimination round, solves univariate ones with a unique root and
//!   substitutes the value through the whole solver state.
//!
//! Plain F4 and a textbook Buchberger implementation are kept as baselines
//! and correctness oracles. [`bench`] holds the HFE and cyclic-n generators,
//! the brute-force variety oracle and the run counters; [`cli`] is the text
//! front end used by the `msf4` binary.

pub mod bench;
pub mod cli;
pub mod f4;
pub mod matrix;
pub mod middle;
pub mod pairs;
pub mod poly;
pub mod verify;

pub use bench::RunStats;
pub use f4::{solve, Algorithm, Outcome, RenewMode, VariantConfig};
pub use poly::{Monomial, MonomialOrder, Polynomial, Ring};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("ring needs at least one variable")]
    EmptyRing,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("unknown monomial order `{0}`")]
    UnknownOrder(String),
    #[error("{0}: zero polynomial not allowed")]
    ZeroPolynomial(&'static str),
    #[error("empty polynomial system")]
    EmptySystem,
    #[error("select called on an empty pair queue")]
    EmptyQueue,
    #[error("{n} variables exceed the brute-force budget of {max}")]
    TooManyVariables { n: usize, max: usize },
    #[error("no irreducible polynomial of degree {0} found")]
    NoIrreducible(usize),
    #[error("invalid generator spec: {0}")]
    InvalidGenerator(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
