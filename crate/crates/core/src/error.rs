use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{function}: argument {value} outside domain ({constraint})")]
    Domain {
        function: &'static str,
        value: f64,
        constraint: &'static str,
    },

    #[error("{function}: t = {t} outside supported window [{lo}, {hi}]")]
    Range {
        function: &'static str,
        t: f64,
        lo: f64,
        hi: f64,
    },

    #[error("zeta(1/2 + it) vanishes at t = {t} (|zeta| = {modulus:e}); argument undefined")]
    AtZero { t: f64, modulus: f64 },

    #[error("{what} did not converge after {iterations} iterations")]
    NoConvergence {
        what: &'static str,
        iterations: usize,
    },

    #[error("zero list covers [{lo}, {hi}] but [{need_lo}, {need_hi}) is required")]
    Coverage {
        lo: f64,
        hi: f64,
        need_lo: f64,
        need_hi: f64,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("{0} has a prime factor beyond the trial-division bound")]
    FactorizationOverflow(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid zero list: {0}")]
    InvalidZeroList(String),

    #[error("cannot merge zero lists from different sources ({0} and {1})")]
    MixedSources(&'static str, &'static str),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
