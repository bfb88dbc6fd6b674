use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The field model is not tame for the requested cover degree.
    #[error("wild/ill-posed model: {0}")]
    WildModel(String),

    #[error("invalid field model: {0}")]
    InvalidModel(String),

    /// `p | m` in a place where only the tame regime is supported.
    #[error("wild case unsupported: p = {p} divides {m}")]
    WildCase { p: u64, m: u64 },

    #[error("membership undecidable at class granularity: {m} does not divide n = {n}")]
    PowerNotDividingDegree { m: u64, n: u64 },

    #[error("cyclotomic ring mismatch: Z[zeta_{left}] vs Z[zeta_{right}]")]
    RingMismatch { left: u64, right: u64 },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("not metic: central character obstructed on mu_n (order {s} does not divide {m})")]
    NotMetic { s: u64, m: u64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A quantity that must be an integer came out fractional. This is an
    /// internal inconsistency (or a counterexample), never rounded away.
    #[error("non-integral {what}: {numerator}/{denominator}")]
    NonIntegral {
        what: &'static str,
        numerator: String,
        denominator: String,
    },

    #[error("inexact division in {0}")]
    InexactDivision(&'static str),
}

impl Error {
    /// True for failures that signal a bug or a broken identity rather than
    /// bad user input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::NonIntegral { .. } | Error::InexactDivision(_))
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
