use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The argument lies outside the domain of the named function.
    #[error("{func}({n}) is undefined: {reason}")]
    Domain {
        func: &'static str,
        n: u64,
        reason: &'static str,
    },

    /// The argument exceeds the supported ceiling of the operation.
    #[error("{func}: argument {n} exceeds the supported ceiling {ceiling}")]
    TooLarge {
        func: &'static str,
        n: u64,
        ceiling: u64,
    },

    /// A construction was requested outside the parameters it covers.
    #[error("{0}")]
    Precondition(String),

    /// No staircase partition satisfies the requested constraints.
    #[error("no staircase partition of {n} has at least {min_t} steps")]
    NoPartition { n: u64, min_t: usize },

    #[error("unknown property id `{0}`")]
    UnknownProperty(String),

    #[error("parse error: {0}")]
    Parse(String),
}
