//! Error type shared by every module of the crate.

use std::fmt;

/// Errors raised by exact-arithmetic operations.
///
/// Every fallible operation in this crate reports one of these variants;
/// none of them is recoverable by retrying, they all indicate that the
/// caller left the operation's domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An index that must be nonnegative was negative.
    NegativeIndex { what: &'static str, value: i64 },
    /// A parameter violated a stated precondition.
    Domain(String),
    /// Rational-function construction with a zero denominator polynomial.
    ZeroDenominator,
    /// A symbolic construction would exceed the degree guard.
    DegreeOverflow { requested: u128, limit: u128 },
    /// Evaluation of a rational function at a zero of its denominator.
    Pole,
    /// A continued fraction violating `a_k >= 1` for `k >= 1`, or empty.
    MalformedCf(String),
    /// An unrecognised sequence name.
    UnknownSequence(String),
    /// A named integer parameter required by an identity was absent.
    MissingParam(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NegativeIndex { what, value } => {
                write!(f, "{what} must be nonnegative, got {value}")
            }
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::ZeroDenominator => write!(f, "denominator is the zero polynomial"),
            Error::DegreeOverflow { requested, limit } => {
                write!(f, "degree {requested} exceeds the symbolic guard {limit}")
            }
            Error::Pole => write!(f, "denominator evaluates to zero at this point"),
            Error::MalformedCf(msg) => write!(f, "malformed continued fraction: {msg}"),
            Error::UnknownSequence(name) => write!(f, "unknown sequence name: {name}"),
            Error::MissingParam(name) => write!(f, "missing parameter: {name}"),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
