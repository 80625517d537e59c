use thiserror::Error;

/// Errors raised by the arithmetic layers, the backends and the algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid finite field: {0}")]
    InvalidField(String),

    #[error("quadratic character is undefined in characteristic 2")]
    EvenCharacteristic,

    #[error("{0} does not generate the unit group")]
    NotAGenerator(String),

    #[error("no discrete logarithm exists for {0}")]
    NoDiscreteLog(String),

    #[error("Euler factor at index {index} violates the stratum invariant for degree {degree}: {reason}")]
    StratumInvariant {
        index: String,
        degree: usize,
        reason: String,
    },

    #[error("root finding did not converge within {0} iterations")]
    RootFindingDiverged(usize),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("singular curve: {0}")]
    SingularCurve(String),

    #[error("constant elliptic curve: its L-function is D(T) only; use the constant-curve denominator")]
    ConstantCurve,

    #[error("trivial character: use the zeta backend instead")]
    TrivialCharacter,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error in `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
