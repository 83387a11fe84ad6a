use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("requested {requested} symbols but the finite word has only {available}")]
    RequestedBeyondFiniteWord { requested: usize, available: usize },

    #[error("operation requires a nonempty word")]
    EmptyWord,

    #[error("power root must be nonempty")]
    EmptyRoot,

    #[error("factor length {n} exceeds prefix length {prefix}")]
    LengthExceedsPrefix { n: usize, prefix: usize },

    #[error("horizon of {horizon} symbols cannot answer queries about length-{n} factors")]
    HorizonTooSmall { n: usize, horizon: usize },

    #[error("{quantity} at n = {n} changed from {at_horizon} to {at_double} when the horizon doubled from {horizon}")]
    UnstableHorizon {
        quantity: &'static str,
        n: usize,
        horizon: usize,
        at_horizon: String,
        at_double: String,
    },

    #[error("elementary circuit enumeration exceeded the cap of {cap}")]
    CircuitExplosion { cap: usize },

    #[error("not an elementary circuit: {0}")]
    NotACircuit(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("state {state} has no transition on digit {digit}")]
    PartialTransition { state: String, digit: u32 },

    #[error("invalid word specification: {0}")]
    InvalidSpec(String),

    #[error("{0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
