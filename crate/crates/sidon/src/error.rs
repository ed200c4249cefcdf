use thiserror::Error;

/// Errors surfaced by the library. Each variant carries a stable short name
/// (see [`Error::name`]) that the CLI writes into its JSON payload.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on plain inputs failed (ranges, degrees, overflow...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A value that must be prime is not.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// A supplied modulus polynomial is reducible.
    #[error("modulus {0} is reducible over F_{1}")]
    ReducibleModulus(String, u64),

    /// A required element is not primitive (does not generate the unit group).
    #[error("not primitive: {0}")]
    NotPrimitive(String),

    /// An element or polynomial does not belong to the field context in use.
    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    /// An index set for a construction contains an out-of-range, repeated,
    /// or (for Singer pairs) proportional entry.
    #[error("invalid index set: {0}")]
    InvalidIndex(String),

    /// Two moduli that must be coprime are not.
    #[error("moduli {0} and {1} are not coprime")]
    NotCoprime(u64, u64),

    /// A claimed witness failed re-verification.
    #[error("witness rejected: {0}")]
    WitnessError(String),

    /// A set literal or polynomial string could not be parsed.
    #[error("parse error: {0}")]
    ParseError(String),
}

impl Error {
    /// Stable machine-readable name, used in CLI error payloads.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "invalid-input",
            Error::NotPrime(_) => "not-prime",
            Error::ReducibleModulus(..) => "modulus-error",
            Error::NotPrimitive(_) => "primitivity-error",
            Error::ContextMismatch(_) => "context-error",
            Error::InvalidIndex(_) => "invalid-index",
            Error::NotCoprime(..) => "coprimality-error",
            Error::WitnessError(_) => "witness-error",
            Error::ParseError(_) => "parse-error",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
