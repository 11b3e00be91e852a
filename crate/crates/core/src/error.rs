use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors raised by the library. Parse errors carry a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid generator name `{0}`")]
    InvalidIdentifier(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("unknown generator `{name}` at position {pos}")]
    UnknownGenerator { name: String, pos: usize },
    #[error("malformed exponent at position {pos}")]
    MalformedExponent { pos: usize },
    #[error("unbalanced bracket at position {pos}")]
    UnbalancedBracket { pos: usize },
    #[error("unexpected {found} at position {pos}")]
    Unexpected { found: String, pos: usize },
    #[error("malformed scalar `{text}` at position {pos}")]
    MalformedScalar { text: String, pos: usize },
    #[error("{line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unknown ring `{0}` (expected z, q or fp:<p>)")]
    UnknownRing(String),
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("alphabet mismatch")]
    AlphabetMismatch,
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("no image given for generator `{0}`")]
    MissingImage(String),
    #[error("generator `{0}` is assigned twice")]
    DuplicateImage(String),
    #[error("form has a nonzero standard-segment part; split it before cobounding")]
    NonzeroStandardPart,
    #[error("tensor of weight {weight} needs truncation order > {weight}, got {order}")]
    WeightTooLarge { weight: usize, order: usize },
    #[error("truncated quotient too large: {size} exceeds the limit of {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("not a group table: {0}")]
    NotAGroup(String),
    #[error("generator `{0}` has no element label")]
    UnlabeledGenerator(String),

    #[error("endomorphism has Johnson level {level} < {required}; generator `{generator}` moves too early")]
    LevelTooSmall { generator: String, level: usize, required: usize },
    #[error("Johnson image of `{tensor}` has weight {weight} > 1")]
    ImageWeight { tensor: String, weight: usize },
    #[error("Johnson image of `{tensor}` is not a combination of weight-1 invariants")]
    ImageOutsideBasis { tensor: String },
}

impl Error {
    /// Byte offset into the parsed text, for errors that have one.
    pub fn position(&self) -> Option<usize> {
        match self {
            Error::UnknownGenerator { pos, .. }
            | Error::MalformedExponent { pos }
            | Error::UnbalancedBracket { pos }
            | Error::Unexpected { pos, .. }
            | Error::MalformedScalar { pos, .. } => Some(*pos),
            _ => None,
        }
    }

    /// Whether the error comes from reading input text rather than from the mathematics.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidIdentifier(_)
                | Error::DuplicateGenerator(_)
                | Error::UnknownGenerator { .. }
                | Error::MalformedExponent { .. }
                | Error::UnbalancedBracket { .. }
                | Error::Unexpected { .. }
                | Error::MalformedScalar { .. }
                | Error::Syntax { .. }
                | Error::NotPrime(_)
                | Error::UnknownRing(_)
                | Error::MissingImage(_)
                | Error::DuplicateImage(_)
        )
    }
}
