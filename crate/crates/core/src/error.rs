use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("substitution z -> z^0 is not a ring map on Laurent polynomials")]
    ZeroSubstitution,

    #[error("operation requires a nonzero sequence")]
    ZeroSequence,

    #[error("prime {0} is unsuitable: leading coefficient vanishes or input is not squarefree mod {0}")]
    BadPrime(u64),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("class has {count} associate classes, above the cap of {cap}")]
    ClassTooLarge { count: u128, cap: u128 },

    #[error("cannot parse sequence literal {literal:?}: {reason}")]
    Parse { literal: String, reason: String },

    #[error("sequence length must be positive")]
    EmptyLength,

    #[error("length {n} exceeds the search ceiling {ceiling}; pass --force to override")]
    AboveCeiling { n: usize, ceiling: usize },

    #[error("length {0} exceeds the 64-bit packed representation")]
    TooLong(usize),

    #[error("corrupted checkpoint {path}: {reason}")]
    Checkpoint { path: String, reason: String },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("{target} is not a multiple of {len}")]
    NotMultiple { len: usize, target: usize },

    #[error("input pair is not nontrivially equicorrelational")]
    NotNontrivial,

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
