use thiserror::Error;

use crate::element::MAX_GENS;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    InvalidPrime(u32),

    #[error("{0} generators requested; at most {MAX_GENS} are supported")]
    TooManyGenerators(usize),

    #[error("generator index {index} is out of range for {ngens} generators")]
    IndexOutOfRange { index: usize, ngens: usize },

    #[error("relation {relation} mentions {generator}, but only generators after {bound} may appear")]
    Shape {
        relation: String,
        generator: String,
        bound: String,
    },

    #[error("unknown generator label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate generator label `{0}`")]
    DuplicateLabel(String),

    #[error("expected {expected} images, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("cannot parse word `{input}`: {reason}")]
    WordSyntax { input: String, reason: String },

    #[error("{what} would have {size} elements, above the guard of {guard}")]
    SizeGuard { what: String, size: u128, guard: u128 },

    #[error("presentation is inconsistent: {0} overlap(s) fail")]
    Inconsistent(usize),

    #[error("unknown catalogue label `{0}`")]
    UnknownEntry(String),

    #[error("{label} is not defined at p = {prime}: requires {requirement}")]
    InvalidPrimeForEntry {
        label: String,
        prime: u32,
        requirement: String,
    },

    #[error("{label} has no machine-readable presentation ({reason})")]
    ExternalTemplate { label: String, reason: String },

    #[error("catalogue file line {line}: {message}")]
    CatalogueParse { line: usize, message: String },

    #[error("declared invariant `{key}` = {declared} does not match computed value {computed}")]
    InvariantMismatch {
        key: String,
        declared: String,
        computed: String,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("search space of {bound} candidate maps exceeds the guard of {guard}")]
    SearchGuard { bound: u128, guard: u128 },

    #[error("set of maps is not closed under composition")]
    NotClosed,

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
