use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("alphabet mismatch")]
    AlphabetMismatch,

    #[error("symbol {symbol} is outside an alphabet of size {size}")]
    SymbolOutOfRange { symbol: usize, size: usize },

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("unknown character {ch:?} at column {column}")]
    UnknownCharacter { ch: char, column: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("certificate space of {candidates} candidates exceeds the limit of {limit}")]
    EnumerationLimit { candidates: String, limit: u64 },

    #[error("solution enumeration stopped at the cap of {cap}; result would be inconclusive")]
    SolutionCapReached { cap: usize },

    #[error("invalid certificate map: {0}")]
    InvalidMap(String),

    #[error("invalid clue: {0}")]
    InvalidClue(String),

    #[error("inconsistent clue: {0}")]
    InconsistentClue(String),

    #[error("no certificate map declared for reduction `{0}`")]
    NoDeclaredMap(String),

    #[error("unknown reduction `{0}`")]
    UnknownReduction(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
