use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,

    #[error("symbol {symbol} is outside the alphabet of size {k}")]
    InvalidSymbol { symbol: u32, k: u32 },

    #[error("character {0:?} is not a symbol (expected 0-9 or a-z)")]
    InvalidCharacter(char),

    #[error("text form supports alphabets of at most 36 symbols, got {0}")]
    AlphabetTooLarge(u32),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("integer overflow while computing {0}")]
    Overflow(String),

    #[error("k={k}, n={n} needs {size} words, above the size cap of {cap}")]
    SizeCap { k: u32, n: usize, size: u128, cap: u64 },

    #[error("{0} is not a vertex of this graph")]
    UnknownVertex(String),

    #[error("{0} is not an edge of this graph")]
    UnknownEdge(String),

    #[error("no alternating path from {from} to {to}")]
    NoAlternatingPath { from: String, to: String },

    #[error("condition {condition} does not hold: {detail}")]
    ConditionFailed { condition: u8, detail: String },

    #[error("path breaks at step {step}: {detail}")]
    Discontinuous { step: usize, detail: String },

    #[error("path is not Eulerian: {0}")]
    NotEulerian(String),

    #[error("cannot balance incidence types at {vertex}: {detail}")]
    Unbalanceable { vertex: String, detail: String },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn overflow(what: impl Into<String>) -> Error {
        Error::Overflow(what.into())
    }
}
