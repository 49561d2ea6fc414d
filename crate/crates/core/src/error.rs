use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("character has no value for generator r{0} and no tail rule")]
    MissingGenerator(u32),

    #[error("invalid character value for {generator}: {reason}")]
    InvalidCharacter { generator: String, reason: String },

    #[error("invalid truncation config: {0}")]
    InvalidConfig(String),

    #[error("index {index} out of range for truncation size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("cannot parse word {input:?}: {reason}")]
    WordParse { input: String, reason: String },

    #[error("shape mismatch: expected {expected}, got {got}")]
    Shape { expected: usize, got: usize },

    #[error("coefficient denominator vanishes at n = {0}")]
    ZeroDenominator(usize),

    #[error("representation has no q^{sign}_{index}")]
    MissingRepEntry { sign: char, index: usize },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
