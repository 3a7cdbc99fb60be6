use thiserror::Error;

use crate::coeffs::WeightMode;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("adjacent brackets at items {position} and {} (brackets must alternate with letters)", position + 1)]
    AdjacentBrackets { position: usize },

    #[error("operation is undefined on the empty word 1")]
    EmptyWord,

    #[error("invalid letter name `{0}`: must start with a letter, contain only letters, digits or `_`, and not be a reserved word")]
    InvalidLetter(String),

    #[error("the alphabet is empty")]
    EmptyAlphabet,

    #[error("the antipode is only available at weight 0 (got weight {0}); whether the algebra is Hopf at nonzero weight is open")]
    WeightNotZero(WeightMode),

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown letter `{name}` at offset {offset} (not in the declared alphabet)")]
    UnknownLetter { name: String, offset: usize },

    #[error("type error at offset {offset}: {message}")]
    Type { offset: usize, message: String },

    #[error("malformed JSON: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
