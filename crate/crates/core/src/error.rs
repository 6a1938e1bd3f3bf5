use thiserror::Error;

use crate::poly::Var;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element `{elem}` is not in the carrier of {semiring}")]
    CarrierMismatch { semiring: String, elem: String },

    #[error("semiring mismatch: {left} vs {right}")]
    SemiringMismatch { left: String, right: String },

    #[error("invalid semiring selector `{0}`")]
    BadSelector(String),

    #[error("invalid semiring table: {0}")]
    BadTable(String),

    #[error("cannot parse `{text}` as an element of {semiring}")]
    BadElement { semiring: String, text: String },

    #[error("no value assigned to variable {0}")]
    MissingAssignment(Var),

    #[error("{semiring} does not support {what}")]
    Unsupported { semiring: String, what: String },

    #[error("exhaustive evaluation needs {points} points, more than the cap of {cap}")]
    ExhaustiveCap { points: u128, cap: u128 },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("input is outside the image: {0}")]
    NotInImage(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("limit of {0} elements exceeded")]
    LimitExceeded(usize),

    #[error("exhaustive search needs {needed} substitutions, over the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
