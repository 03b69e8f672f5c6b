use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("monomial is not in M({p1},{p2};{r};inf): {reason}")]
    NotMember {
        p1: i64,
        p2: i64,
        r: i64,
        reason: String,
    },

    #[error("invalid b-vector: {0}")]
    InvalidCounts(String),

    #[error("malformed tableau: {0}")]
    MalformedTableau(String),

    #[error("element is not in I(inf): {0}")]
    NotCliffMember(String),

    #[error("unknown letter {0:?}")]
    UnknownLetter(String),

    #[error("shift parameters must have p1, p2 > 0 (got p1={p1}, p2={p2})")]
    BadParams { p1: i64, p2: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
