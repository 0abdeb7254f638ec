use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: unexpected {found:?}")]
    Syntax { offset: usize, found: String },
    #[error("exponent at byte {offset} exceeds the cap of {cap}")]
    ExponentOverflow { offset: usize, cap: u64 },
    #[error("word {0} is not in h^1 (empty or does not end with y)")]
    NotInH1(String),
    #[error("not admissible: {0}")]
    NotAdmissible(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("exponent sum mismatch: alphas sum to {got}, expected {expected}")]
    SumMismatch { got: u64, expected: u64 },
    #[error("binomial with negative upper index {0}")]
    NegativeUpperIndex(i64),
    #[error("positive parameters required: {0}")]
    PositivityRequired(&'static str),
    #[error("{what}: {got} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, got: usize, cap: usize },
    #[error("truncation M = {0} is below the minimum of 16")]
    TooFewTerms(u64),
    #[error("invalid MZV index {text:?}: {reason}")]
    InvalidIndex { text: String, reason: String },
    #[error("empty product: at least one factor is required")]
    EmptyProduct,
}

pub type Result<T> = std::result::Result<T, Error>;
