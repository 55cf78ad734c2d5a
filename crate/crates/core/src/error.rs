use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a permutation window: {0}")]
    InvalidWindow(String),
    #[error("{v} is not below {w} in Bruhat order")]
    NotBruhatBelow { v: String, w: String },
    #[error("word {0:?} is not a reduced word for {1}")]
    NotReducedWord(Vec<usize>, String),
    #[error("degree {degree} exceeds the top degree {max} of P_{n}/I_{n}")]
    DegreeTooLarge { degree: usize, max: usize, n: usize },
    #[error("parse error at position {pos}: expected {expected}")]
    Parse { pos: usize, expected: String },
    #[error("{0}")]
    Invalid(String),
}
