use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {letter} out of range (allowed indices 1..={bound})")]
    LetterOutOfRange { letter: i32, bound: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("invalid range: {0}")]
    BadRange(String),
    #[error("word {0} lies in the base coset of the boundary loop")]
    BaseCoset(String),
    #[error("invalid diagram: {}", .0.join("; "))]
    InvalidDiagram(Vec<String>),
    #[error("invalid class: {0}")]
    InvalidClass(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("arithmetic overflow computing N_{0}")]
    Overflow(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
