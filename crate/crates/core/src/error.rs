use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("denominator vanishes under specialization")]
    DenominatorVanishes,
    #[error("negative edge label")]
    NegativeLabel,
    #[error("color multisets differ")]
    ColorMismatch,
    #[error("index out of range")]
    IndexOutOfRange,
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error("unknown generator: {0}")]
    UnknownGenerator(String),
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("scalar syntax error at byte {pos}: {msg}")]
    ScalarSyntax { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
