use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("element is not invertible: {0}")]
    NotInvertible(String),
    #[error("braiding is singular")]
    SingularBraiding,
    #[error("braiding is not well defined: {0}")]
    IllDefinedBraiding(String),
    #[error("connection does not preserve the wedge kernel: {0}")]
    ThetaNotPreserved(String),
    #[error("input is not antisymmetric: {0}")]
    NotAntisymmetric(String),
    #[error("unsupported degree {0}")]
    UnsupportedDegree(usize),
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("syntax error at offset {offset}: {message} (expected one of: {expected})")]
    Syntax { offset: usize, message: String, expected: String },
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
