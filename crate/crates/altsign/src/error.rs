use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible: {0}")]
    NotInvertible(String),
    #[error("matrix is not square ({0}x{1})")]
    NonSquare(usize, usize),
    #[error("Pfaffian of odd order {0}")]
    OddOrder(usize),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("class {class} has no matrices of order {order}")]
    Incompatible { class: String, order: usize },
    #[error("statistic {0} is undefined here")]
    UndefinedStatistic(String),
    #[error("specialization singular: {0}")]
    Singular(String),
    #[error("expected an integer, got {0}")]
    NonInteger(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
