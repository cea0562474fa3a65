use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} must be nonnegative, got {value}")]
    NegativeArgument { what: &'static str, value: i64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("{what} is not divisible")]
    NotDivisible { what: String },

    #[error("evaluation at a pole: {0}")]
    Pole(String),

    #[error("{what} is not a polynomial (lowest exponent {offset})")]
    NotPolynomial { what: String, offset: i64 },

    #[error("{what} has a negative coefficient")]
    NegativeCoefficient { what: String },

    #[error("series oracle for n = {n}: coefficient of t^{degree} does not vanish")]
    NonzeroTail { n: usize, degree: usize },

    #[error("{0}")]
    OutOfRange(String),

    #[error("enumeration for n = {n} exceeds the feasibility limit n <= {limit}")]
    Infeasible { n: usize, limit: usize },
}
