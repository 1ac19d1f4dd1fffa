use thiserror::Error;

/// Errors reported by the numeric kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("lambda must be strictly positive, got {0}")]
    NonPositiveLambda(String),
    #[error("{0} is only available in exact mode")]
    ExactOnly(&'static str),
    #[error("{0} requires a floating-point field")]
    FloatOnly(&'static str),
    #[error("inner series must have a zero constant term")]
    NonzeroConstantTerm,
    #[error("index {index} exceeds table order {order}")]
    OutOfRange { index: usize, order: usize },
    #[error("{name} = {value} is outside {domain}")]
    Domain {
        name: &'static str,
        value: String,
        domain: &'static str,
    },
    #[error("cannot parse {0:?} as a scalar literal")]
    Literal(String),
    #[error("value {0} is not representable in the target field")]
    NotRepresentable(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
