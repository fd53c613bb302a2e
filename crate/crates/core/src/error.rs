use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MathError {
    #[error("argument {0} is a pole")]
    Pole(f64),
    #[error("argument outside domain: {0}")]
    Domain(&'static str),
    #[error("series did not converge: {0}")]
    NoConvergence(&'static str),
    #[error("unsupported parameter case: {0}")]
    Unsupported(&'static str),
    #[error("invalid order alpha = {0}")]
    InvalidOrder(f64),
    #[error("half-integer order 2*alpha = {0} is excluded")]
    HalfInteger(f64),
    #[error("invalid q-scheme: {0}")]
    InvalidScheme(&'static str),
    #[error("extrapolation did not settle: spread {0:e}")]
    Extrapolation(f64),
}

pub type Result<T> = core::result::Result<T, MathError>;
