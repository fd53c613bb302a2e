use fracwave_core::MathError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Math(#[from] MathError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad grid: {0}")]
    Grid(String),
    #[error("bad field file: {0}")]
    Format(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("non-finite value at index {0}")]
    NonFinite(usize),
    #[error("spectrum is not Hermitian: imaginary residue {0:e}")]
    NonHermitian(f64),
    #[error("time step {dt} violates the stability bound {limit}")]
    Cfl { dt: f64, limit: f64 },
    #[error("invalid parameter: {0}")]
    Param(String),
    #[error("quadrature did not converge: indicator {0:e}")]
    Quadrature(f64),
    #[error("config: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
