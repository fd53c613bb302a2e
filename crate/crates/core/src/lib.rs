//! Pointwise numerical kernels for fractional powers □^α of the wave operator.
//!
//! Everything here is `no_std` (with `alloc`): special functions, the Fourier
//! symbol σ_α, q-calculus coefficients of the hypersingular representation,
//! the Bessel-K extension profile and the global anti-de Sitter multiplier.
#![no_std]

extern crate alloc;

pub mod ads;
pub mod error;
pub mod extension;
pub mod order;
pub mod qcalc;
pub mod specfun;
pub mod symbol;

pub use error::{MathError, Result};
pub use num_complex::Complex64;
pub use order::FractionalOrder;
