//! Special functions: complex Gamma, modified Bessel K_ν of complex argument,
//! Gauss hypergeometric ₂F₁ on the negative real axis.

mod bessel;
mod gamma;
mod hyp2f1;

pub use bessel::{bessel_k, k_asymptotic, k_integral, k_series, ASYMPTOTIC_RADIUS, SERIES_RADIUS};
pub use gamma::{gamma, gamma_real, ln_gamma, rgamma};
pub use hyp2f1::{hyp2f1, hyp2f1_complex};
