//! Pointwise Fourier symbols of □^α.

use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::order::FractionalOrder;

/// σ_α(τ, ξ): (|ξ|²−τ²)^α in the spacelike region, e^{iπα sgn τ}(τ²−|ξ|²)^α in
/// the timelike region, zero on the light cone.
pub fn sigma(order: &FractionalOrder, tau: f64, xi_norm: f64) -> Complex64 {
    let w = xi_norm * xi_norm - tau * tau;
    if w == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    if order.is_integer() {
        return Complex64::new(w.powi(order.m as i32), 0.0);
    }
    let a = order.alpha;
    if w > 0.0 {
        Complex64::new(w.powf(a), 0.0)
    } else {
        let mag = (-w).powf(a);
        let sgn = if tau < 0.0 { -1.0 } else { 1.0 };
        let (s, c) = (PI * a).sin_cos();
        Complex64::new(mag * c, sgn * mag * s)
    }
}

/// (|ξ|² + s²)^α, principal branch.
pub fn dtn_multiplier(order: &FractionalOrder, s: Complex64, xi_norm: f64) -> Complex64 {
    let z = s * s + xi_norm * xi_norm;
    principal_pow(z, order.alpha)
}

/// (|ξ|² − (τ − iε)²)^α, principal branch. Computed through s = ε + iτ, so it is
/// identical to [`dtn_multiplier`] at that s.
pub fn sigma_eps(order: &FractionalOrder, tau: f64, xi_norm: f64, eps: f64) -> Complex64 {
    dtn_multiplier(order, Complex64::new(eps, tau), xi_norm)
}

pub(crate) fn principal_pow(z: Complex64, a: f64) -> Complex64 {
    if z.re == 0.0 && z.im == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let (r, th) = z.to_polar();
    Complex64::from_polar(r.powf(a), th * a)
}
