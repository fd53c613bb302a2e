use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use super::gamma::{gamma_real, rgamma};
use crate::error::{MathError, Result};

pub const SERIES_RADIUS: f64 = 2.0;
pub const ASYMPTOTIC_RADIUS: f64 = 20.0;

/// Modified Bessel function of the second kind K_ν(z) for real non-integer ν
/// and Re z > 0.
pub fn bessel_k(nu: f64, z: Complex64) -> Result<Complex64> {
    check(nu, z)?;
    let r = z.norm();
    if r <= SERIES_RADIUS {
        match k_series(nu, z) {
            Err(MathError::Unsupported(_)) => k_integral(nu, z),
            other => other,
        }
    } else if r >= ASYMPTOTIC_RADIUS {
        k_asymptotic(nu, z)
    } else {
        k_integral(nu, z)
    }
}

fn check(nu: f64, z: Complex64) -> Result<()> {
    if !(z.re > 0.0) || !z.im.is_finite() || !z.re.is_finite() {
        return Err(MathError::Domain("bessel_k needs Re z > 0"));
    }
    if !nu.is_finite() {
        return Err(MathError::Domain("bessel_k order not finite"));
    }
    Ok(())
}

/// Power series of I_{±ν}, combined through the reflection form. Needs ν
/// away from the integers.
pub fn k_series(nu: f64, z: Complex64) -> Result<Complex64> {
    check(nu, z)?;
    let nu = nu.abs();
    let s = (PI * nu).sin();
    if s.abs() < 1e-8 {
        return Err(MathError::Unsupported("integer order in bessel_k series"));
    }
    let ip = i_series(nu, z)?;
    let im = i_series(-nu, z)?;
    Ok((im - ip) * (PI / (2.0 * s)))
}

fn i_series(nu: f64, z: Complex64) -> Result<Complex64> {
    let half = z * 0.5;
    let q = half * half;
    let lead = half.powf(nu);
    let mut term = rgamma(Complex64::new(nu + 1.0, 0.0));
    let mut sum = term;
    for k in 1..200 {
        let kf = k as f64;
        term = term * q / (kf * (nu + kf));
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() {
            return Ok(lead * sum);
        }
    }
    Err(MathError::NoConvergence("bessel I series"))
}

/// Hankel asymptotic expansion, truncated at the smallest term.
pub fn k_asymptotic(nu: f64, z: Complex64) -> Result<Complex64> {
    check(nu, z)?;
    let mu = 4.0 * nu * nu;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut last = f64::INFINITY;
    for k in 1..120 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        let next = term * ((mu - odd * odd) / (8.0 * kf)) / z;
        let size = next.norm();
        if size >= last {
            break;
        }
        term = next;
        sum += term;
        last = size;
        if size <= 1e-17 * sum.norm() {
            break;
        }
    }
    Ok((Complex64::new(PI, 0.0) / (z * 2.0)).sqrt() * (-z).exp() * sum)
}

/// K_ν(z) = √(π/2z) e^{−z}/Γ(ν+½) ∫₀^∞ e^{−t} t^{ν−½}(1 + t/2z)^{ν−½} dt,
/// trapezoid after t = e^x.
pub fn k_integral(nu: f64, z: Complex64) -> Result<Complex64> {
    check(nu, z)?;
    let nu = nu.abs();
    let h = 0.125;
    let p = nu - 0.5;
    // left end: e^{x(ν+½)} below 1e-18
    let x_lo = -41.5 / (nu + 0.5);
    let x_hi = 4.0;
    let n = ((x_hi - x_lo) / h).ceil() as usize;
    let inv2z = (z * 2.0).inv();
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..=n {
        let x = x_lo + i as f64 * h;
        let t = x.exp();
        let w = (-t + x * (nu + 0.5)).exp();
        acc += (Complex64::new(1.0, 0.0) + inv2z * t).powf(p) * w;
    }
    acc *= h;
    let pre = (Complex64::new(PI, 0.0) / (z * 2.0)).sqrt() * (-z).exp() / gamma_real(nu + 0.5)?;
    Ok(pre * acc)
}
