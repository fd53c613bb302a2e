use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{MathError, Result};

// Lanczos approximation, g = 7, n = 9 (Godfrey's coefficients).
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_7;

fn near_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

fn lanczos_sum(z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(LANCZOS[0], 0.0);
    for (k, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += *c / (z + k as f64);
    }
    acc
}

/// log Γ(z) for Re z ≥ 1/2, principal branch of the Lanczos form.
fn ln_gamma_right(z: Complex64) -> Complex64 {
    let w = z - 1.0;
    let t = w + LANCZOS_G + 0.5;
    (w + 0.5) * t.ln() - t + LN_SQRT_2PI + lanczos_sum(w).ln()
}

/// Complex Gamma function.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if near_pole(z) {
        return Err(MathError::Pole(z.re));
    }
    if z.re < 0.5 {
        // reflection
        let s = (z * PI).sin();
        let g = gamma(Complex64::new(1.0, 0.0) - z)?;
        return Ok(Complex64::new(PI, 0.0) / (s * g));
    }
    let w = z - 1.0;
    let t = w + LANCZOS_G + 0.5;
    let sqrt_2pi = (2.0 * PI).sqrt();
    Ok(sqrt_2pi * t.powc(w + 0.5) * (-t).exp() * lanczos_sum(w))
}

/// Real Gamma function.
pub fn gamma_real(x: f64) -> Result<f64> {
    Ok(gamma(Complex64::new(x, 0.0))?.re)
}

/// log Γ(z), with an imaginary part that is only meaningful modulo 2π.
/// Suited for ratios of large Gamma values.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if near_pole(z) {
        return Err(MathError::Pole(z.re));
    }
    if z.re < 0.5 {
        let s = (z * PI).sin();
        return Ok(Complex64::new(PI.ln(), 0.0) - s.ln() - ln_gamma_right(Complex64::new(1.0, 0.0) - z));
    }
    Ok(ln_gamma_right(z))
}

/// 1/Γ(z), entire: zero at the non-positive integers.
pub fn rgamma(z: Complex64) -> Complex64 {
    if near_pole(z) {
        return Complex64::new(0.0, 0.0);
    }
    match gamma(z) {
        Ok(g) => g.inv(),
        Err(_) => Complex64::new(0.0, 0.0),
    }
}
