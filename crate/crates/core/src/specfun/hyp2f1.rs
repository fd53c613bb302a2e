use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use super::gamma::{gamma, rgamma};
use crate::error::{MathError, Result};

const MAX_TERMS: usize = 20_000;
const PFAFF_LIMIT: f64 = 0.95;

fn series(a: Complex64, b: Complex64, c: Complex64, w: f64) -> Result<Complex64> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut small = 0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term = term * (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * w;
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() {
            small += 1;
            if small >= 2 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(MathError::NoConvergence("hypergeometric series"))
}

fn is_nonpositive_int(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// Gauss hypergeometric ₂F₁(a, b; c; z) with complex parameters and real z ≤ 0.
///
/// Pfaff transformation on [−1, 0]; the 1/(1−z) connection formula below −1.
/// When b − a is an integer the connection formula degenerates; the Pfaff
/// series is then used down to z = −19 and anything beyond is an error.
pub fn hyp2f1_complex(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    if !z.is_finite() || z > 0.0 {
        return Err(MathError::Domain("hyp2f1 needs real z <= 0"));
    }
    if is_nonpositive_int(c) {
        return Err(MathError::Pole(c.re));
    }
    if z == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let one = Complex64::new(1.0, 0.0);
    let d = b - a;
    let degenerate = d.im == 0.0 && d.re == d.re.round();
    let w = z / (z - 1.0);
    if z >= -1.0 || (degenerate && w <= PFAFF_LIMIT) {
        let pre = (-a * (1.0 - z).ln()).exp();
        return Ok(pre * series(a, c - b, c, w)?);
    }
    if degenerate {
        return Err(MathError::Unsupported("integer b - a with z < -19"));
    }
    let w = 1.0 / (1.0 - z);
    let lnw = w.ln();
    let gc = gamma(c)?;
    let t1 = gc * gamma(d)? * rgamma(b) * rgamma(c - a) * (a * lnw).exp() * series(a, c - b, one - d, w)?;
    let t2 = gc * gamma(-d)? * rgamma(a) * rgamma(c - b) * (b * lnw).exp() * series(b, c - a, one + d, w)?;
    Ok(t1 + t2)
}

/// Real-parameter ₂F₁ for z ≤ 0.
pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    let r = hyp2f1_complex(
        Complex64::new(a, 0.0),
        Complex64::new(b, 0.0),
        Complex64::new(c, 0.0),
        z,
    )?;
    Ok(r.re)
}
