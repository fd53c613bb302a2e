//! Global anti-de Sitter: radial hypergeometric profile and its scattering
//! multiplier.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{MathError, Result};
use crate::extension::richardson;
use crate::order::FractionalOrder;
use crate::specfun::{hyp2f1_complex, ln_gamma};
use crate::symbol::sigma;

/// One angular mode with eigenvalue λ² on the sphere of spacetime dimension n.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GlobalAdsMode {
    pub n: u32,
    pub order: FractionalOrder,
    pub lambda: f64,
    /// ½(2 − n + √(4λ² + (n−2)²))
    pub beta: f64,
}

impl GlobalAdsMode {
    pub fn new(n: u32, order: FractionalOrder, lambda: f64) -> Result<Self> {
        if n < 2 {
            return Err(MathError::Domain("global AdS needs n >= 2"));
        }
        if !(lambda >= 0.0) || !lambda.is_finite() {
            return Err(MathError::Domain("lambda must be finite and >= 0"));
        }
        order.require_non_half_integer()?;
        let nf = n as f64;
        let beta = 0.5 * (2.0 - nf + (4.0 * lambda * lambda + (nf - 2.0) * (nf - 2.0)).sqrt());
        Ok(Self { n, order, lambda, beta })
    }

    /// Mode with λ² = j(j + n − 3), the sphere eigenvalues in this convention.
    pub fn harmonic(n: u32, order: FractionalOrder, j: u32) -> Result<Self> {
        let lam2 = j as f64 * (j as f64 + n as f64 - 3.0);
        Self::new(n, order, lam2.max(0.0).sqrt())
    }

    /// Hypergeometric parameters (a, b, c) of the radial profile at s.
    pub fn hyp_params(&self, s: Complex64) -> (Complex64, Complex64, Complex64) {
        let i = Complex64::i();
        let h = self.n as f64 / 2.0;
        let a = (-i * s + self.beta + h - self.order.alpha) * 0.5;
        let b = (-i * s + self.beta + h + self.order.alpha) * 0.5;
        (a, b, Complex64::new(self.beta + h, 0.0))
    }
}

fn gamma_ratio(mode: &GlobalAdsMode, s: Complex64) -> Result<Complex64> {
    let (a, b, c) = mode.hyp_params(s);
    for z in [a, c - b] {
        if z.im == 0.0 && z.re <= 0.0 && (z.re - z.re.round()).abs() < 1e-8 {
            return Err(MathError::Pole(z.re));
        }
    }
    let al = Complex64::new(mode.order.alpha, 0.0);
    let lg = ln_gamma(-al)? + ln_gamma(b)? + ln_gamma(c - a)? - ln_gamma(al)? - ln_gamma(a)? - ln_gamma(c - b)?;
    Ok(lg.exp())
}

/// Λ_α F_j(s)/F_j(s) = −2α Γ(−α)Γ(b)Γ(c−a)/(Γ(α)Γ(a)Γ(c−b)), the limit of the
/// weighted radial Neumann quotient.
pub fn global_ads_multiplier(mode: &GlobalAdsMode, s: Complex64) -> Result<Complex64> {
    Ok(gamma_ratio(mode, s)? * (-2.0 * mode.order.alpha))
}

/// The multiplier with the trailing factor (β − is + n/2 − α) in place of −2α.
/// Kept for comparison; it does not match the radial limit.
pub fn global_ads_multiplier_printed(mode: &GlobalAdsMode, s: Complex64) -> Result<Complex64> {
    let (a, _, _) = mode.hyp_params(s);
    Ok(gamma_ratio(mode, s)? * (a * 2.0))
}

/// Φ, Φ', Φ'' of Φ(r) = c r^β (1+r²)^{−is/2} ₂F₁(a, b; c; −r²).
pub fn radial_profile(mode: &GlobalAdsMode, s: Complex64, r: f64, norm: Complex64) -> Result<[Complex64; 3]> {
    if !(r > 0.0) {
        return Err(MathError::Domain("radial profile needs r > 0"));
    }
    let (a, b, c) = mode.hyp_params(s);
    let z = -r * r;
    let f0 = hyp2f1_complex(a, b, c, z)?;
    let f1 = hyp2f1_complex(a + 1.0, b + 1.0, c + 1.0, z)? * (a * b / c);
    let f2 = hyp2f1_complex(a + 2.0, b + 2.0, c + 2.0, z)? * (a * b * (a + 1.0) * (b + 1.0) / (c * (c + 1.0)));
    // F(r) = ₂F₁(−r²): F' = −2r f1, F'' = −2 f1 + 4r² f2
    let g0 = f0;
    let g1 = f1 * (-2.0 * r);
    let g2 = f1 * (-2.0) + f2 * (4.0 * r * r);
    let i = Complex64::i();
    let one_r2 = 1.0 + r * r;
    let e = -i * s * 0.5;
    // P(r) = r^β (1+r²)^{e}
    let p0 = (e * one_r2.ln() + mode.beta * r.ln()).exp();
    let l1 = e * (2.0 * r / one_r2) + mode.beta / r;
    let l1p = e * (2.0 * (1.0 - r * r) / (one_r2 * one_r2)) - mode.beta / (r * r);
    let p1 = p0 * l1;
    let p2 = p0 * (l1 * l1 + l1p);
    Ok([
        norm * p0 * g0,
        norm * (p1 * g0 + p0 * g1),
        norm * (p2 * g0 + p1 * g1 * 2.0 + p0 * g2),
    ])
}

/// (1+r²)Φ'' + ((n−1)/r + (n+1)r)Φ' − (s²/(1+r²) + λ²/r² + α² − n²/4)Φ.
pub fn radial_ode_residual(mode: &GlobalAdsMode, s: Complex64, r: f64, phi: [Complex64; 3]) -> Complex64 {
    let n = mode.n as f64;
    let al = mode.order.alpha;
    let pot = s * s / (1.0 + r * r) + mode.lambda * mode.lambda / (r * r) + al * al - n * n / 4.0;
    phi[2] * (1.0 + r * r) + phi[1] * ((n - 1.0) / r + (n + 1.0) * r) - phi[0] * pot
}

/// Ladder estimate of lim r^{1+2α}∂_r(r^{n/2−α}Φ) / lim r^{n/2−α}Φ over
/// r_k = r0·ratio^k. Both limits are extrapolated separately. Needs α < 1.
pub fn radial_neumann_ladder(
    mode: &GlobalAdsMode,
    s: Complex64,
    r0: f64,
    ratio: f64,
    levels: usize,
) -> Result<Complex64> {
    let al = mode.order.alpha;
    if al >= 1.0 {
        return Err(MathError::InvalidOrder(al));
    }
    if levels < 2 || !(ratio > 1.0) || !(r0 > 0.0) {
        return Err(MathError::Domain("ladder needs >= 2 levels and ratio > 1"));
    }
    let h = mode.n as f64 / 2.0 - al;
    let mut num = Vec::with_capacity(levels);
    let mut den = Vec::with_capacity(levels);
    for k in 0..levels {
        let r = r0 * ratio.powi(k as i32);
        let [p0, p1, _] = radial_profile(mode, s, r, Complex64::new(1.0, 0.0))?;
        let rh = r.powf(h);
        let psi = p0 * rh;
        let dpsi = p1 * rh + p0 * (h * rh / r);
        num.push(dpsi * r.powf(1.0 + 2.0 * al));
        den.push(psi);
    }
    let mut e_num: Vec<f64> = Vec::new();
    let mut e_den: Vec<f64> = Vec::new();
    for j in 0..levels {
        let jf = j as f64;
        e_num.push(2.0 - 2.0 * al + 2.0 * jf);
        e_num.push(2.0 + 2.0 * jf);
        e_den.push(2.0 * al + 2.0 * jf);
        e_den.push(2.0 + 2.0 * jf);
    }
    for v in [&mut e_num, &mut e_den] {
        v.sort_by(|x, y| x.partial_cmp(y).unwrap_or(core::cmp::Ordering::Equal));
        v.dedup_by(|x, y| (*x - *y).abs() < 1e-12);
        v.truncate(levels - 1);
    }
    // values are indexed by increasing r, i.e. decreasing 1/r
    let (n_lim, _) = richardson(&num, ratio, &e_num);
    let (d_lim, _) = richardson(&den, ratio, &e_den);
    Ok(n_lim / d_lim)
}

/// Multiplier divided by σ_α(τ, λ) along s = ε + iτ.
pub fn principal_symbol_ratio(mode: &GlobalAdsMode, eps: f64, taus: &[f64]) -> Result<Vec<Complex64>> {
    taus.iter()
        .map(|&t| {
            let m = global_ads_multiplier(mode, Complex64::new(eps, t))?;
            Ok(m / sigma(&mode.order, t, mode.lambda))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mode(n: u32, a: f64, lam: f64) -> GlobalAdsMode {
        GlobalAdsMode::new(n, FractionalOrder::new(a).unwrap(), lam).unwrap()
    }

    #[test]
    fn beta_values() {
        assert_eq!(mode(3, 0.4, 0.0).beta, 0.0);
        assert!((mode(2, 0.4, 2.5).beta - 2.5).abs() < 1e-15);
        assert!(mode(4, 0.4, 1.0).beta >= 0.0);
    }

    #[test]
    fn conjugate_symmetry() {
        let m = mode(3, 0.4, 3.0);
        let s = Complex64::new(0.3, 2.7);
        let a = global_ads_multiplier(&m, s.conj()).unwrap();
        let b = global_ads_multiplier(&m, s).unwrap().conj();
        assert!((a - b).norm() < 1e-12 * b.norm());
    }

    #[test]
    fn small_r_behaviour() {
        let m = mode(3, 0.4, 3.0);
        let s = Complex64::new(0.1, 2.0);
        let r: f64 = 1e-5;
        let [p, _, _] = radial_profile(&m, s, r, Complex64::new(1.0, 0.0)).unwrap();
        assert!((p / r.powf(m.beta) - 1.0).norm() < 1e-8);
    }
}
