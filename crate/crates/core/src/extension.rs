//! Closed-form solution of the AdS extension problem in Laplace–Fourier
//! variables, and extraction of its weighted Neumann data.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{MathError, Result};
use crate::order::FractionalOrder;
use crate::specfun::{bessel_k, gamma_real};
use crate::symbol::principal_pow;

/// w = √(|ξ|² + s²), principal branch (Re w > 0 whenever Re s > 0).
pub fn decay_rate(s: Complex64, xi_norm: f64) -> Complex64 {
    (s * s + xi_norm * xi_norm).sqrt()
}

fn check_s(s: Complex64) -> Result<()> {
    if !(s.re > 0.0) {
        return Err(MathError::Domain("Laplace variable needs Re s > 0"));
    }
    Ok(())
}

/// Ũ(s, ξ, y) = 2^{1−α}/Γ(α) · (wy)^α K_α(wy) · F̃.
pub fn profile_eval(
    order: &FractionalOrder,
    s: Complex64,
    xi_norm: f64,
    boundary_value: Complex64,
    y: f64,
) -> Result<Complex64> {
    check_s(s)?;
    if !(y > 0.0) {
        return Err(MathError::Domain("profile needs y > 0"));
    }
    let a = order.alpha;
    let z = decay_rate(s, xi_norm) * y;
    let norm = 2.0.powf(1.0 - a) / gamma_real(a)?;
    Ok(boundary_value * z.powf(a) * bessel_k(a, z)? * norm)
}

/// ∂_y Ũ, from d/dz[z^α K_α(z)] = −z^α K_{α−1}(z) = −z^α K_{1−α}(z).
pub fn profile_dy(
    order: &FractionalOrder,
    s: Complex64,
    xi_norm: f64,
    boundary_value: Complex64,
    y: f64,
) -> Result<Complex64> {
    check_s(s)?;
    if !(y > 0.0) {
        return Err(MathError::Domain("profile needs y > 0"));
    }
    let a = order.alpha;
    let w = decay_rate(s, xi_norm);
    let z = w * y;
    let norm = 2.0.powf(1.0 - a) / gamma_real(a)?;
    Ok(-boundary_value * w * z.powf(a) * bessel_k(a - 1.0, z)? * norm)
}

/// Geometric ladder in ρ = y²: ρ_k = ρ₀ ratio^{−k}, with ρ₀ = scaled_start/|w|².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LadderSpec {
    pub levels: usize,
    pub ratio: f64,
    pub scaled_start: f64,
}

impl LadderSpec {
    /// Settings tuned for m = 0 and for m ≥ 1.
    pub fn for_order(order: &FractionalOrder) -> Self {
        if order.m == 0 {
            Self {
                levels: 8,
                ratio: 4.0,
                scaled_start: 0.5,
            }
        } else {
            Self {
                levels: 12,
                ratio: 2.0,
                scaled_start: 4.0,
            }
        }
    }
}

/// Samples of one Laplace–Fourier mode of the extension.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtensionProfile {
    pub order: FractionalOrder,
    pub s: Complex64,
    pub xi_norm: f64,
    pub boundary_value: Complex64,
    /// (y, Ũ(y)) with y decreasing geometrically.
    pub y_samples: Vec<(f64, Complex64)>,
}

impl ExtensionProfile {
    pub fn on_ladder(
        order: &FractionalOrder,
        s: Complex64,
        xi_norm: f64,
        boundary_value: Complex64,
        spec: &LadderSpec,
    ) -> Result<Self> {
        check_s(s)?;
        if spec.levels < 3 || !(spec.ratio > 1.0) || !(spec.scaled_start > 0.0) {
            return Err(MathError::Domain("ladder needs >= 3 levels and ratio > 1"));
        }
        let w2 = decay_rate(s, xi_norm).norm_sqr();
        let rho0 = spec.scaled_start / w2;
        let count = spec.levels + order.m as usize + 1;
        let mut y_samples = Vec::with_capacity(count);
        for k in 0..count {
            let y = (rho0 * spec.ratio.powi(-(k as i32))).sqrt();
            y_samples.push((y, profile_eval(order, s, xi_norm, boundary_value, y)?));
        }
        Ok(Self {
            order: *order,
            s,
            xi_norm,
            boundary_value,
            y_samples,
        })
    }
}

fn divided_difference(xs: &[f64], ys: &[Complex64]) -> Complex64 {
    let mut v: Vec<Complex64> = ys.to_vec();
    let n = xs.len();
    for j in 1..n {
        for i in 0..n - j {
            v[i] = (v[i + 1] - v[i]) / (xs[i + j] - xs[i]);
        }
    }
    v[0]
}

/// Richardson elimination on a geometric ladder (h_{i+1} = h_i / ratio) for
/// errors with the given exponents, in order. Returns the final value and
/// the best estimate one level earlier.
pub fn richardson(values: &[Complex64], ratio: f64, exponents: &[f64]) -> (Complex64, Complex64) {
    let mut t: Vec<Complex64> = values.to_vec();
    let mut prev = t[t.len() - 1];
    for &e in exponents {
        if t.len() < 2 {
            break;
        }
        prev = t[t.len() - 1];
        let f = ratio.powf(e);
        t = (0..t.len() - 1).map(|i| (t[i + 1] * f - t[i]) / (f - 1.0)).collect();
    }
    (t[t.len() - 1], prev)
}

/// Λ̃ Ũ = c_α lim y^{2(1−α₀)} (y⁻¹∂_y)^{m+1} Ũ.
///
/// With ρ = y², (y⁻¹∂_y)^{m+1} = 2^{m+1} ∂_ρ^{m+1}. The derivative is taken as an
/// (m+1)-st divided difference over consecutive ladder nodes, which kills the
/// analytic part of Ũ up to degree m exactly; what is left is extrapolated.
pub fn neumann_extract_profile(profile: &ExtensionProfile) -> Result<Complex64> {
    let order = &profile.order;
    order.require_non_half_integer()?;
    let m = order.m as usize;
    let a0 = order.alpha0;
    let a = order.alpha;
    let samples = &profile.y_samples;
    if samples.len() < m + 4 {
        return Err(MathError::Domain("ladder too short"));
    }
    let rho: Vec<f64> = samples.iter().map(|(y, _)| y * y).collect();
    let ratio = rho[0] / rho[1];
    for k in 1..rho.len() - 1 {
        if ((rho[k] / rho[k + 1]) / ratio - 1.0).abs() > 1e-9 {
            return Err(MathError::Domain("samples are not a geometric ladder"));
        }
    }
    let vals: Vec<Complex64> = samples.iter().map(|(_, u)| *u).collect();
    let levels = rho.len() - m - 1;
    let g: Vec<Complex64> = (0..levels)
        .map(|k| divided_difference(&rho[k..k + m + 2], &vals[k..k + m + 2]) * rho[k].powf(1.0 - a0))
        .collect();
    let unit: Vec<f64> = (0..m + 2).map(|k| ratio.powi(-(k as i32))).collect();
    let unit_vals: Vec<Complex64> = unit.iter().map(|u| Complex64::new(u.powf(a), 0.0)).collect();
    let d_alpha = divided_difference(&unit, &unit_vals);
    let mut exps: Vec<f64> = (0..levels)
        .flat_map(|j| [j as f64 + 1.0 - a0, j as f64 + 1.0])
        .collect();
    exps.sort_by(|x, y| x.partial_cmp(y).unwrap_or(core::cmp::Ordering::Equal));
    exps.dedup_by(|x, y| (*x - *y).abs() < 1e-12);
    exps.truncate(levels - 1);
    let (lim, prev) = richardson(&g, ratio, &exps);
    let spread = (lim - prev).norm() / lim.norm().max(f64::MIN_POSITIVE);
    if !(spread < 1e-2) {
        return Err(MathError::Extrapolation(spread));
    }
    let falling: f64 = (0..=m).map(|j| a - j as f64).product();
    let b = lim / d_alpha;
    Ok(b * (order.c_alpha * 2.0.powi(m as i32 + 1) * falling))
}

/// ∫₀^∞ y^{1−2α}[|∂_yŨ|² + (|ξ|²+s²)|Ũ|²] dy for one mode, α ∈ (0,1).
///
/// Trapezoid in v = ln y with analytic power tails at the small-y end.
pub fn energy_mode(
    order: &FractionalOrder,
    s: Complex64,
    xi_norm: f64,
    boundary_value: Complex64,
    step: f64,
) -> Result<Complex64> {
    if order.m != 0 {
        return Err(MathError::InvalidOrder(order.alpha));
    }
    order.require_non_half_integer()?;
    check_s(s)?;
    if boundary_value == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let a = order.alpha;
    let w = decay_rate(s, xi_norm);
    let w2 = s * s + xi_norm * xi_norm;
    let v_lo = (1e-8 / w.norm()).ln();
    let v_hi = (40.0 / w.re).ln();
    let n = ((v_hi - v_lo) / step).ceil() as usize;
    let h = (v_hi - v_lo) / n as f64;
    let mut grad = 0.0;
    let mut mass = 0.0;
    let (mut grad0, mut mass0) = (0.0, 0.0);
    for i in 0..=n {
        let y = (v_lo + i as f64 * h).exp();
        let u = profile_eval(order, s, xi_norm, boundary_value, y)?;
        let du = profile_dy(order, s, xi_norm, boundary_value, y)?;
        let wt = y.powf(2.0 - 2.0 * a);
        let gi = du.norm_sqr() * wt;
        let mi = u.norm_sqr() * wt;
        let c = if i == 0 || i == n { 0.5 * h } else { h };
        grad += c * gi;
        mass += c * mi;
        if i == 0 {
            grad0 = gi;
            mass0 = mi;
        }
    }
    // below the first node: |∂_yŨ|² y^{2−2α} ∝ y^{2α}, |Ũ|² y^{2−2α} ∝ y^{2−2α}
    grad += grad0 / (2.0 * a);
    mass += mass0 / (2.0 - 2.0 * a);
    Ok(w2 * mass + grad)
}

/// (|ξ|²+s²)^α F̃, the value the extraction is measured against.
pub fn dtn_value(order: &FractionalOrder, s: Complex64, xi_norm: f64, boundary_value: Complex64) -> Complex64 {
    principal_pow(s * s + xi_norm * xi_norm, order.alpha) * boundary_value
}
