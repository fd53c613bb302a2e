//! Route B: □^α as a regularized hypersingular integral, the n = 2 null-difference
//! kernel, and the hyperbolic Riesz potential.

use std::f64::consts::PI;

use fracwave_core::qcalc::QScheme;
use fracwave_core::specfun::{gamma_real, rgamma};
use fracwave_core::{Complex64, FractionalOrder};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::ScalarField;
use crate::sampler::{build_sampler, FieldSampler, SamplerKind};

/// Log-mapped trapezoid parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    /// step in u = ln s
    pub hu: f64,
    /// step in v = ln|y| (or ln ρ for the Riesz potential)
    pub hv: f64,
    pub s_min: f64,
    pub s_max: f64,
    /// |y| runs over [r_rel·r_max, r_max], r_max set by the support of f
    pub r_rel: f64,
    /// angular nodes on the unit circle of y when n = 3, and the hyperbolic
    /// angle node count of the Riesz potential
    pub angular: usize,
    pub sampler: SamplerKind,
    /// Indicator threshold (relative to max|f|) above which a value is flagged.
    pub tolerance: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            hu: 0.1,
            hv: 0.02,
            s_min: 1e-4,
            s_max: 1e7,
            r_rel: 1e-5,
            angular: 400,
            sampler: SamplerKind::Spline(4),
            tolerance: 1e-3,
        }
    }
}

impl QuadratureSpec {
    fn validate(&self) -> Result<()> {
        let finite = [self.hu, self.hv, self.s_min, self.s_max, self.r_rel]
            .iter()
            .all(|v| v.is_finite() && *v > 0.0);
        if !finite || self.s_min >= self.s_max || self.r_rel >= 1.0 {
            return Err(Error::Param(
                "quadrature bounds must be positive, finite and ordered".into(),
            ));
        }
        let nu = ((self.s_max / self.s_min).ln() / self.hu) as usize;
        let nv = (-self.r_rel.ln() / self.hv) as usize;
        if nu < 16 || nv < 16 || self.angular < 16 {
            return Err(Error::Param("quadrature needs at least 16 nodes per direction".into()));
        }
        Ok(())
    }

    /// Same bounds, every step doubled.
    pub fn half_density(&self) -> Self {
        Self {
            hu: 2.0 * self.hu,
            hv: 2.0 * self.hv,
            angular: self.angular / 2,
            ..*self
        }
    }
}

/// A quadrature value together with its half-density indicator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadValue {
    pub value: f64,
    pub indicator: f64,
    /// indicator ≤ tolerance·max|f|
    pub converged: bool,
}

/// C_{n,α} = 2^{1−2α} π^{1−n/2} / (Γ(α) Γ(α+1−n/2)); zero at the Gamma poles.
pub fn riesz_constant(n: u32, alpha: f64) -> f64 {
    let r = rgamma(Complex64::new(alpha, 0.0)) * rgamma(Complex64::new(alpha + 1.0 - n as f64 / 2.0, 0.0));
    2f64.powf(1.0 - 2.0 * alpha) * PI.powf(1.0 - n as f64 / 2.0) * r.re
}

struct Trapezoid {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

fn log_nodes(lo: f64, hi: f64, h: f64) -> Trapezoid {
    let n = ((hi - lo) / h).ceil().max(1.0) as usize;
    let step = (hi - lo) / n as f64;
    let nodes = (0..=n).map(|i| lo + i as f64 * step).collect();
    let mut weights = vec![step; n + 1];
    weights[0] *= 0.5;
    weights[n] *= 0.5;
    Trapezoid { nodes, weights }
}

/// Unit directions of y with their weights: {±1} in one space dimension, a
/// trapezoid on the circle in two.
fn directions(dim: usize, count: usize) -> Vec<([f64; 2], f64)> {
    if dim == 1 {
        return vec![([1.0, 0.0], 1.0), ([-1.0, 0.0], 1.0)];
    }
    let w = 2.0 * PI / count as f64;
    (0..count)
        .map(|k| {
            let th = w * k as f64;
            ([th.cos(), th.sin()], w)
        })
        .collect()
}

fn check_points(f: &ScalarField, points: &[Vec<f64>]) -> Result<()> {
    let rank = f.grid.nx.len() + 1;
    if let Some(p) = points.iter().find(|p| p.len() != rank) {
        return Err(Error::Shape(format!(
            "probe has {} coordinates, grid has {rank}",
            p.len()
        )));
    }
    Ok(())
}

fn one_point(sampler: &dyn FieldSampler, scheme: &QScheme, quad: &QuadratureSpec, t0: f64, p: &[f64]) -> f64 {
    let n = scheme.n;
    let nf = n as f64;
    let alpha = scheme.alpha;
    let (t, x) = (p[0], &p[1..]);
    let r_max = (t - t0).max(0.0) + 1.0;
    let u = log_nodes(quad.s_min.ln(), quad.s_max.ln(), quad.hu);
    let v = log_nodes((r_max * quad.r_rel).ln(), r_max.ln(), quad.hv);
    let dirs = directions(x.len(), quad.angular);
    let (nu, nv) = (u.nodes.len(), v.nodes.len());
    let mut grid = vec![0.0; nu * nv];
    let f = |tt: f64, xx: &[f64]| sampler.sample(tt, xx);
    for (iu, &uu) in u.nodes.iter().enumerate() {
        let s = uu.exp();
        let s_pow = s.powf(1.0 - nf / 2.0 - alpha);
        for (iv, &vv) in v.nodes.iter().enumerate() {
            let r = vv.exp();
            let mut d = 0.0;
            for (dir, w) in &dirs {
                let y = [r * dir[0], r * dir[1]];
                d += w * scheme.difference(f, t, x, s, &y[..x.len()]);
            }
            // ds d|y| |y|^{n−2} → s·r^{n−1} du dv
            grid[iu * nv + iv] = d * s_pow * r.powf(-2.0 * alpha);
        }
    }
    let ps = scheme.l_star as f64 + 1.0 - nf / 2.0 - alpha;
    let pu = nf - 1.0;
    let pr = scheme.l as f64 - 2.0 * alpha;
    let at = |i: usize, j: usize| grid[i * nv + j];
    let mut total = 0.0;
    for i in 0..nu {
        for j in 0..nv {
            total += u.weights[i] * v.weights[j] * at(i, j);
        }
    }
    // power-law tails beyond the small-s, large-s and small-|y| edges
    let row = |i: usize| (0..nv).map(|j| v.weights[j] * at(i, j)).sum::<f64>();
    let col0: f64 = (0..nu).map(|i| u.weights[i] * at(i, 0)).sum();
    total += row(0) / ps + row(nu - 1) / pu + col0 / pr;
    total += at(0, 0) / (ps * pr) + at(nu - 1, 0) / (pu * pr);
    riesz_constant(n, -alpha) * total
}

/// □^α f at the probe points (each `[t, x…]`) by the q-difference integral.
pub fn box_alpha_integral(
    f: &ScalarField,
    order: &FractionalOrder,
    scheme: &QScheme,
    quad: &QuadratureSpec,
    points: &[Vec<f64>],
) -> Result<Vec<QuadValue>> {
    order.require_non_half_integer()?;
    quad.validate()?;
    check_points(f, points)?;
    let n = f.grid.n();
    if scheme.n != n || (scheme.alpha - order.alpha).abs() > 0.0 {
        return Err(Error::Param(
            "scheme was built for a different order or dimension".into(),
        ));
    }
    order.require_below_half_dim(n)?;
    let sampler = build_sampler(f, quad.sampler);
    let coarse = quad.half_density();
    let scale = f.max_abs();
    let t0 = f.grid.t0;
    Ok(points
        .par_iter()
        .map(|p| {
            let value = one_point(sampler.as_ref(), scheme, quad, t0, p);
            let half = one_point(sampler.as_ref(), scheme, &coarse, t0, p);
            let indicator = (value - half).abs();
            QuadValue {
                value,
                indicator,
                converged: indicator <= quad.tolerance * scale,
            }
        })
        .collect())
}

/// Fails if any value is flagged.
pub fn require_converged(values: &[QuadValue]) -> Result<Vec<f64>> {
    match values.iter().find(|v| !v.converged) {
        Some(v) => Err(Error::Quadrature(v.indicator)),
        None => Ok(values.iter().map(|v| v.value).collect()),
    }
}

/// Null-kernel quadrature parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NullKernelSpec {
    pub h: f64,
    pub p_min: f64,
    pub sampler: SamplerKind,
}

impl Default for NullKernelSpec {
    fn default() -> Self {
        Self {
            h: 0.05,
            p_min: 1e-4,
            sampler: SamplerKind::Spline(4),
        }
    }
}

/// Prefactor that makes the null-kernel integral equal to □^α: 2^{1+2α}/Γ(−α)².
pub fn kernel2_constant(alpha: f64) -> Result<f64> {
    let g = gamma_real(-alpha)?;
    Ok(2f64.powf(1.0 + 2.0 * alpha) / (g * g))
}

/// The printed prefactor C_{2,−α}/2^{1+2α}; see [`kernel2_constant`].
pub fn kernel2_printed_constant(alpha: f64) -> f64 {
    riesz_constant(2, -alpha) / 2f64.powf(1.0 + 2.0 * alpha)
}

/// T_{s,y} f(t,x) = f(t,x) − f(t−p, x−p) − f(t−q, x+q) + f(t−p−q, x−p+q) with
/// p = (s+y)/2, q = (s−y)/2.
pub fn null_difference<F: Fn(f64, f64) -> f64>(f: F, t: f64, x: f64, s: f64, y: f64) -> f64 {
    let p = 0.5 * (s + y);
    let q = 0.5 * (s - y);
    f(t, x) - f(t - p, x - p) - f(t - q, x + q) + f(t - p - q, x - p + q)
}

fn kernel2_point(sampler: &dyn FieldSampler, alpha: f64, spec: &NullKernelSpec, t0: f64, t: f64, x: f64) -> f64 {
    let p_max = (t - t0).max(0.0) + 1.0;
    let g = log_nodes(spec.p_min.ln(), p_max.ln(), spec.h);
    let n = g.nodes.len();
    let pts: Vec<f64> = g.nodes.iter().map(|u| u.exp()).collect();
    let f = |tt: f64, xx: f64| sampler.sample(tt, &[xx]);
    let f0 = f(t, x);
    let fp: Vec<f64> = pts.iter().map(|&p| f(t - p, x - p)).collect();
    let fq: Vec<f64> = pts.iter().map(|&q| f(t - q, x + q)).collect();
    let mut grid = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let (p, q) = (pts[i], pts[j]);
            let tv = f0 - fp[i] - fq[j] + f(t - p - q, x - p + q);
            // ds dy = 2 dp dq, s² − y² = 4pq, dp dq = pq du dv
            grid[i * n + j] = 2.0 * tv / (4.0 * p * q).powf(1.0 + alpha) * p * q;
        }
    }
    let at = |i: usize, j: usize| grid[i * n + j];
    let w = &g.weights;
    let mut total = 0.0;
    for i in 0..n {
        for j in 0..n {
            total += w[i] * w[j] * at(i, j);
        }
    }
    let a = 1.0 - alpha;
    let b = alpha;
    let row = |i: usize| (0..n).map(|j| w[j] * at(i, j)).sum::<f64>();
    let col = |j: usize| (0..n).map(|i| w[i] * at(i, j)).sum::<f64>();
    total += (row(0) + col(0)) / a + at(0, 0) / (a * a);
    total += (row(n - 1) + col(n - 1)) / b + at(n - 1, n - 1) / (b * b);
    total += (at(0, n - 1) + at(n - 1, 0)) / (a * b);
    total
}

/// □^α f for n = 2, α ∈ (0,1), through the null second difference T_{s,y}.
/// Returns the values with the corrected prefactor.
pub fn box_alpha_kernel2(
    f: &ScalarField,
    order: &FractionalOrder,
    spec: &NullKernelSpec,
    points: &[Vec<f64>],
) -> Result<Vec<f64>> {
    if f.grid.n() != 2 {
        return Err(Error::Param("the null kernel is only defined for n = 2".into()));
    }
    if order.m != 0 {
        return Err(Error::Math(fracwave_core::MathError::InvalidOrder(order.alpha)));
    }
    if !(spec.h > 0.0) || !(spec.p_min > 0.0) {
        return Err(Error::Param("null-kernel step and lower bound must be positive".into()));
    }
    check_points(f, points)?;
    let c = kernel2_constant(order.alpha)?;
    let sampler = build_sampler(f, spec.sampler);
    let t0 = f.grid.t0;
    Ok(points
        .par_iter()
        .map(|p| c * kernel2_point(sampler.as_ref(), order.alpha, spec, t0, p[0], p[1]))
        .collect())
}

fn riesz_point(sampler: &dyn FieldSampler, n: u32, alpha: f64, quad: &QuadratureSpec, t0: f64, p: &[f64]) -> f64 {
    let (t, x) = (p[0], &p[1..]);
    let big_r = t - t0;
    if big_r <= 0.0 {
        return 0.0;
    }
    let v = log_nodes((big_r * 1e-8).ln(), big_r.ln(), quad.hv);
    let ne = quad.angular;
    let dirs = directions(x.len(), quad.angular);
    let mut vals = Vec::with_capacity(v.nodes.len());
    let mut pt = [0.0; 2];
    for &vv in &v.nodes {
        let rho = vv.exp();
        let h_max = (big_r / rho).max(1.0).acosh();
        let mut acc = 0.0;
        if n == 2 {
            // η ∈ [−H, H] covers both signs of y
            let de = 2.0 * h_max / (ne - 1) as f64;
            for k in 0..ne {
                let e = -h_max + k as f64 * de;
                let w = if k == 0 || k == ne - 1 { 0.5 * de } else { de };
                pt[0] = x[0] - rho * e.sinh();
                acc += w * sampler.sample(t - rho * e.cosh(), &pt[..1]);
            }
        } else {
            let de = h_max / (ne - 1) as f64;
            for k in 0..ne {
                let e = k as f64 * de;
                let w = if k == 0 || k == ne - 1 { 0.5 * de } else { de };
                let (sh, ch) = (e.sinh(), e.cosh());
                for (d, wd) in &dirs {
                    pt[0] = x[0] - rho * sh * d[0];
                    pt[1] = x[1] - rho * sh * d[1];
                    acc += w * wd * sh * sampler.sample(t - rho * ch, &pt[..2]);
                }
            }
        }
        // kernel ρ^{2α−n} times Jacobian ρ^{n−1} (sinh η for n = 3) in dρ = ρ dv
        vals.push(rho.powf(2.0 * alpha) * acc);
    }
    let total: f64 = vals.iter().zip(&v.weights).map(|(a, w)| a * w).sum();
    // the angular range grows like (R/ρ)^{n−2} as ρ → 0
    let tail = vals[0] / (2.0 * alpha + 2.0 - n as f64);
    riesz_constant(n, alpha) * (total + tail)
}

/// I_α f = C_{n,α} ∫_{K⁺⁺} (s²−|y|²)^{α−n/2} f(t−s, x−y) ds dy at the probe points.
pub fn riesz_potential(f: &ScalarField, alpha: f64, quad: &QuadratureSpec, points: &[Vec<f64>]) -> Result<Vec<f64>> {
    let n = f.grid.n();
    if !(alpha > n as f64 / 2.0 - 1.0) || !alpha.is_finite() {
        return Err(Error::Param(format!(
            "riesz potential needs alpha > n/2 - 1, got {alpha}"
        )));
    }
    quad.validate()?;
    check_points(f, points)?;
    let sampler = build_sampler(f, quad.sampler);
    let t0 = f.grid.t0;
    Ok(points
        .par_iter()
        .map(|p| riesz_point(sampler.as_ref(), n, alpha, quad, t0, p))
        .collect())
}

/// I_α f on every grid point.
pub fn riesz_potential_field(f: &ScalarField, alpha: f64, quad: &QuadratureSpec) -> Result<ScalarField> {
    let points: Vec<Vec<f64>> = (0..f.grid.len()).map(|i| f.grid.coords(i)).collect();
    ScalarField::new(f.grid.clone(), riesz_potential(f, alpha, quad, &points)?)
}
