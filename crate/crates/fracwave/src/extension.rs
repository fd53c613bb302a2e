//! Route C on gridded data: the Laplace–Fourier DtN map and the energy identity.

use fracwave_core::extension::energy_mode;
use fracwave_core::symbol::{dtn_multiplier, sigma};
use fracwave_core::{Complex64, FractionalOrder};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::{is_nyquist, ScalarField, SpacetimeGrid, SpectralField};
use crate::spectral::{apply_multiplier, dft_forward, dft_inverse, laplace_forward};

/// Bromwich line s = ε + iτ over the time frequencies of a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct LaplaceLine {
    pub eps: f64,
    pub tau_grid: Vec<f64>,
}

impl LaplaceLine {
    pub fn new(grid: &SpacetimeGrid, eps: f64) -> Result<Self> {
        let window = grid.nt as f64 * grid.dt;
        if !(eps > 0.0) || !eps.is_finite() {
            return Err(Error::Param(format!("eps must be positive, got {eps}")));
        }
        if eps * window > 20.0 {
            return Err(Error::Param(format!("eps*T = {} exceeds 20", eps * window)));
        }
        let tau_grid = (0..grid.nt)
            .map(|k| crate::grid::angular_frequency(k, grid.nt, grid.dt))
            .collect();
        Ok(Self { eps, tau_grid })
    }

    /// Default abscissa 4/T.
    pub fn default_eps(grid: &SpacetimeGrid) -> f64 {
        4.0 / (grid.nt as f64 * grid.dt)
    }
}

/// Λ_α f through the closed-form multiplier (|ξ|² + s²)^α on the line Re s = ε.
pub fn dtn_spacetime(f: &ScalarField, order: &FractionalOrder, eps: f64) -> Result<ScalarField> {
    LaplaceLine::new(&f.grid, eps)?;
    let mut spec = laplace_forward(f, eps)?;
    let o = *order;
    apply_multiplier(&mut spec, move |tau, xi| {
        dtn_multiplier(&o, Complex64::new(eps, tau), xi)
    });
    let mut out = dft_inverse(&spec)?;
    let g = &f.grid;
    let row: usize = g.nx.iter().product();
    for it in 0..g.nt {
        let w = (eps * it as f64 * g.dt).exp();
        for v in &mut out.values[it * row..(it + 1) * row] {
            *v *= w;
        }
    }
    Ok(out)
}

/// Polynomial extrapolation to h = 0 through the points (h_i, v_i) (Neville).
pub fn extrapolate_to_zero(points: &[(f64, f64)]) -> f64 {
    let mut p: Vec<f64> = points.iter().map(|x| x.1).collect();
    let n = p.len();
    for k in 1..n {
        for i in 0..n - k {
            let (hi, hk) = (points[i].0, points[i + k].0);
            p[i] = (hk * p[i] - hi * p[i + 1]) / (hk - hi);
        }
    }
    p[0]
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnergyCheck {
    /// weighted bulk energy, extrapolated to ε → 0
    pub lhs: f64,
    /// ∫σ_α|f̂|² dτdξ
    pub rhs: Complex64,
    pub ratio: f64,
    /// (ε, bulk energy) before extrapolation
    pub lhs_by_eps: Vec<(f64, f64)>,
}

/// Bulk energy of the closed-form extension for each ε, compared against the
/// symbol-side quadratic form of f. Modes with |F̃|² below 1e−16 of the peak are skipped.
pub fn energy_check(f: &ScalarField, order: &FractionalOrder, eps_seq: &[f64]) -> Result<EnergyCheck> {
    if order.m != 0 {
        return Err(Error::Math(fracwave_core::MathError::InvalidOrder(order.alpha)));
    }
    order.require_non_half_integer()?;
    if eps_seq.is_empty() {
        return Err(Error::Param("empty eps sequence".into()));
    }
    let g = &f.grid;
    // dτ dξ per mode and the cell volume of each transform
    let dual: f64 = g
        .dims()
        .iter()
        .zip(g.steps())
        .map(|(&n, h)| 2.0 * std::f64::consts::PI / (n as f64 * h))
        .product();
    let weight = dual * g.cell_volume() * g.cell_volume();
    let spec = dft_forward(f);
    let rhs = quadratic_form(&spec, |tau, xi| sigma(order, tau, xi)) * weight;
    let mut lhs_by_eps = Vec::with_capacity(eps_seq.len());
    for &eps in eps_seq {
        LaplaceLine::new(g, eps)?;
        let lspec = laplace_forward(f, eps)?;
        let peak = lspec.coeffs.iter().fold(0.0f64, |m, c| m.max(c.norm_sqr()));
        let row: usize = g.nx.iter().product();
        let nt = g.nt;
        let terms: Result<Vec<Complex64>> = (0..lspec.coeffs.len())
            .into_par_iter()
            .map(|k| {
                let c = lspec.coeffs[k];
                if c.norm_sqr() <= 1e-16 * peak {
                    return Ok(Complex64::new(0.0, 0.0));
                }
                let (tau, xi) = lspec.frequency(k);
                let mode = |t: f64| energy_mode(order, Complex64::new(eps, t), xi, c, 0.05);
                let e = if is_nyquist(k / row, nt) {
                    (mode(tau)? + mode(-tau)?) * 0.5
                } else {
                    mode(tau)?
                };
                Ok(e)
            })
            .collect();
        let total: Complex64 = terms?.iter().sum();
        lhs_by_eps.push((eps, total.re * weight));
    }
    let lhs = extrapolate_to_zero(&lhs_by_eps);
    Ok(EnergyCheck {
        lhs,
        rhs,
        ratio: lhs / rhs.re,
        lhs_by_eps,
    })
}

/// Σ m(τ,ξ)|c|² with the Nyquist mean rule.
fn quadratic_form<M: Fn(f64, f64) -> Complex64>(spec: &SpectralField, m: M) -> Complex64 {
    let row: usize = spec.grid.nx.iter().product();
    let nt = spec.grid.nt;
    spec.coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let (tau, xi) = spec.frequency(k);
            let v = if is_nyquist(k / row, nt) {
                (m(tau, xi) + m(-tau, xi)) * 0.5
            } else {
                m(tau, xi)
            };
            v * c.norm_sqr()
        })
        .sum()
}
