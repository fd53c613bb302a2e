//! Product spaces ℝ_t × M through an eigenbasis of M, and the global-AdS
//! scattering multiplier.

use std::f64::consts::PI;

use fracwave_core::ads::{global_ads_multiplier, global_ads_multiplier_printed, GlobalAdsMode};
use fracwave_core::symbol::{dtn_multiplier, sigma};
use fracwave_core::{Complex64, FractionalOrder};

use crate::error::{Error, Result};
use crate::grid::{angular_frequency, is_nyquist, ScalarField};
use crate::spectral::fft_nd;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Manifold {
    /// circle of the given radius, eigenfunctions e^{ijθ}, λ_j = |j|/R
    Circle { radius: f64 },
    /// the sphere S^{n−2} of global AdS_n, λ_j² = j(j+n−3)
    Sphere { n: u32 },
}

/// Eigenvalue ladder λ_j² for mode indices `modes`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenBasis {
    pub manifold: Manifold,
    pub modes: Vec<i64>,
    pub eigenvalues: Vec<f64>,
}

impl EigenBasis {
    /// Circle modes j = 0, 1, −1, 2, −2, … in DFT order for `count` points.
    pub fn circle(radius: f64, count: usize) -> Result<Self> {
        if !(radius > 0.0) || count == 0 {
            return Err(Error::Param(
                "circle needs positive radius and at least one mode".into(),
            ));
        }
        let modes: Vec<i64> = (0..count)
            .map(|k| {
                if k <= count / 2 {
                    k as i64
                } else {
                    k as i64 - count as i64
                }
            })
            .collect();
        let eigenvalues = modes.iter().map(|&j| (j as f64 / radius).powi(2)).collect();
        Ok(Self {
            manifold: Manifold::Circle { radius },
            modes,
            eigenvalues,
        })
    }

    pub fn sphere(n: u32, count: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Param("sphere harmonics need n >= 3".into()));
        }
        let modes: Vec<i64> = (0..count as i64).collect();
        let eigenvalues = modes.iter().map(|&j| (j * (j + n as i64 - 3)) as f64).collect();
        Ok(Self {
            manifold: Manifold::Sphere { n },
            modes,
            eigenvalues,
        })
    }

    pub fn lambda(&self, k: usize) -> f64 {
        self.eigenvalues[k].sqrt()
    }
}

/// Complex time series of one mode coefficient on a uniform time grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeSeries {
    pub mode: i64,
    pub lambda: f64,
    pub values: Vec<Complex64>,
}

/// Applies σ_α(τ, λ_j) to each mode series (or the Laplace-side multiplier
/// (λ_j² + s²)^α on Re s = ε when `eps` is given). `dt` is the time step.
pub fn product_dtn_coeffs(
    modes: &[ModeSeries],
    order: &FractionalOrder,
    dt: f64,
    eps: Option<f64>,
) -> Result<Vec<ModeSeries>> {
    if !(dt > 0.0) {
        return Err(Error::Param("time step must be positive".into()));
    }
    if let Some(e) = eps {
        if !(e > 0.0) {
            return Err(Error::Param(format!("eps must be positive, got {e}")));
        }
    }
    modes
        .iter()
        .map(|m| {
            let nt = m.values.len();
            if nt < 4 {
                return Err(Error::Shape("mode series needs at least 4 samples".into()));
            }
            let damp = |i: usize, sign: f64| eps.map_or(1.0, |e| (sign * e * i as f64 * dt).exp());
            let mut data: Vec<Complex64> = m.values.iter().enumerate().map(|(i, v)| v * damp(i, -1.0)).collect();
            fft_nd(&mut data, &[nt], false);
            let mult = |tau: f64| match eps {
                None => sigma(order, tau, m.lambda),
                Some(e) => dtn_multiplier(order, Complex64::new(e, tau), m.lambda),
            };
            for (k, c) in data.iter_mut().enumerate() {
                let tau = angular_frequency(k, nt, dt);
                *c *= if is_nyquist(k, nt) {
                    (mult(tau) + mult(-tau)) * 0.5
                } else {
                    mult(tau)
                };
            }
            fft_nd(&mut data, &[nt], true);
            let values = data.iter().enumerate().map(|(i, v)| v * damp(i, 1.0)).collect();
            Ok(ModeSeries {
                mode: m.mode,
                lambda: m.lambda,
                values,
            })
        })
        .collect()
}

/// Projects ℝ × S¹ data (one spatial axis of circumference 2πR) onto the circle
/// eigenbasis by explicit inner products with e^{−ijθ}.
pub fn circle_project(f: &ScalarField) -> Result<(EigenBasis, Vec<ModeSeries>)> {
    if f.grid.nx.len() != 1 {
        return Err(Error::Shape("circle data needs exactly one spatial axis".into()));
    }
    let (nt, nx) = (f.grid.nt, f.grid.nx[0]);
    let radius = nx as f64 * f.grid.dx[0] / (2.0 * PI);
    let basis = EigenBasis::circle(radius, nx)?;
    let series = basis
        .modes
        .iter()
        .enumerate()
        .map(|(k, &j)| {
            let values = (0..nt)
                .map(|it| {
                    let row = &f.values[it * nx..(it + 1) * nx];
                    row.iter()
                        .enumerate()
                        .map(|(p, &v)| v * twiddle(-j * p as i64, nx))
                        .sum::<Complex64>()
                        / nx as f64
                })
                .collect();
            ModeSeries {
                mode: j,
                lambda: basis.lambda(k),
                values,
            }
        })
        .collect();
    Ok((basis, series))
}

/// e^{2πik/n} with the argument reduced mod n.
fn twiddle(k: i64, n: usize) -> Complex64 {
    let r = k.rem_euclid(n as i64) as f64;
    Complex64::from_polar(1.0, 2.0 * PI * r / n as f64)
}

/// Inverse of [`circle_project`]: Σ_j f_j(t) e^{ijθ}, real part.
pub fn circle_synthesize(series: &[ModeSeries], like: &ScalarField) -> Result<ScalarField> {
    let (nt, nx) = (like.grid.nt, like.grid.nx[0]);
    let mut values = vec![0.0; nt * nx];
    for it in 0..nt {
        for p in 0..nx {
            let mut acc = Complex64::new(0.0, 0.0);
            for m in series {
                acc += m.values[it] * twiddle(m.mode * p as i64, nx);
            }
            values[it * nx + p] = acc.re;
        }
    }
    ScalarField::new(like.grid.clone(), values)
}

/// □^α on ℝ × S¹ mode by mode.
pub fn circle_box_alpha(f: &ScalarField, order: &FractionalOrder) -> Result<ScalarField> {
    let (_, series) = circle_project(f)?;
    let out = product_dtn_coeffs(&series, order, f.grid.dt, None)?;
    circle_synthesize(&out, f)
}

/// One row of the global-AdS frequency table.
#[derive(Debug, Clone, PartialEq)]
pub struct AdsRow {
    pub s: Complex64,
    pub multiplier: Complex64,
    pub printed: Complex64,
    pub sigma: Complex64,
    pub ratio: Complex64,
}

/// Multiplier, printed multiplier, σ_α(τ, λ) and their ratio along s = ε + iτ.
pub fn global_ads_table(mode: &GlobalAdsMode, eps: f64, taus: &[f64]) -> Result<Vec<AdsRow>> {
    taus.iter()
        .map(|&tau| {
            let s = Complex64::new(eps, tau);
            let multiplier = global_ads_multiplier(mode, s)?;
            let printed = global_ads_multiplier_printed(mode, s)?;
            let sg = sigma(&mode.order, tau, mode.lambda);
            Ok(AdsRow {
                s,
                multiplier,
                printed,
                sigma: sg,
                ratio: multiplier / sg,
            })
        })
        .collect()
}

/// max |ratio − ratio_last|/|ratio_last| over the rows whose |τ| lies in the
/// last decade below the final row.
pub fn flatness(rows: &[AdsRow]) -> f64 {
    let Some(last) = rows.last() else { return 0.0 };
    let floor = last.s.im.abs() / 10.0;
    rows.iter()
        .filter(|r| r.s.im.abs() >= floor)
        .map(|r| (r.ratio - last.ratio).norm() / last.ratio.norm())
        .fold(0.0, f64::max)
}
