//! Discrete Fourier and Laplace transforms on spacetime grids.
//!
//! Convention: coefficients are the unnormalized sums c(k) = Σ f e^{−i(τ_k t + ξ_k·x)}
//! taken from the grid origin; the inverse divides by the cell count. Parseval then
//! reads Σ|f|² = Σ|c|²/N.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

use fracwave_core::Complex64;
use rayon::prelude::*;
use rustfft::{Fft, FftDirection, FftPlanner};

use crate::error::{Error, Result};
use crate::grid::{is_nyquist, ScalarField, SpacetimeGrid, SpectralField};

thread_local! {
    static PLANS: RefCell<HashMap<(usize, bool), Arc<dyn Fft<f64>>>> = RefCell::new(HashMap::new());
}

fn plan(n: usize, inverse: bool) -> Arc<dyn Fft<f64>> {
    PLANS.with(|p| {
        p.borrow_mut()
            .entry((n, inverse))
            .or_insert_with(|| {
                let dir = if inverse {
                    FftDirection::Inverse
                } else {
                    FftDirection::Forward
                };
                FftPlanner::new().plan_fft(n, dir)
            })
            .clone()
    })
}

/// In-place N-d transform of a row-major array.
pub fn fft_nd(data: &mut [Complex64], dims: &[usize], inverse: bool) {
    let total: usize = dims.iter().product();
    assert_eq!(total, data.len());
    for axis in 0..dims.len() {
        let n = dims[axis];
        let stride: usize = dims[axis + 1..].iter().product();
        if stride == 1 {
            data.par_chunks_mut(n).for_each(|line| plan(n, inverse).process(line));
            continue;
        }
        // gather strided lines per outer block
        data.par_chunks_mut(n * stride).for_each(|block| {
            let f = plan(n, inverse);
            let mut line = vec![Complex64::new(0.0, 0.0); n];
            for s in 0..stride {
                for k in 0..n {
                    line[k] = block[k * stride + s];
                }
                f.process(&mut line);
                for k in 0..n {
                    block[k * stride + s] = line[k];
                }
            }
        });
    }
    if inverse {
        let inv = 1.0 / total as f64;
        data.par_iter_mut().for_each(|c| *c *= inv);
    }
}

pub fn dft_forward(field: &ScalarField) -> SpectralField {
    let mut data: Vec<Complex64> = field.values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    fft_nd(&mut data, &field.grid.dims(), false);
    SpectralField {
        grid: field.grid.clone(),
        coeffs: data,
    }
}

/// Inverse transform of a Hermitian spectrum to a real field. Imaginary
/// residue above 1e−10 of the output norm is an error.
pub fn dft_inverse(spec: &SpectralField) -> Result<ScalarField> {
    let mut data = spec.coeffs.clone();
    fft_nd(&mut data, &spec.grid.dims(), true);
    real_part(spec.grid.clone(), &data)
}

/// Inverse transform without the realness requirement.
pub fn dft_inverse_complex(spec: &SpectralField) -> Vec<Complex64> {
    let mut data = spec.coeffs.clone();
    fft_nd(&mut data, &spec.grid.dims(), true);
    data
}

pub(crate) fn real_part(grid: SpacetimeGrid, data: &[Complex64]) -> Result<ScalarField> {
    let re: f64 = data.iter().map(|c| c.re * c.re).sum::<f64>().sqrt();
    let im: f64 = data.iter().map(|c| c.im * c.im).sum::<f64>().sqrt();
    if im > 1e-10 * re.max(f64::MIN_POSITIVE) {
        return Err(Error::NonHermitian(im / re.max(f64::MIN_POSITIVE)));
    }
    ScalarField::new(grid, data.iter().map(|c| c.re).collect())
}

/// Multiplies the spectrum by m(τ, |ξ|). On the time-Nyquist row, where +τ and −τ
/// share a coefficient, the mean ½(m(τ) + m(−τ)) is used so a Hermitian symbol
/// stays Hermitian.
pub fn apply_multiplier<M>(spec: &mut SpectralField, m: M)
where
    M: Fn(f64, f64) -> Complex64 + Sync,
{
    let grid = spec.grid.clone();
    let nt = grid.nt;
    let row: usize = grid.nx.iter().product();
    spec.coeffs.par_chunks_mut(row).enumerate().for_each(|(it, chunk)| {
        let probe = SpectralField {
            grid: grid.clone(),
            coeffs: Vec::new(),
        };
        for (j, c) in chunk.iter_mut().enumerate() {
            let (tau, xi) = probe.frequency(it * row + j);
            let v = if is_nyquist(it, nt) {
                (m(tau, xi) + m(-tau, xi)) * 0.5
            } else {
                m(tau, xi)
            };
            *c *= v;
        }
    });
}

/// Applies a multiplier to a real field and returns the real result.
pub fn apply_real<M>(field: &ScalarField, m: M) -> Result<ScalarField>
where
    M: Fn(f64, f64) -> Complex64 + Sync,
{
    let mut spec = dft_forward(field);
    apply_multiplier(&mut spec, m);
    dft_inverse(&spec)
}

/// □ = ∂_tt − Δ applied spectrally (multiplier |ξ|² − τ²).
pub fn wave_apply(field: &ScalarField) -> Result<ScalarField> {
    crate::symbol::apply_box_alpha_spectral(field, &fracwave_core::FractionalOrder::new(1.0)?)
}

/// Transform of e^{−ε(t−t₀)} f: samples of the Laplace–Fourier transform at
/// s = ε + iτ_k (up to the factor e^{−st₀} and the cell volume).
pub fn laplace_forward(field: &ScalarField, eps: f64) -> Result<SpectralField> {
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(Error::Param(format!("eps must be positive, got {eps}")));
    }
    let g = &field.grid;
    let row: usize = g.nx.iter().product();
    let mut weighted = field.clone();
    for it in 0..g.nt {
        let w = (-eps * it as f64 * g.dt).exp();
        for v in &mut weighted.values[it * row..(it + 1) * row] {
            *v *= w;
        }
    }
    Ok(dft_forward(&weighted))
}
