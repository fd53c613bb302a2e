//! Uniform spacetime grids and the fields that live on them.

use fracwave_core::Complex64;

use crate::error::{Error, Result};

/// Uniform grid in (t, x₁[, x₂]), row-major with t slowest.
#[derive(Debug, Clone, PartialEq)]
pub struct SpacetimeGrid {
    pub nt: usize,
    pub nx: Vec<usize>,
    pub dt: f64,
    pub dx: Vec<f64>,
    pub t0: f64,
    /// Spatial origin per axis. Not stored in FWF1 files (read back as zero).
    pub x0: Vec<f64>,
}

impl SpacetimeGrid {
    pub fn new(nt: usize, nx: Vec<usize>, dt: f64, dx: Vec<f64>, t0: f64, x0: Vec<f64>) -> Result<Self> {
        if nx.is_empty() || nx.len() > 2 {
            return Err(Error::Grid(format!("spatial rank must be 1 or 2, got {}", nx.len())));
        }
        if dx.len() != nx.len() || x0.len() != nx.len() {
            return Err(Error::Grid("step/origin count differs from axis count".into()));
        }
        if nt < 4 || nx.iter().any(|&n| n < 4) {
            return Err(Error::Grid("every axis needs at least 4 samples".into()));
        }
        if !(dt > 0.0) || dx.iter().any(|&h| !(h > 0.0)) || !dt.is_finite() {
            return Err(Error::Grid("steps must be positive".into()));
        }
        if !t0.is_finite() || x0.iter().any(|v| !v.is_finite()) {
            return Err(Error::Grid("origin must be finite".into()));
        }
        Ok(Self { nt, nx, dt, dx, t0, x0 })
    }

    /// 1+1 grid with equal steps.
    pub fn square(nt: usize, nx: usize, h: f64, t0: f64, x0: f64) -> Result<Self> {
        Self::new(nt, vec![nx], h, vec![h], t0, vec![x0])
    }

    /// Spacetime dimension n = 1 + spatial rank.
    pub fn n(&self) -> u32 {
        1 + self.nx.len() as u32
    }

    pub fn dims(&self) -> Vec<usize> {
        let mut d = vec![self.nt];
        d.extend_from_slice(&self.nx);
        d
    }

    pub fn steps(&self) -> Vec<f64> {
        let mut d = vec![self.dt];
        d.extend_from_slice(&self.dx);
        d
    }

    pub fn origins(&self) -> Vec<f64> {
        let mut d = vec![self.t0];
        d.extend_from_slice(&self.x0);
        d
    }

    pub fn len(&self) -> usize {
        self.nt * self.nx.iter().product::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn t(&self, i: usize) -> f64 {
        self.t0 + i as f64 * self.dt
    }

    pub fn x(&self, axis: usize, j: usize) -> f64 {
        self.x0[axis] + j as f64 * self.dx[axis]
    }

    /// Extent per axis (count × step): the period of the spectral route.
    pub fn extents(&self) -> Vec<f64> {
        self.dims()
            .iter()
            .zip(self.steps())
            .map(|(&n, h)| n as f64 * h)
            .collect()
    }

    /// Cell volume dt·∏dx.
    pub fn cell_volume(&self) -> f64 {
        self.steps().iter().product()
    }

    /// Multi-index of a flat index.
    pub fn unravel(&self, mut flat: usize) -> Vec<usize> {
        let dims = self.dims();
        let mut idx = vec![0; dims.len()];
        for a in (0..dims.len()).rev() {
            idx[a] = flat % dims[a];
            flat /= dims[a];
        }
        idx
    }

    /// Coordinates (t, x…) of a flat index.
    pub fn coords(&self, flat: usize) -> Vec<f64> {
        let idx = self.unravel(flat);
        let steps = self.steps();
        let orig = self.origins();
        idx.iter()
            .enumerate()
            .map(|(a, &i)| orig[a] + i as f64 * steps[a])
            .collect()
    }

    /// Same grid with every axis enlarged by an integer factor (origin kept).
    pub fn padded(&self, factor: usize) -> Self {
        Self {
            nt: self.nt * factor,
            nx: self.nx.iter().map(|n| n * factor).collect(),
            ..self.clone()
        }
    }
}

/// Angular frequency of DFT index k on an axis of n samples with step h:
/// 2πk'/(n h), k' wrapped to (−n/2, n/2]. The Nyquist index maps to +π/h.
pub fn angular_frequency(k: usize, n: usize, h: f64) -> f64 {
    let kk = if k <= n / 2 { k as f64 } else { k as f64 - n as f64 };
    2.0 * std::f64::consts::PI * kk / (n as f64 * h)
}

pub fn is_nyquist(k: usize, n: usize) -> bool {
    n % 2 == 0 && k == n / 2
}

/// Real samples on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField {
    pub grid: SpacetimeGrid,
    pub values: Vec<f64>,
}

impl ScalarField {
    pub fn new(grid: SpacetimeGrid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::Shape(format!(
                "{} values for {} cells",
                values.len(),
                grid.len()
            )));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { grid, values })
    }

    pub fn zeros(grid: SpacetimeGrid) -> Self {
        let n = grid.len();
        Self {
            grid,
            values: vec![0.0; n],
        }
    }

    /// Samples a function of (t, x).
    pub fn from_fn<F: Fn(f64, &[f64]) -> f64>(grid: SpacetimeGrid, f: F) -> Self {
        let values = (0..grid.len())
            .map(|i| {
                let c = grid.coords(i);
                f(c[0], &c[1..])
            })
            .collect();
        Self { grid, values }
    }

    pub fn norm_l2(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// ‖self − other‖₂/‖other‖₂.
    pub fn rel_l2(&self, reference: &ScalarField) -> f64 {
        let num: f64 = self
            .values
            .iter()
            .zip(&reference.values)
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        (num / reference.values.iter().map(|v| v * v).sum::<f64>()).sqrt()
    }

    /// Embeds into a grid `factor` times larger per axis, zero elsewhere.
    pub fn zero_padded(&self, factor: usize) -> ScalarField {
        let big = self.grid.padded(factor);
        let mut out = ScalarField::zeros(big.clone());
        let dims = self.grid.dims();
        let bdims = big.dims();
        for flat in 0..self.values.len() {
            let idx = self.grid.unravel(flat);
            let mut b = 0;
            for a in 0..dims.len() {
                b = b * bdims[a] + idx[a];
            }
            out.values[b] = self.values[flat];
        }
        out
    }

    /// Leading corner of the given grid shape (inverse of [`zero_padded`]).
    pub fn cropped(&self, grid: &SpacetimeGrid) -> ScalarField {
        let dims = grid.dims();
        let bdims = self.grid.dims();
        let values = (0..grid.len())
            .map(|flat| {
                let idx = grid.unravel(flat);
                let mut b = 0;
                for a in 0..dims.len() {
                    b = b * bdims[a] + idx[a];
                }
                self.values[b]
            })
            .collect();
        ScalarField {
            grid: grid.clone(),
            values,
        }
    }

    /// Index range per axis outside which |value| ≤ tol·max.
    pub fn support_box(&self, tol: f64) -> Vec<(usize, usize)> {
        let dims = self.grid.dims();
        let thr = tol * self.max_abs();
        let mut lo = dims.clone();
        let mut hi = vec![0; dims.len()];
        for (flat, v) in self.values.iter().enumerate() {
            if v.abs() > thr {
                for (a, &i) in self.grid.unravel(flat).iter().enumerate() {
                    lo[a] = lo[a].min(i);
                    hi[a] = hi[a].max(i);
                }
            }
        }
        lo.into_iter().zip(hi).collect()
    }
}

/// Complex DFT coefficients; index k ↔ angular frequency per [`angular_frequency`].
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralField {
    pub grid: SpacetimeGrid,
    pub coeffs: Vec<Complex64>,
}

impl SpectralField {
    /// Flat index of the frequency mirrored through the origin.
    pub fn mirror_index(&self, flat: usize) -> usize {
        let dims = self.grid.dims();
        let idx = self.grid.unravel(flat);
        let mut b = 0;
        for a in 0..dims.len() {
            b = b * dims[a] + (dims[a] - idx[a]) % dims[a];
        }
        b
    }

    /// Largest |c(k) − conj c(−k)| relative to the largest coefficient.
    pub fn hermitian_defect(&self) -> f64 {
        let scale = self
            .coeffs
            .iter()
            .fold(0.0f64, |m, c| m.max(c.norm()))
            .max(f64::MIN_POSITIVE);
        (0..self.coeffs.len())
            .map(|k| (self.coeffs[k] - self.coeffs[self.mirror_index(k)].conj()).norm())
            .fold(0.0, f64::max)
            / scale
    }

    /// (τ, |ξ|) at a flat index.
    pub fn frequency(&self, flat: usize) -> (f64, f64) {
        let idx = self.grid.unravel(flat);
        let dims = self.grid.dims();
        let steps = self.grid.steps();
        let tau = angular_frequency(idx[0], dims[0], steps[0]);
        let xi2: f64 = (1..dims.len())
            .map(|a| {
                let w = angular_frequency(idx[a], dims[a], steps[a]);
                w * w
            })
            .sum();
        (tau, xi2.sqrt())
    }
}
