//! Off-grid evaluation of sampled fields. Outside the grid the field is zero.

use fracwave_core::Complex64;

use crate::grid::ScalarField;
use crate::spectral::fft_nd;

pub trait FieldSampler: Sync {
    fn sample(&self, t: f64, x: &[f64]) -> f64;
}

/// Which sampler a route should build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SamplerKind {
    Multilinear,
    /// FFT upsampling by the given factor, then cubic B-spline.
    Spline(usize),
}

pub fn build_sampler(field: &ScalarField, kind: SamplerKind) -> Box<dyn FieldSampler> {
    match kind {
        SamplerKind::Multilinear => Box::new(Multilinear::new(field.clone())),
        SamplerKind::Spline(k) => Box::new(SplineSampler::new(field, k)),
    }
}

pub struct Multilinear {
    field: ScalarField,
}

impl Multilinear {
    pub fn new(field: ScalarField) -> Self {
        Self { field }
    }
}

impl FieldSampler for Multilinear {
    fn sample(&self, t: f64, x: &[f64]) -> f64 {
        let g = &self.field.grid;
        let dims = g.dims();
        let steps = g.steps();
        let orig = g.origins();
        let rank = dims.len();
        let mut base = [0usize; 3];
        let mut frac = [0f64; 3];
        for a in 0..rank {
            let c = if a == 0 { t } else { x[a - 1] };
            let u = (c - orig[a]) / steps[a];
            if !(u >= 0.0) || u > (dims[a] - 1) as f64 {
                return 0.0;
            }
            let i = (u.floor() as usize).min(dims[a] - 2);
            base[a] = i;
            frac[a] = u - i as f64;
        }
        let mut acc = 0.0;
        for corner in 0..(1usize << rank) {
            let mut w = 1.0;
            let mut flat = 0;
            for a in 0..rank {
                let bit = (corner >> a) & 1;
                w *= if bit == 1 { frac[a] } else { 1.0 - frac[a] };
                flat = flat * dims[a] + base[a] + bit;
            }
            acc += w * self.field.values[flat];
        }
        acc
    }
}

/// Band-limited upsampling followed by tensor cubic B-spline interpolation.
pub struct SplineSampler {
    coef: Vec<f64>,
    dims: Vec<usize>,
    steps: Vec<f64>,
    orig: Vec<f64>,
}

impl SplineSampler {
    pub fn new(field: &ScalarField, factor: usize) -> Self {
        let factor = factor.max(1);
        let g = &field.grid;
        let dims = g.dims();
        let rank = dims.len();
        // zero-pad ×2 so the periodic interpolant does not wrap
        let padded = field.zero_padded(2);
        let pdims = padded.grid.dims();
        let mut spec: Vec<Complex64> = padded.values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        fft_nd(&mut spec, &pdims, false);
        let udims: Vec<usize> = pdims.iter().map(|n| n * factor).collect();
        let utotal: usize = udims.iter().product();
        let mut up = vec![Complex64::new(0.0, 0.0); utotal];
        for (flat, c) in spec.iter().enumerate() {
            let idx = padded.grid.unravel(flat);
            let mut b = 0;
            for a in 0..rank {
                let n = pdims[a];
                let k = idx[a];
                let kk = if k < n / 2 { k } else { udims[a] - (n - k) };
                b = b * udims[a] + kk;
            }
            up[b] = *c;
        }
        fft_nd(&mut up, &udims, true);
        let scale = (factor as f64).powi(rank as i32);
        // keep the leading block that covers the original window
        let fdims: Vec<usize> = dims.iter().map(|n| (n - 1) * factor + 1).collect();
        let ftotal: usize = fdims.iter().product();
        let mut vals = vec![0.0; ftotal];
        let mut idx = vec![0usize; rank];
        for (flat, v) in vals.iter_mut().enumerate() {
            let mut r = flat;
            for a in (0..rank).rev() {
                idx[a] = r % fdims[a];
                r /= fdims[a];
            }
            let mut b = 0;
            for a in 0..rank {
                b = b * udims[a] + idx[a];
            }
            *v = up[b].re * scale;
        }
        prefilter(&mut vals, &fdims);
        let steps = g.steps().iter().map(|h| h / factor as f64).collect();
        Self {
            coef: vals,
            dims: fdims,
            steps,
            orig: g.origins(),
        }
    }
}

/// In-place cubic B-spline coefficient filter along every axis (mirror ends).
fn prefilter(data: &mut [f64], dims: &[usize]) {
    let z = 3f64.sqrt() - 2.0;
    let total = data.len();
    let mut line = Vec::new();
    for axis in 0..dims.len() {
        let n = dims[axis];
        let stride: usize = dims[axis + 1..].iter().product();
        for start in 0..total {
            if (start / stride) % n != 0 {
                continue;
            }
            line.clear();
            line.extend((0..n).map(|k| data[start + k * stride]));
            filter_line(&mut line, z);
            for k in 0..n {
                data[start + k * stride] = line[k];
            }
        }
    }
}

fn filter_line(c: &mut [f64], z: f64) {
    let n = c.len();
    let gain = (1.0 - z) * (1.0 - 1.0 / z);
    for v in c.iter_mut() {
        *v *= gain;
    }
    // causal initialisation, truncated geometric sum
    let horizon = n.min(40);
    let mut zk = z;
    let mut sum = c[0];
    for v in c.iter().take(horizon).skip(1) {
        sum += zk * v;
        zk *= z;
    }
    c[0] = sum;
    for k in 1..n {
        c[k] += z * c[k - 1];
    }
    c[n - 1] = (z / (z * z - 1.0)) * (z * c[n - 2] + c[n - 1]);
    for k in (0..n - 1).rev() {
        c[k] = z * (c[k + 1] - c[k]);
    }
}

fn bspline_weights(f: f64) -> [f64; 4] {
    let f2 = f * f;
    let f3 = f2 * f;
    let g = 1.0 - f;
    [
        g * g * g / 6.0,
        (4.0 - 6.0 * f2 + 3.0 * f3) / 6.0,
        (1.0 + 3.0 * f + 3.0 * f2 - 3.0 * f3) / 6.0,
        f3 / 6.0,
    ]
}

impl FieldSampler for SplineSampler {
    fn sample(&self, t: f64, x: &[f64]) -> f64 {
        let rank = self.dims.len();
        let mut base = [0isize; 3];
        let mut w = [[0f64; 4]; 3];
        for a in 0..rank {
            let c = if a == 0 { t } else { x[a - 1] };
            let u = (c - self.orig[a]) / self.steps[a];
            if !(u >= -1.0) || u > self.dims[a] as f64 {
                return 0.0;
            }
            let i = u.floor();
            base[a] = i as isize - 1;
            w[a] = bspline_weights(u - i);
        }
        let mut acc = 0.0;
        let taps = 4usize.pow(rank as u32);
        'tap: for tap in 0..taps {
            let mut r = tap;
            let mut flat = 0usize;
            let mut wt = 1.0;
            for a in 0..rank {
                let k = r % 4;
                r /= 4;
                let i = base[a] + k as isize;
                if i < 0 || i >= self.dims[a] as isize {
                    continue 'tap;
                }
                wt *= w[a][k];
                flat = flat * self.dims[a] + i as usize;
            }
            // flat was built with axis 0 first, which matches row-major order
            acc += wt * self.coef[flat];
        }
        acc
    }
}
