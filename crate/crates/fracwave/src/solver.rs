//! Time-domain solver for the degenerate wave equation
//! u_tt − Δ_x u − y^{2α−1}∂_y(y^{1−2α}∂_y u) = 0, u(t,x,0) = f, zero data in the past,
//! and extraction of Λ_α f from the near-boundary expansion.

use fracwave_core::FractionalOrder;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::{ScalarField, SpacetimeGrid};

/// Discretization of the extension variable and the time stepping.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverGrid {
    pub dy: f64,
    /// start of the absorbing layer
    pub y_max: f64,
    /// thickness of the absorbing layer
    pub sponge: f64,
    /// solver steps per grid time step
    pub substeps: usize,
    /// periodic padding cells added on each side of every x axis
    pub x_pad: usize,
    /// cells kept for the boundary fit
    pub keep: usize,
}

impl SolverGrid {
    /// dy = h/2, Y_max = 30, a sponge of 8, four substeps, 20 units of x padding.
    pub fn for_grid(grid: &SpacetimeGrid) -> Self {
        let h = grid.dx.iter().cloned().fold(grid.dt, f64::min);
        Self {
            dy: 0.5 * h,
            y_max: 30.0,
            sponge: 8.0,
            substeps: 4,
            x_pad: (20.0 / h).round() as usize,
            keep: 8,
        }
    }

    pub fn cells(&self) -> usize {
        ((self.y_max + self.sponge) / self.dy).round() as usize
    }

    pub fn centers(&self) -> Vec<f64> {
        (0..self.cells()).map(|i| (i as f64 + 0.5) * self.dy).collect()
    }
}

/// u on the first `keep` cell centers for every (t, x) of the data grid.
#[derive(Debug, Clone, PartialEq)]
pub struct NearBoundary {
    pub grid: SpacetimeGrid,
    pub y: Vec<f64>,
    /// row-major (t, x…, y)
    pub values: Vec<f64>,
}

impl NearBoundary {
    pub fn at(&self, flat: usize) -> &[f64] {
        let k = self.y.len();
        &self.values[flat * k..(flat + 1) * k]
    }

    /// u at the first cell center as a field.
    pub fn trace(&self) -> ScalarField {
        let values = (0..self.grid.len()).map(|i| self.at(i)[0]).collect();
        ScalarField {
            grid: self.grid.clone(),
            values,
        }
    }
}

/// Finite-volume operator in y: cell masses ∫y^{1−2α} and face coefficients.
struct Radial {
    mass: Vec<f64>,
    /// κ_i couples cells i−1 and i; κ_0 couples cell 0 with the boundary value
    kappa: Vec<f64>,
    damp: Vec<f64>,
}

impl Radial {
    fn new(alpha: f64, sg: &SolverGrid, sponge: bool) -> Self {
        let ny = sg.cells();
        let yc = sg.centers();
        let p = 2.0 - 2.0 * alpha;
        let mass = (0..ny)
            .map(|i| {
                let (a, b) = (i as f64 * sg.dy, (i + 1) as f64 * sg.dy);
                (b.powf(p) - a.powf(p)) / p
            })
            .collect();
        // exact steady flux between nodes: y^{1−2α}u' = const ⇒ u linear in y^{2α}
        let mut kappa = vec![0.0; ny + 1];
        kappa[0] = 2.0 * alpha / yc[0].powf(2.0 * alpha);
        for i in 1..ny {
            kappa[i] = 2.0 * alpha / (yc[i].powf(2.0 * alpha) - yc[i - 1].powf(2.0 * alpha));
        }
        let damp = yc
            .iter()
            .map(|&y| {
                if sponge && y > sg.y_max {
                    3.0 * ((y - sg.y_max) / sg.sponge).powi(2)
                } else {
                    0.0
                }
            })
            .collect();
        Self { mass, kappa, damp }
    }

    /// Gershgorin bound on the largest eigenvalue of the y operator.
    fn spectral_bound(&self) -> f64 {
        (0..self.mass.len())
            .map(|i| 2.0 * (self.kappa[i] + self.kappa[i + 1]) / self.mass[i])
            .fold(0.0, f64::max)
    }
}

/// Padded periodic x layout.
struct XLayout {
    dims: Vec<usize>,
    steps: Vec<f64>,
    pad: usize,
    total: usize,
}

impl XLayout {
    fn new(grid: &SpacetimeGrid, pad: usize) -> Self {
        let dims: Vec<usize> = grid.nx.iter().map(|n| n + 2 * pad).collect();
        let total = dims.iter().product();
        Self {
            dims,
            steps: grid.dx.clone(),
            pad,
            total,
        }
    }

    fn stride(&self, axis: usize) -> usize {
        self.dims[axis + 1..].iter().product()
    }

    /// flat padded index of an unpadded spatial flat index
    fn embed(&self, grid: &SpacetimeGrid, mut j: usize) -> usize {
        let mut idx = vec![0; grid.nx.len()];
        for a in (0..grid.nx.len()).rev() {
            idx[a] = j % grid.nx[a];
            j /= grid.nx[a];
        }
        idx.iter()
            .enumerate()
            .fold(0, |b, (a, &i)| b * self.dims[a] + i + self.pad)
    }

    fn laplace_bound(&self) -> f64 {
        self.steps.iter().map(|h| 4.0 / (h * h)).sum()
    }
}

fn check_cfl(dt: f64, dx: &[f64], sg: &SolverGrid, radial: &Radial, layout: &XLayout) -> Result<()> {
    let spec_bound = 0.9 * dx.iter().cloned().fold(sg.dy, f64::min);
    let stab = 0.9 * 2.0 / (radial.spectral_bound() + layout.laplace_bound()).sqrt();
    let limit = spec_bound.min(stab);
    if dt > limit {
        return Err(Error::Cfl { dt, limit });
    }
    Ok(())
}

/// One leapfrog step: writes u^{n+1} into `next` (which holds u^{n−1} on entry).
fn step(u: &[f64], next: &mut [f64], fb: &[f64], dt: f64, radial: &Radial, layout: &XLayout) {
    let ny = radial.mass.len();
    let strides: Vec<usize> = (0..layout.dims.len()).map(|a| layout.stride(a)).collect();
    next.par_chunks_mut(ny).enumerate().for_each(|(xi, out)| {
        let row = &u[xi * ny..(xi + 1) * ny];
        // periodic neighbours along each x axis
        let mut nbrs = [(0usize, 0usize, 0f64); 2];
        for (a, &st) in strides.iter().enumerate() {
            let n = layout.dims[a];
            let i = (xi / st) % n;
            let lo = xi - i * st + ((i + n - 1) % n) * st;
            let hi = xi - i * st + ((i + 1) % n) * st;
            nbrs[a] = (lo, hi, 1.0 / (layout.steps[a] * layout.steps[a]));
        }
        let nb = &nbrs[..strides.len()];
        for k in 0..ny {
            let left = if k == 0 {
                radial.kappa[0] * (row[0] - fb[xi])
            } else {
                radial.kappa[k] * (row[k] - row[k - 1])
            };
            let right = if k + 1 < ny {
                radial.kappa[k + 1] * (row[k + 1] - row[k])
            } else {
                0.0
            };
            let mut acc = (right - left) / radial.mass[k];
            for &(lo, hi, w) in nb {
                acc += w * (u[lo * ny + k] + u[hi * ny + k] - 2.0 * row[k]);
            }
            let d = 0.5 * radial.damp[k] * dt;
            out[k] = (2.0 * row[k] - (1.0 - d) * out[k] + dt * dt * acc) / (1.0 + d);
        }
    });
}

/// Solves the extension problem with boundary datum f (zero before the grid
/// start and after its end, linear in time between samples).
pub fn solve_time_domain(f: &ScalarField, order: &FractionalOrder, sg: &SolverGrid) -> Result<NearBoundary> {
    if order.m != 0 {
        return Err(Error::Param("the time-domain route needs alpha in (0,1)".into()));
    }
    if sg.substeps == 0 || sg.keep == 0 || !(sg.dy > 0.0) || sg.cells() <= sg.keep {
        return Err(Error::Param("degenerate solver grid".into()));
    }
    let g = &f.grid;
    let support = support_diameter(f);
    if sg.y_max < 4.0 * support {
        return Err(Error::Param(format!(
            "y_max {} is below 4x the datum support diameter {support}",
            sg.y_max
        )));
    }
    let radial = Radial::new(order.alpha, sg, true);
    let layout = XLayout::new(g, sg.x_pad);
    let dt = g.dt / sg.substeps as f64;
    check_cfl(dt, &g.dx, sg, &radial, &layout)?;
    let ny = sg.cells();
    let row: usize = g.nx.iter().product();
    let embed: Vec<usize> = (0..row).map(|j| layout.embed(g, j)).collect();
    let mut u = vec![0.0; layout.total * ny];
    let mut prev = vec![0.0; layout.total * ny];
    let mut fb = vec![0.0; layout.total];
    let keep = sg.keep;
    let mut values = vec![0.0; g.len() * keep];
    let slice = |it: usize| -> &[f64] {
        if it < g.nt {
            &f.values[it * row..(it + 1) * row]
        } else {
            &[]
        }
    };
    for n in 0..g.nt {
        for j in 0..row {
            let src = &u[embed[j] * ny..embed[j] * ny + keep];
            values[(n * row + j) * keep..(n * row + j + 1) * keep].copy_from_slice(src);
        }
        for k in 0..sg.substeps {
            let th = k as f64 / sg.substeps as f64;
            let (a, b) = (slice(n), slice(n + 1));
            for j in 0..row {
                let fa = a[j];
                let fbv = if b.is_empty() { 0.0 } else { b[j] };
                fb[embed[j]] = (1.0 - th) * fa + th * fbv;
            }
            step(&u, &mut prev, &fb, dt, &radial, &layout);
            std::mem::swap(&mut u, &mut prev);
        }
    }
    Ok(NearBoundary {
        grid: g.clone(),
        y: sg.centers()[..keep].to_vec(),
        values,
    })
}

/// Largest extent (in grid units of length) of the region where |f| > 1e−3 max|f|.
pub fn support_diameter(f: &ScalarField) -> f64 {
    f.support_box(1e-3)
        .iter()
        .zip(f.grid.steps())
        .map(|(&(lo, hi), h)| if hi >= lo { (hi - lo) as f64 * h } else { 0.0 })
        .fold(0.0, f64::max)
}

/// Which powers of y enter the near-boundary fit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitBasis {
    /// y^{2j} for j ≤ m, and y^{2α}
    Minimal,
    /// Minimal plus y^{2(m+1)}
    Extended,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryFit {
    /// coefficients of y^{2j}, j = 0..
    pub even: Vec<f64>,
    /// coefficient of y^{2α}
    pub b: f64,
    /// RMS fit residual
    pub residual: f64,
    pub lambda: f64,
    pub ill_conditioned: bool,
}

/// Least-squares fit on the first `cells` entries of each trace.
pub struct FitPlan {
    pinv: Vec<Vec<f64>>,
    basis: Vec<Vec<f64>>,
    b_index: usize,
    factor: f64,
    pub condition: f64,
    cells: usize,
}

impl FitPlan {
    pub fn new(order: &FractionalOrder, y: &[f64], cells: usize, basis: FitBasis) -> Result<Self> {
        let m = order.m as usize;
        if cells < m + 3 || cells > y.len() {
            return Err(Error::Param(format!(
                "fit needs between {} and {} cells",
                m + 3,
                y.len()
            )));
        }
        let mut exps: Vec<f64> = (0..=m).map(|j| 2.0 * j as f64).collect();
        let b_index = exps.len();
        exps.push(2.0 * order.alpha);
        if basis == FitBasis::Extended {
            exps.push(2.0 * (m + 1) as f64);
        }
        let ys = &y[..cells];
        let cols: Vec<Vec<f64>> = exps.iter().map(|&e| ys.iter().map(|v| v.powf(e)).collect()).collect();
        let p = cols.len();
        // column scaling, then normal equations
        let scale: Vec<f64> = cols
            .iter()
            .map(|c| c.iter().map(|v| v * v).sum::<f64>().sqrt())
            .collect();
        let mut gram = vec![vec![0.0; p]; p];
        for i in 0..p {
            for j in 0..p {
                gram[i][j] = (0..cells).map(|k| cols[i][k] * cols[j][k]).sum::<f64>() / (scale[i] * scale[j]);
            }
        }
        let eig = jacobi_eigenvalues(gram.clone());
        let (lo, hi) = eig.iter().fold((f64::MAX, 0f64), |(a, b), &v| (a.min(v), b.max(v)));
        let condition = (hi / lo.max(f64::MIN_POSITIVE)).sqrt();
        let inv = invert(&gram).ok_or_else(|| Error::Param("singular fit basis".into()))?;
        let pinv = (0..p)
            .map(|i| {
                (0..cells)
                    .map(|k| (0..p).map(|j| inv[i][j] * cols[j][k] / scale[j]).sum::<f64>() / scale[i])
                    .collect()
            })
            .collect();
        let falling: f64 = (0..=m).map(|k| 2.0 * order.alpha - 2.0 * k as f64).product();
        Ok(Self {
            pinv,
            basis: cols,
            b_index,
            factor: order.c_alpha * falling,
            condition,
            cells,
        })
    }

    pub fn fit(&self, trace: &[f64]) -> BoundaryFit {
        let p = self.pinv.len();
        let coef: Vec<f64> = (0..p)
            .map(|i| (0..self.cells).map(|k| self.pinv[i][k] * trace[k]).sum())
            .collect();
        let mut res = 0.0;
        for k in 0..self.cells {
            let model: f64 = (0..p).map(|i| coef[i] * self.basis[i][k]).sum();
            res += (trace[k] - model).powi(2);
        }
        let mut even: Vec<f64> = coef[..self.b_index].to_vec();
        if p > self.b_index + 1 {
            even.push(coef[self.b_index + 1]);
        }
        let b = coef[self.b_index];
        BoundaryFit {
            even,
            b,
            residual: (res / self.cells as f64).sqrt(),
            lambda: self.factor * b,
            ill_conditioned: self.condition > 1e8,
        }
    }
}

/// Λ_α f = c_α·b·∏(2α − 2k) from the fitted y^{2α} coefficient at every grid point.
pub fn boundary_fit_extract(
    u: &NearBoundary,
    order: &FractionalOrder,
    cells: usize,
    basis: FitBasis,
) -> Result<(ScalarField, Vec<BoundaryFit>)> {
    let plan = FitPlan::new(order, &u.y, cells, basis)?;
    let fits: Vec<BoundaryFit> = (0..u.grid.len()).into_par_iter().map(|i| plan.fit(u.at(i))).collect();
    let field = ScalarField::new(u.grid.clone(), fits.iter().map(|f| f.lambda).collect())?;
    Ok((field, fits))
}

/// Solve and fit with the default solver grid, four cells and the extended basis.
pub fn dtn_time_domain(f: &ScalarField, order: &FractionalOrder) -> Result<ScalarField> {
    let sg = SolverGrid::for_grid(&f.grid);
    let u = solve_time_domain(f, order, &sg)?;
    Ok(boundary_fit_extract(&u, order, 4, FitBasis::Extended)?.0)
}

/// Discrete energy history of the homogeneous problem (u = 0 on y = 0) started
/// from u(0) = u(−dt) = φ(x, y). Returns the leapfrog-conserved energy
/// ½|(u^{n+1}−u^n)/dt|²_M + ½⟨u^{n+1}, A u^n⟩_M after each step.
pub fn homogeneous_energy<P>(
    order: &FractionalOrder,
    grid: &SpacetimeGrid,
    sg: &SolverGrid,
    sponge: bool,
    steps: usize,
    phi: P,
) -> Result<Vec<f64>>
where
    P: Fn(&[f64], f64) -> f64,
{
    if order.m != 0 {
        return Err(Error::Param("the time-domain route needs alpha in (0,1)".into()));
    }
    let radial = Radial::new(order.alpha, sg, sponge);
    let layout = XLayout::new(grid, 0);
    let dt = grid.dt / sg.substeps as f64;
    check_cfl(dt, &grid.dx, sg, &radial, &layout)?;
    let ny = sg.cells();
    let yc = sg.centers();
    let mut u = vec![0.0; layout.total * ny];
    let mut x = vec![0.0; layout.dims.len()];
    for xi in 0..layout.total {
        let mut r = xi;
        for a in (0..layout.dims.len()).rev() {
            x[a] = grid.x0[a] + (r % layout.dims[a]) as f64 * layout.steps[a];
            r /= layout.dims[a];
        }
        for k in 0..ny {
            u[xi * ny + k] = phi(&x, yc[k]);
        }
    }
    let mut prev = u.clone();
    let fb = vec![0.0; layout.total];
    let weight: f64 = layout.steps.iter().product();
    let mut out = Vec::with_capacity(steps);
    let mut next = prev.clone();
    for _ in 0..steps {
        next.copy_from_slice(&prev);
        step(&u, &mut next, &fb, dt, &radial, &layout);
        let kin: f64 = (0..u.len())
            .map(|i| radial.mass[i % ny] * ((next[i] - u[i]) / dt).powi(2))
            .sum();
        let pot = bilinear(&next, &u, &radial, &layout);
        out.push(0.5 * weight * (kin + pot));
        std::mem::swap(&mut prev, &mut u);
        std::mem::swap(&mut u, &mut next);
    }
    Ok(out)
}

/// ⟨v, A w⟩ with A the (symmetric, positive) discrete spatial operator.
fn bilinear(v: &[f64], w: &[f64], radial: &Radial, layout: &XLayout) -> f64 {
    let ny = radial.mass.len();
    let mut acc = 0.0;
    for xi in 0..layout.total {
        let (rv, rw) = (&v[xi * ny..(xi + 1) * ny], &w[xi * ny..(xi + 1) * ny]);
        acc += radial.kappa[0] * rv[0] * rw[0];
        for k in 1..ny {
            acc += radial.kappa[k] * (rv[k] - rv[k - 1]) * (rw[k] - rw[k - 1]);
        }
        for a in 0..layout.dims.len() {
            let st = layout.stride(a);
            let n = layout.dims[a];
            let i = (xi / st) % n;
            let hi = xi - i * st + ((i + 1) % n) * st;
            let h2 = layout.steps[a] * layout.steps[a];
            for k in 0..ny {
                acc += radial.mass[k] * (v[hi * ny + k] - rv[k]) * (w[hi * ny + k] - rw[k]) / h2;
            }
        }
    }
    acc
}

fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _ in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    off += a[i][j] * a[i][j];
                }
            }
        }
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).collect()
}

fn invert(a: &[Vec<f64>]) -> Option<Vec<Vec<f64>>> {
    let n = a.len();
    let mut m: Vec<Vec<f64>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { 1.0 } else { 0.0 }));
            row
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).max_by(|&i, &j| m[i][c].abs().total_cmp(&m[j][c].abs()))?;
        if m[piv][c].abs() < 1e-300 {
            return None;
        }
        m.swap(c, piv);
        let d = m[c][c];
        for v in m[c].iter_mut() {
            *v /= d;
        }
        for r in 0..n {
            if r != c {
                let f = m[r][c];
                for k in 0..2 * n {
                    m[r][k] -= f * m[c][k];
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}
