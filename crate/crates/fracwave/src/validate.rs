//! The acceptance suite: each check compares independent routes or verifies an
//! identity and returns one report record.

use std::time::Instant;

use fracwave_core::ads::{radial_neumann_ladder, radial_ode_residual, radial_profile, GlobalAdsMode};
use fracwave_core::extension::{dtn_value, neumann_extract_profile, ExtensionProfile, LadderSpec};
use fracwave_core::qcalc::{a_coefficient, a_product, c_coefficient, QScheme};
use fracwave_core::symbol::sigma;
use fracwave_core::{Complex64, FractionalOrder};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::Tolerances;
use crate::error::Result;
use crate::extension::{dtn_spacetime, energy_check};
use crate::geometry::{circle_box_alpha, flatness, global_ads_table};
use crate::grid::{ScalarField, SpacetimeGrid, SpectralField};
use crate::hypersingular::{box_alpha_integral, box_alpha_kernel2, riesz_potential, NullKernelSpec, QuadratureSpec};
use crate::report::CheckRecord;
use crate::solver::{boundary_fit_extract, homogeneous_energy, solve_time_domain, FitBasis, SolverGrid};
use crate::spectral::wave_apply;
use crate::symbol::{apply_box_alpha_reference, apply_box_alpha_spectral};

pub const CHECK_NAMES: [&str; 11] = [
    "symbol",
    "integral-vs-spectral",
    "null-kernel-limit",
    "closed-form-vs-spectral",
    "neumann-extraction",
    "time-domain-pipeline",
    "energy-identity",
    "q-calculus",
    "riesz-reduction",
    "global-ads",
    "product-space",
];

fn order(a: f64) -> FractionalOrder {
    FractionalOrder::new(a).expect("valid order")
}

fn gaussian(t: f64, x: &[f64]) -> f64 {
    (-(t * t + x[0] * x[0]) / 2.0).exp()
}

fn anisotropic(t: f64, x: &[f64]) -> f64 {
    (-(t * t / 2.0 + x[0] * x[0] / 4.5)).exp()
}

/// 128² grid with step 1/4 on [−8, 24) × [−16, 16).
fn bump_grid() -> SpacetimeGrid {
    SpacetimeGrid::square(128, 128, 0.25, -8.0, -16.0).expect("grid")
}

struct Outcome {
    error: f64,
    tolerance: f64,
    pass: bool,
    detail: String,
}

fn record(id: u32, routes: &[&str], norm: &str, start: Instant, o: Outcome) -> CheckRecord {
    CheckRecord {
        id: id.to_string(),
        name: CHECK_NAMES[id as usize - 1].to_string(),
        routes: routes.iter().map(|s| s.to_string()).collect(),
        norm: norm.to_string(),
        error: o.error,
        tolerance: o.tolerance,
        pass: o.pass,
        wall_time_s: start.elapsed().as_secs_f64(),
        detail: o.detail,
    }
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

/// σ₁ exact, σ_α(0,ξ) = |ξ|^{2α}, σ_ασ_β = σ_{α+β} off the cone, under one second.
pub fn check_symbol(tol: &Tolerances) -> Result<CheckRecord> {
    let start = Instant::now();
    let g = SpacetimeGrid::square(64, 64, 0.25, 0.0, 0.0)?;
    let probe = SpectralField {
        grid: g.clone(),
        coeffs: Vec::new(),
    };
    let (one, a, b, ab) = (order(1.0), order(0.3), order(0.45), order(0.75));
    let mut exact = true;
    let mut spacelike: f64 = 0.0;
    let mut semigroup: f64 = 0.0;
    let mut cone = 0;
    for k in 0..g.len() {
        let (tau, xi) = probe.frequency(k);
        exact &= sigma(&one, tau, xi) == Complex64::new(xi * xi - tau * tau, 0.0);
        if xi > 0.0 {
            spacelike = spacelike.max(rel(sigma(&a, 0.0, xi), Complex64::new(xi.powf(0.6), 0.0)));
        }
        if xi == tau.abs() {
            cone += 1;
            exact &= sigma(&a, tau, xi) == Complex64::new(0.0, 0.0);
            continue;
        }
        semigroup = semigroup.max(rel(sigma(&a, tau, xi) * sigma(&b, tau, xi), sigma(&ab, tau, xi)));
    }
    let secs = start.elapsed().as_secs_f64();
    let error = semigroup.max(spacelike);
    Ok(record(
        1,
        &["symbol"],
        "max relative",
        start,
        Outcome {
            error,
            tolerance: tol.semigroup,
            pass: exact && error <= tol.semigroup && secs < 1.0,
            detail: format!(
                "sigma1 exact={exact}; spacelike {spacelike:.1e}; semigroup {semigroup:.1e}; {cone} cone points"
            ),
        },
    ))
}

/// 25 probes on a 5×5 lattice of grid points around the bump center.
pub fn bump_probes(g: &SpacetimeGrid) -> (Vec<Vec<f64>>, Vec<usize>) {
    let mut pts = Vec::new();
    let mut idx = Vec::new();
    let i0 = (-g.t0 / g.dt).round() as usize;
    let j0 = (-g.x0[0] / g.dx[0]).round() as usize;
    for di in [-6i64, -3, 0, 3, 6] {
        for dj in [-6i64, -3, 0, 3, 6] {
            let i = (i0 as i64 + di) as usize;
            let j = (j0 as i64 + dj) as usize;
            pts.push(vec![g.t(i), g.x(0, j)]);
            idx.push(i * g.nx[0] + j);
        }
    }
    (pts, idx)
}

/// Route B against the whole-space spectral reference, and q = 2 against q = 3.
pub fn check_integral(tol: &Tolerances, alphas: &[f64]) -> Result<CheckRecord> {
    let start = Instant::now();
    let g = bump_grid();
    let f = ScalarField::from_fn(g.clone(), gaussian);
    let (pts, idx) = bump_probes(&g);
    let quad = QuadratureSpec::default();
    let mut worst_ab: f64 = 0.0;
    let mut worst_q: f64 = 0.0;
    let mut flagged = 0;
    let mut parts = Vec::new();
    for &a in alphas {
        let o = order(a);
        let reference = apply_box_alpha_reference(&f, &o, 4)?;
        let scale = idx.iter().map(|&i| reference.values[i].abs()).fold(0.0, f64::max);
        let b2 = box_alpha_integral(
            &f,
            &o,
            &QScheme::new(&o, 2, 2.0, fracwave_core::qcalc::default_l(a))?,
            &quad,
            &pts,
        )?;
        let b3 = box_alpha_integral(
            &f,
            &o,
            &QScheme::new(&o, 2, 3.0, fracwave_core::qcalc::default_l(a))?,
            &quad,
            &pts,
        )?;
        flagged += b2.iter().chain(&b3).filter(|v| !v.converged).count();
        let eab = idx
            .iter()
            .zip(&b2)
            .map(|(&i, v)| (v.value - reference.values[i]).abs())
            .fold(0.0, f64::max)
            / scale;
        let eq = b2
            .iter()
            .zip(&b3)
            .map(|(x, y)| (x.value - y.value).abs())
            .fold(0.0, f64::max)
            / scale;
        parts.push(format!("a={a}: B-A {eab:.2e}, q2-q3 {eq:.2e}"));
        worst_ab = worst_ab.max(eab);
        worst_q = worst_q.max(eq);
    }
    parts.push(format!("{flagged} flagged by the indicator"));
    Ok(record(
        2,
        &["integral", "spectral"],
        "max over probes / max|A|",
        start,
        Outcome {
            error: worst_ab,
            tolerance: tol.route_b,
            pass: worst_ab <= tol.route_b && worst_q <= tol.q_independence,
            detail: parts.join("; "),
        },
    ))
}

/// Null-kernel values at the bump center against □f for α → 1.
pub fn check_kernel2(tol: &Tolerances) -> Result<CheckRecord> {
    let start = Instant::now();
    let g = bump_grid();
    let f = ScalarField::from_fn(g.clone(), anisotropic);
    let wave = wave_apply(&f)?;
    let i0 = (-g.t0 / g.dt).round() as usize;
    let j0 = (-g.x0[0] / g.dx[0]).round() as usize;
    let target = wave.values[i0 * g.nx[0] + j0];
    let pt = vec![vec![g.t(i0), g.x(0, j0)]];
    let mut errs = Vec::new();
    for a in [0.9, 0.99, 0.999] {
        let v = box_alpha_kernel2(&f, &order(a), &NullKernelSpec::default(), &pt)?[0];
        errs.push((v - target).abs() / target.abs());
    }
    let decreasing = errs.windows(2).all(|w| w[1] < w[0]);
    let last = errs[2];
    Ok(record(
        3,
        &["kernel2", "wave"],
        "relative at center",
        start,
        Outcome {
            error: last,
            tolerance: tol.kernel2,
            pass: decreasing && last <= tol.kernel2,
            detail: format!(
                "errors at 0.9/0.99/0.999: {:.2e} {:.2e} {:.2e}",
                errs[0], errs[1], errs[2]
            ),
        },
    ))
}

/// Closed-form DtN for decreasing ε against the periodic spectral route.
pub fn check_closed_form(tol: &Tolerances) -> Result<CheckRecord> {
    let start = Instant::now();
    let g = bump_grid();
    let f = ScalarField::from_fn(g, gaussian);
    let o = order(0.4);
    let periodic = apply_box_alpha_spectral(&f, &o)?;
    let whole = apply_box_alpha_reference(&f, &o, 4)?;
    let mut errs = Vec::new();
    let mut info = Vec::new();
    for eps in [0.2, 0.1, 0.05] {
        let c = dtn_spacetime(&f, &o, eps)?;
        errs.push(c.rel_l2(&periodic));
        info.push(c.rel_l2(&whole));
    }
    let monotone = errs.windows(2).all(|w| w[1] < w[0]);
    let last = errs[2];
    Ok(record(
        4,
        &["closed-form", "spectral"],
        "relative L2",
        start,
        Outcome {
            error: last,
            tolerance: tol.closed_form,
            pass: monotone && last <= tol.closed_form,
            detail: format!(
                "eps 0.2/0.1/0.05 vs periodic: {:.2e} {:.2e} {:.2e} (monotone={monotone}); vs whole-space reference: {:.2e} {:.2e} {:.2e}",
                errs[0], errs[1], errs[2], info[0], info[1], info[2]
            ),
        },
    ))
}

/// Weighted Neumann data of the closed-form profile against (|ξ|²+s²)^α F̃.
pub fn check_neumann(tol: &Tolerances) -> Result<CheckRecord> {
    let start = Instant::now();
    let mut parts = Vec::new();
    let mut worst: f64 = 0.0;
    for a in [0.3, 0.7, 1.3] {
        let o = order(a);
        let spec = LadderSpec::for_order(&o);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut w: f64 = 0.0;
        for _ in 0..20 {
            let s = Complex64::new(rng.gen_range(0.05..1.0), rng.gen_range(-5.0..5.0));
            let xi = rng.gen_range(0.0..5.0);
            let f = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let p = ExtensionProfile::on_ladder(&o, s, xi, f, &spec)?;
            let v = neumann_extract_profile(&p)?;
            w = w.max(rel(v, dtn_value(&o, s, xi, f)));
        }
        parts.push(format!("a={a}: {w:.1e}"));
        worst = worst.max(w);
    }
    let secs = start.elapsed().as_secs_f64();
    parts.push(format!("{secs:.2}s"));
    Ok(record(
        5,
        &["closed-form", "multiplier"],
        "max relative",
        start,
        Outcome {
            error: worst,
            tolerance: tol.neumann,
            pass: worst <= tol.neumann && secs < 10.0,
            detail: parts.join("; "),
        },
    ))
}

fn solver_error(h: f64, o: &FractionalOrder) -> Result<f64> {
    let n = (32.0 / h).round() as usize;
    let g = SpacetimeGrid::square(n, n, h, 0.0, 0.0)?;
    let f = ScalarField::from_fn(g, |t, x| (-((t - 8.0).powi(2) + (x[0] - 16.0).powi(2)) / 2.0).exp());
    let reference = apply_box_alpha_reference(&f, o, 4)?;
    let sg = SolverGrid::for_grid(&f.grid);
    let u = solve_time_domain(&f, o, &sg)?;
    let (lam, _) = boundary_fit_extract(&u, o, 4, FitBasis::Extended)?;
    Ok(lam.rel_l2(&reference))
}

/// Relative drift of the leapfrog energy of the homogeneous problem.
pub fn solver_energy_drift(o: &FractionalOrder) -> Result<f64> {
    let g = SpacetimeGrid::square(8, 64, 0.25, 0.0, -8.0)?;
    let sg = SolverGrid {
        dy: 0.125,
        y_max: 16.0,
        sponge: 0.0,
        substeps: 4,
        x_pad: 0,
        keep: 4,
    };
    let e = homogeneous_energy(o, &g, &sg, false, 256, |x, y| {
        (-(x[0] * x[0] + (y - 4.0).powi(2))).exp()
    })?;
    let e0 = e[0];
    Ok(e.iter().map(|v| (v - e0).abs()).fold(0.0, f64::max) / e0)
}

/// Solve + fit against the spectral reference at two resolutions, and the
/// homogeneous energy drift.
pub fn check_time_domain(tol: &Tolerances) -> Result<CheckRecord> {
    let start = Instant::now();
    let o = order(0.4);
    let coarse = solver_error(0.25, &o)?;
    let fine = solver_error(0.125, &o)?;
    let rate = (coarse / fine).log2();
    let drift = solver_energy_drift(&o)?;
    Ok(record(
        6,
        &["time-domain", "spectral"],
        "relative L2",
        start,
        Outcome {
            error: coarse,
            tolerance: tol.time_domain,
            pass: coarse <= tol.time_domain && rate > 0.0 && drift <= tol.solver_energy,
            detail: format!("h=0.25: {coarse:.2e}; h=0.125: {fine:.2e}; order {rate:.2}; energy drift {drift:.1e}"),
        },
    ))
}

/// Ratio of bulk energy to the symbol form for two data.
pub fn check_energy(tol: &Tolerances) -> Result<CheckRecord> {
    let start = Instant::now();
    let o = order(0.4);
    // unequal steps keep grid frequencies off the light cone
    let g = SpacetimeGrid::new(64, vec![64], 0.25, vec![0.3], -4.0, vec![-9.6])?;
    let f1 = ScalarField::from_fn(g.clone(), gaussian);
    let f2 = ScalarField::from_fn(g, |t, x| {
        (1.0 + 0.5 * x[0]) * (-((t - 0.5).powi(2) / 0.8 + x[0] * x[0] / 1.5)).exp()
    });
    let eps = [0.04, 0.02, 0.01];
    let e1 = energy_check(&f1, &o, &eps)?;
    let e2 = energy_check(&f2, &o, &eps)?;
    let spread = (e1.ratio - e2.ratio).abs() / e1.ratio.abs();
    let imag = (e1.rhs.im / e1.rhs.norm()).abs().max((e2.rhs.im / e2.rhs.norm()).abs());
    Ok(record(
        7,
        &["closed-form", "symbol"],
        "relative ratio spread",
        start,
        Outcome {
            error: spread,
            tolerance: tol.energy_ratio,
            pass: spread <= tol.energy_ratio && imag <= tol.energy_imag,
            detail: format!(
                "ratios {:.6} {:.6} (-1/c_alpha = {:.6}); rhs imaginary part {imag:.1e}",
                e1.ratio,
                e2.ratio,
                -1.0 / o.c_alpha
            ),
        },
    ))
}

/// A^l_m = 0 for integer m < l and the sum/product forms of A^l_μ.
pub fn check_qcalc(tol: &Tolerances) -> Result<CheckRecord> {
    let start = Instant::now();
    let mut vanish: f64 = 0.0;
    let mut dual: f64 = 0.0;
    for q in [0.5f64, 2.0, 3.0] {
        for l in 1..=6u32 {
            let mass = |mu: f64| -> Result<f64> {
                (0..=l)
                    .map(|k| Ok(q.powf(k as f64 * mu) * c_coefficient(k, l, q)?.abs()))
                    .sum()
            };
            for m in 0..l {
                let mu = m as f64;
                vanish = vanish.max(a_coefficient(l, mu, q)?.abs() / mass(mu)?);
            }
            for k in 0..=40 {
                let mu = 2.0 * l as f64 * k as f64 / 40.0 + 0.013;
                dual = dual.max((a_coefficient(l, mu, q)? - a_product(l, mu, q)?).abs() / mass(mu)?);
            }
        }
    }
    let error = vanish.max(dual);
    Ok(record(
        8,
        &["q-calculus"],
        "relative to sum of |terms|",
        start,
        Outcome {
            error,
            tolerance: tol.qcalc,
            pass: error <= tol.qcalc,
            detail: format!("vanishing {vanish:.1e}; sum vs product {dual:.1e}"),
        },
    ))
}

/// □ I_{α+1} f = I_α f with a five-point stencil.
pub fn check_riesz(tol: &Tolerances) -> Result<CheckRecord> {
    let start = Instant::now();
    let g = bump_grid();
    let f = ScalarField::from_fn(g, anisotropic);
    let a = 0.6;
    let h = 0.05;
    let quad = QuadratureSpec::default();
    let mut worst: f64 = 0.0;
    let mut parts = Vec::new();
    for (t, x) in [(0.0, 0.0), (1.0, 0.5), (-0.5, -1.0)] {
        let pts = vec![
            vec![t, x],
            vec![t + h, x],
            vec![t - h, x],
            vec![t, x + h],
            vec![t, x - h],
        ];
        let big = riesz_potential(&f, a + 1.0, &quad, &pts)?;
        let small = riesz_potential(&f, a, &quad, &pts[..1])?[0];
        let boxed = (big[1] - 2.0 * big[0] + big[2]) / (h * h) - (big[3] - 2.0 * big[0] + big[4]) / (h * h);
        let e = (boxed - small).abs() / small.abs();
        parts.push(format!("({t},{x}): {e:.1e}"));
        worst = worst.max(e);
    }
    Ok(record(
        9,
        &["riesz"],
        "relative",
        start,
        Outcome {
            error: worst,
            tolerance: tol.riesz,
            pass: worst <= tol.riesz,
            detail: parts.join("; "),
        },
    ))
}

/// Radial ODE residual, r-ladder against the Gamma ratio, and flattening of the
/// multiplier/σ_α ratio.
pub fn check_global_ads(tol: &Tolerances) -> Result<CheckRecord> {
    let start = Instant::now();
    let m = GlobalAdsMode::new(3, order(0.4), 3.0)?;
    let s = Complex64::new(0.1, 2.0);
    let mut residual: f64 = 0.0;
    for r in [0.5, 1.0, 2.0, 5.0] {
        let phi = fd_derivs(&m, s, r)?;
        let res = radial_ode_residual(&m, s, r, phi);
        residual = residual.max(res.norm() / (phi[0].norm() * (1.0 + r * r) / (r * r).min(1.0)));
    }
    let ladder = radial_neumann_ladder(&m, s, 16.0, 2.0, 7)?;
    let gamma = fracwave_core::ads::global_ads_multiplier(&m, s)?;
    let lad_err = rel(ladder, gamma);
    let taus = [8.0, 16.0, 32.0, 64.0, 128.0];
    let mut flat: f64 = 0.0;
    for a in [0.4, 1.3] {
        let rows = global_ads_table(&GlobalAdsMode::new(3, order(a), 3.0)?, 0.01, &taus)?;
        flat = flat.max(flatness(&rows));
    }
    Ok(record(
        10,
        &["global-ads", "symbol"],
        "relative",
        start,
        Outcome {
            error: residual,
            tolerance: tol.ode_residual,
            pass: residual <= tol.ode_residual && lad_err <= tol.ads_ladder && flat <= tol.ads_flatness,
            detail: format!("ODE residual {residual:.1e}; ladder vs Gamma ratio {lad_err:.1e}; flatness {flat:.2e}"),
        },
    ))
}

/// Sixth-order central differences of the radial profile.
fn fd_derivs(m: &GlobalAdsMode, s: Complex64, r: f64) -> Result<[Complex64; 3]> {
    let h = 1e-3 * r.max(0.2);
    let v = (-3..=3)
        .map(|k| Ok(radial_profile(m, s, r + k as f64 * h, Complex64::new(1.0, 0.0))?[0]))
        .collect::<Result<Vec<Complex64>>>()?;
    let d1 = (-v[0] + v[1] * 9.0 - v[2] * 45.0 + v[4] * 45.0 - v[5] * 9.0 + v[6]) / (60.0 * h);
    let d2 = (v[0] * 2.0 - v[1] * 27.0 + v[2] * 270.0 - v[3] * 490.0 + v[4] * 270.0 - v[5] * 27.0 + v[6] * 2.0)
        / (180.0 * h * h);
    Ok([v[3], d1, d2])
}

/// Circle eigenbasis route against the 2-D spectral route.
pub fn check_product(tol: &Tolerances) -> Result<CheckRecord> {
    let start = Instant::now();
    let h = 2.0 * std::f64::consts::PI / 64.0;
    let g = SpacetimeGrid::square(64, 64, h, -3.0, 0.0)?;
    let f = ScalarField::from_fn(g, |t, x| {
        (-(t * t) * 2.0).exp() * (x[0].cos() + 0.3 * (3.0 * x[0]).sin()).exp()
    });
    let mut worst: f64 = 0.0;
    for a in [0.4, 1.3] {
        let o = order(a);
        let modes = circle_box_alpha(&f, &o)?;
        let full = apply_box_alpha_spectral(&f, &o)?;
        worst = worst.max(modes.rel_l2(&full));
    }
    Ok(record(
        11,
        &["product", "spectral"],
        "relative L2",
        start,
        Outcome {
            error: worst,
            tolerance: tol.product,
            pass: worst <= tol.product,
            detail: format!("alpha 0.4, 1.3: {worst:.1e}"),
        },
    ))
}

/// Runs the selected checks (all when `which` is empty). A check that errors is
/// recorded as a failure with the error text.
pub fn run_suite(tol: &Tolerances, which: &[u32]) -> Vec<CheckRecord> {
    let all: Vec<u32> = if which.is_empty() {
        (1..=11).collect()
    } else {
        which.to_vec()
    };
    all.into_iter()
        .map(|id| {
            let start = Instant::now();
            let r = match id {
                1 => check_symbol(tol),
                2 => check_integral(tol, &[0.3, 0.4, 0.7]),
                3 => check_kernel2(tol),
                4 => check_closed_form(tol),
                5 => check_neumann(tol),
                6 => check_time_domain(tol),
                7 => check_energy(tol),
                8 => check_qcalc(tol),
                9 => check_riesz(tol),
                10 => check_global_ads(tol),
                _ => check_product(tol),
            };
            r.unwrap_or_else(|e| CheckRecord {
                id: id.to_string(),
                name: CHECK_NAMES[id as usize - 1].to_string(),
                routes: Vec::new(),
                norm: String::new(),
                error: f64::NAN,
                tolerance: f64::NAN,
                pass: false,
                wall_time_s: start.elapsed().as_secs_f64(),
                detail: format!("error: {e}"),
            })
        })
        .collect()
}

/// Identity checks of the special functions: (name, error, pass).
pub fn specfun_selftest() -> Vec<(String, f64, bool)> {
    use fracwave_core::specfun::{bessel_k, gamma, hyp2f1};
    let mut out = Vec::new();
    let mut push = |name: &str, err: f64, tol: f64| out.push((name.to_string(), err, err <= tol));
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let g_half = gamma(c(0.5, 0.0)).map_or(f64::INFINITY, |g| rel(g, c(std::f64::consts::PI.sqrt(), 0.0)));
    push("gamma(1/2) = sqrt(pi)", g_half, 1e-12);
    let z = c(0.3, 0.7);
    let rec = match (gamma(z + 1.0), gamma(z)) {
        (Ok(a), Ok(b)) => rel(a, z * b),
        _ => f64::INFINITY,
    };
    push("gamma(z+1) = z gamma(z)", rec, 1e-12);
    let mut khalf: f64 = 0.0;
    for z in [c(1.0, 0.0), c(1.0, 2.0)] {
        let exact = (std::f64::consts::PI / (2.0 * z)).sqrt() * (-z).exp();
        khalf = khalf.max(bessel_k(0.5, z).map_or(f64::INFINITY, |k| rel(k, exact)));
    }
    push("K_1/2 closed form", khalf, 1e-10);
    let mut krec: f64 = 0.0;
    for nu in [1.3, 1.7, 2.4] {
        for z in [c(0.5, 0.2), c(3.0, -1.0), c(12.0, 5.0), c(30.0, 1.0)] {
            let e = match (bessel_k(nu - 1.0, z), bessel_k(nu + 1.0, z), bessel_k(nu, z)) {
                (Ok(a), Ok(b), Ok(k)) => rel(a, b - k * (2.0 * nu) / z),
                _ => f64::INFINITY,
            };
            krec = krec.max(e);
        }
    }
    push("K recurrence", krec, 1e-9);
    let f0 = hyp2f1(0.4, 1.1, 1.7, 0.0).map_or(f64::INFINITY, |v| (v - 1.0).abs());
    push("2F1(a,b;c;0) = 1", f0, 1e-15);
    let z = -3.0f64;
    let log = hyp2f1(1.0, 1.0, 2.0, z).map_or(f64::INFINITY, |v| {
        (v + (1.0 - z).ln() / z).abs() / ((1.0 - z).ln() / -z)
    });
    push("2F1(1,1;2;z) = -ln(1-z)/z", log, 1e-10);
    out
}
