use fracwave::grid::{ScalarField, SpacetimeGrid};
use fracwave::solver::{boundary_fit_extract, homogeneous_energy, solve_time_domain, FitBasis, FitPlan, SolverGrid};
use fracwave::{Error, FractionalOrder};

fn order(a: f64) -> FractionalOrder {
    FractionalOrder::new(a).unwrap()
}

fn small_grid() -> SpacetimeGrid {
    SpacetimeGrid::square(32, 32, 0.25, -4.0, -4.0).unwrap()
}

fn small_solver(g: &SpacetimeGrid) -> SolverGrid {
    SolverGrid {
        y_max: 12.0,
        sponge: 4.0,
        x_pad: 16,
        ..SolverGrid::for_grid(g)
    }
}

#[test]
fn zero_data_gives_zero() {
    let g = small_grid();
    let f = ScalarField::zeros(g.clone());
    let u = solve_time_domain(&f, &order(0.4), &small_solver(&g)).unwrap();
    assert!(u.values.iter().all(|v| *v == 0.0));
}

#[test]
fn cfl_violation_rejected() {
    let g = small_grid();
    let f = ScalarField::from_fn(g.clone(), |t, x| (-(t * t + x[0] * x[0]) * 4.0).exp());
    let sg = SolverGrid {
        substeps: 1,
        dy: 0.05,
        ..small_solver(&g)
    };
    assert!(matches!(
        solve_time_domain(&f, &order(0.4), &sg),
        Err(Error::Cfl { .. })
    ));
}

#[test]
fn order_above_one_rejected() {
    let g = small_grid();
    let f = ScalarField::zeros(g.clone());
    assert!(solve_time_domain(&f, &order(1.3), &small_solver(&g)).is_err());
}

#[test]
fn fit_recovers_synthetic_coefficients() {
    let o = order(0.4);
    let y: Vec<f64> = (0..8).map(|i| (i as f64 + 0.5) * 0.1).collect();
    let trace: Vec<f64> = y.iter().map(|&y| 1.5 + 0.3 * y.powf(0.8)).collect();
    let fit = FitPlan::new(&o, &y, 4, FitBasis::Minimal).unwrap().fit(&trace);
    assert!((fit.b - 0.3).abs() < 1e-9, "{}", fit.b);
    assert!((fit.even[0] - 1.5).abs() < 1e-9);
    assert!(fit.residual < 1e-12);
    let trace: Vec<f64> = y.iter().map(|&y| 1.5 - 0.7 * y * y + 0.3 * y.powf(0.8)).collect();
    let ext = FitPlan::new(&o, &y, 4, FitBasis::Extended).unwrap().fit(&trace);
    assert!((ext.b - 0.3).abs() < 1e-8);
}

#[test]
fn trace_approaches_data() {
    let o = order(0.4);
    let mut errs = Vec::new();
    for h in [0.5, 0.25] {
        let n = (8.0 / h) as usize;
        let g = SpacetimeGrid::square(n, n, h, -4.0, -4.0).unwrap();
        let f = ScalarField::from_fn(g.clone(), |t, x| (-(t * t + x[0] * x[0]) / 2.0).exp());
        let sg = SolverGrid::for_grid(&g);
        let u = solve_time_domain(&f, &o, &sg).unwrap();
        let (lam, fits) = boundary_fit_extract(&u, &o, 4, FitBasis::Extended).unwrap();
        assert!(lam.values.iter().all(|v| v.is_finite()));
        let e = fits
            .iter()
            .zip(&f.values)
            .map(|(p, v)| (p.even[0] - v).abs())
            .fold(0.0, f64::max);
        errs.push(e);
    }
    assert!(errs[1] < errs[0], "{errs:?}");
}

#[test]
fn energy_conserved_then_absorbed() {
    let o = order(0.4);
    let g = SpacetimeGrid::square(16, 32, 0.25, 0.0, -4.0).unwrap();
    let sg = SolverGrid {
        y_max: 6.0,
        sponge: 4.0,
        x_pad: 8,
        ..SolverGrid::for_grid(&g)
    };
    let phi = |x: &[f64], y: f64| (-(x[0] * x[0] + (y - 2.0).powi(2)) * 2.0).exp();
    let free = homogeneous_energy(&o, &g, &sg, false, 200, phi).unwrap();
    let drift = free.iter().map(|e| (e - free[0]).abs()).fold(0.0, f64::max) / free[0];
    assert!(drift < 1e-10, "{drift}");
    let damped = homogeneous_energy(&o, &g, &sg, true, 400, phi).unwrap();
    assert!(damped.windows(2).all(|w| w[1] <= w[0] * (1.0 + 1e-12)));
    assert!(damped[damped.len() - 1] < damped[0]);
}
