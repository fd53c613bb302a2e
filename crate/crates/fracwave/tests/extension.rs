use fracwave::extension::{dtn_spacetime, energy_check, extrapolate_to_zero, LaplaceLine};
use fracwave::grid::{ScalarField, SpacetimeGrid};
use fracwave::spectral::wave_apply;
use fracwave::FractionalOrder;

fn grid() -> SpacetimeGrid {
    SpacetimeGrid::square(64, 64, 0.25, -4.0, -8.0).unwrap()
}

fn bump(tc: f64) -> impl Fn(f64, &[f64]) -> f64 {
    move |t, x| (-((t - tc).powi(2) + x[0] * x[0]) / 0.5).exp()
}

#[test]
fn alpha_one_is_wave_operator() {
    let f = ScalarField::from_fn(grid(), bump(0.0));
    let o = FractionalOrder::new(1.0).unwrap();
    let d = dtn_spacetime(&f, &o, 0.05).unwrap();
    let w = wave_apply(&f).unwrap();
    assert!(d.rel_l2(&w) < 1e-8, "{}", d.rel_l2(&w));
}

#[test]
fn time_translation_equivariance() {
    let o = FractionalOrder::new(0.4).unwrap();
    let g = grid();
    let a = dtn_spacetime(&ScalarField::from_fn(g.clone(), bump(-1.0)), &o, 0.1).unwrap();
    let b = dtn_spacetime(&ScalarField::from_fn(g.clone(), bump(1.0)), &o, 0.1).unwrap();
    // shift by 8 grid rows
    let row = 64;
    let mut err: f64 = 0.0;
    for i in 0..56 {
        for j in 0..row {
            err = err.max((a.values[i * row + j] - b.values[(i + 8) * row + j]).abs());
        }
    }
    assert!(err < 1e-7 * a.max_abs(), "{err}");
}

#[test]
fn eps_guard() {
    let g = grid();
    assert!(LaplaceLine::new(&g, 2.0).is_err());
    assert!(LaplaceLine::new(&g, LaplaceLine::default_eps(&g)).is_ok());
}

#[test]
fn extrapolation_recovers_limit() {
    let pts: Vec<(f64, f64)> = [0.4, 0.2, 0.1].iter().map(|&h| (h, 2.0 + 3.0 * h - h * h)).collect();
    assert!((extrapolate_to_zero(&pts) - 2.0).abs() < 1e-12);
}

#[test]
fn energy_is_quadratic() {
    let g = SpacetimeGrid::new(32, vec![32], 0.5, vec![0.6], -8.0, vec![-9.6]).unwrap();
    let f = ScalarField::from_fn(g.clone(), |t, x| (-(t * t + x[0] * x[0]) / 2.0).exp());
    let f2 = ScalarField::new(g, f.values.iter().map(|v| 2.0 * v).collect()).unwrap();
    let o = FractionalOrder::new(0.4).unwrap();
    let a = energy_check(&f, &o, &[0.04, 0.02]).unwrap();
    let b = energy_check(&f2, &o, &[0.04, 0.02]).unwrap();
    assert!((b.lhs - 4.0 * a.lhs).abs() < 1e-9 * a.lhs.abs());
    assert!((b.ratio - a.ratio).abs() < 1e-9);
}
