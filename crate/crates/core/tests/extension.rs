use fracwave_core::extension::{
    dtn_value, energy_mode, neumann_extract_profile, profile_eval, ExtensionProfile, LadderSpec,
};
use fracwave_core::symbol::{dtn_multiplier, sigma, sigma_eps};
use fracwave_core::{Complex64, FractionalOrder};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn worst_extraction(alpha: f64, seed: u64) -> f64 {
    let order = FractionalOrder::new(alpha).unwrap();
    let spec = LadderSpec::for_order(&order);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let s = Complex64::new(rng.gen_range(0.05..1.0), rng.gen_range(-5.0..5.0));
        let xi = rng.gen_range(0.0..5.0);
        let f = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let p = ExtensionProfile::on_ladder(&order, s, xi, f, &spec).unwrap();
        let v = neumann_extract_profile(&p).unwrap();
        let e = dtn_value(&order, s, xi, f);
        worst = worst.max((v - e).norm() / e.norm());
    }
    worst
}

#[test]
fn extraction_matches_multiplier() {
    for alpha in [0.3, 0.7, 1.3] {
        let w = worst_extraction(alpha, 7);
        assert!(w < 1e-6, "alpha {alpha}: {w:e}");
    }
}

#[test]
fn extraction_second_order_is_precision_limited() {
    // m = 2: the y^{2α} part is swamped by the analytic part in double precision
    let w = worst_extraction(2.4, 7);
    assert!(w < 5e-3, "{w:e}");
}

#[test]
fn extraction_rejects_bad_ladder() {
    let order = FractionalOrder::new(0.4).unwrap();
    let s = Complex64::new(0.3, 1.0);
    let mut p =
        ExtensionProfile::on_ladder(&order, s, 1.0, Complex64::new(1.0, 0.0), &LadderSpec::for_order(&order)).unwrap();
    p.y_samples[3].0 *= 1.01;
    assert!(neumann_extract_profile(&p).is_err());
    p.y_samples.truncate(2);
    assert!(neumann_extract_profile(&p).is_err());
}

#[test]
fn multiplier_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let order = FractionalOrder::new(0.4).unwrap();
    for _ in 0..100 {
        let tau = rng.gen_range(-10.0..10.0);
        let xi = rng.gen_range(0.0..10.0);
        let eps = rng.gen_range(1e-3..1.0);
        let a = sigma_eps(&order, tau, xi, eps);
        let b = dtn_multiplier(&order, Complex64::new(eps, tau), xi);
        assert_eq!(a, b);
    }
    let one = FractionalOrder::new(1.0).unwrap();
    let s = Complex64::new(0.25, 1.5);
    let d = dtn_multiplier(&one, s, 0.0);
    assert!((d - Complex64::new(0.0625 - 2.25, 0.75)).norm() < 1e-14);
}

#[test]
fn multiplier_eps_limit_first_order() {
    let order = FractionalOrder::new(0.7).unwrap();
    let (tau, xi) = (2.2, 1.1);
    let exact = sigma(&order, tau, xi);
    let e: Vec<f64> = [1e-2, 1e-3, 1e-4]
        .iter()
        .map(|&eps| (dtn_multiplier(&order, Complex64::new(eps, tau), xi) - exact).norm())
        .collect();
    assert!((e[0] / e[1] - 10.0).abs() < 0.5);
    assert!((e[1] / e[2] - 10.0).abs() < 0.5);
}

#[test]
fn profile_small_y_rate() {
    // deviation from the boundary value shrinks like y^{2α₀}
    let order = FractionalOrder::new(0.3).unwrap();
    let s = Complex64::new(0.4, 1.2);
    let f = Complex64::new(1.0, 0.0);
    let d1 = (profile_eval(&order, s, 0.8, f, 1e-4).unwrap() - f).norm();
    let d2 = (profile_eval(&order, s, 0.8, f, 1e-5).unwrap() - f).norm();
    let rate = (d1 / d2).log10();
    assert!((rate - 0.6).abs() < 0.02, "{rate}");
}

#[test]
fn energy_ratio_is_the_same_constant_for_all_modes() {
    let order = FractionalOrder::new(0.4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let target = -1.0 / order.c_alpha;
    for _ in 0..10 {
        let s = Complex64::new(rng.gen_range(0.05..0.5), rng.gen_range(-4.0..4.0));
        let xi = rng.gen_range(0.0..4.0);
        let f = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let lhs = energy_mode(&order, s, xi, f, 0.05).unwrap();
        let rhs = dtn_value(&order, s, xi, f) * f.conj();
        let ratio = lhs / rhs;
        assert!((ratio - target).norm() < 1e-7 * target.abs(), "{ratio}");
    }
}
