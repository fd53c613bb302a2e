use fracwave_core::ads::{
    global_ads_multiplier, global_ads_multiplier_printed, principal_symbol_ratio, radial_neumann_ladder,
    radial_ode_residual, radial_profile, GlobalAdsMode,
};
use fracwave_core::{Complex64, FractionalOrder};

fn mode(n: u32, a: f64, lam: f64) -> GlobalAdsMode {
    GlobalAdsMode::new(n, FractionalOrder::new(a).unwrap(), lam).unwrap()
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

#[test]
fn multiplier_reference_values() {
    let s = Complex64::new(0.1, 2.0);
    let m0 = mode(3, 0.4, 0.0);
    let v = global_ads_multiplier(&m0, s).unwrap();
    assert!(rel(v, Complex64::new(4.591_424_497_099_584, 3.969_011_353_091_978)) < 1e-11);
    let p = global_ads_multiplier_printed(&m0, s).unwrap();
    assert!(rel(p, Complex64::new(-18.287_896_345_397_384, -14.805_990_931_096_703)) < 1e-11);
    let m3 = mode(3, 0.4, 3.0);
    let v = global_ads_multiplier(&m3, s).unwrap();
    assert!(rel(v, Complex64::new(1.558_906_222_967_958_2, 0.038_754_660_608_277_39)) < 1e-11);
}

/// Sixth-order central differences of the profile itself.
fn fd_derivs(m: &GlobalAdsMode, s: Complex64, r: f64) -> [Complex64; 3] {
    let h = 1e-3 * r.max(0.2);
    let f = |x: f64| radial_profile(m, s, x, Complex64::new(1.0, 0.0)).unwrap()[0];
    let v: Vec<Complex64> = (-3..=3).map(|k| f(r + k as f64 * h)).collect();
    let d1 = (-v[0] + v[1] * 9.0 - v[2] * 45.0 + v[4] * 45.0 - v[5] * 9.0 + v[6]) / (60.0 * h);
    let d2 = (v[0] * 2.0 - v[1] * 27.0 + v[2] * 270.0 - v[3] * 490.0 + v[4] * 270.0 - v[5] * 27.0 + v[6] * 2.0)
        / (180.0 * h * h);
    [v[3], d1, d2]
}

#[test]
fn profile_solves_radial_equation() {
    for (n, a, lam) in [(3, 0.4, 3.0), (3, 0.4, 0.0), (2, 0.3, 2.0), (4, 1.3, 2.0)] {
        let m = mode(n, a, lam);
        let s = Complex64::new(0.1, 2.0);
        for r in [0.5, 1.0, 2.0, 5.0] {
            let phi = fd_derivs(&m, s, r);
            let res = radial_ode_residual(&m, s, r, phi);
            let scale = phi[0].norm() * (1.0 + r * r) / (r * r).min(1.0);
            assert!(
                res.norm() / scale < 1e-7,
                "n {n} lam {lam} r {r}: {:e}",
                res.norm() / scale
            );
            let exact = radial_profile(&m, s, r, Complex64::new(1.0, 0.0)).unwrap();
            let res = radial_ode_residual(&m, s, r, exact);
            assert!(res.norm() / scale < 1e-10);
        }
    }
}

#[test]
fn opposite_phase_fails_radial_equation() {
    // the reading (1+r²)^{+is/2} does not solve the equation
    let m = mode(3, 0.4, 3.0);
    let s = Complex64::new(0.1, 2.0);
    let r = 1.0;
    let [p0, p1, p2] = radial_profile(&m, s, r, Complex64::new(1.0, 0.0)).unwrap();
    let i = Complex64::i();
    let e = (i * s * 2f64.ln()).exp();
    let q0 = p0 * e;
    let de = i * s * (2.0 * r / 2.0);
    let q1 = p1 * e + q0 * de;
    let dde = i * s * ((2.0 - 2.0 * r * r) / 4.0);
    let q2 = p2 * e + p1 * e * de * 2.0 + p0 * e * (de * de + dde);
    let res = radial_ode_residual(&m, s, r, [q0, q1, q2]);
    assert!(res.norm() / q0.norm() > 1e-2);
}

#[test]
fn ladder_matches_gamma_ratio() {
    for (n, a, lam, s) in [
        (3, 0.4, 3.0, Complex64::new(0.1, 2.0)),
        (3, 0.3, 0.0, Complex64::new(0.2, -1.0)),
        (2, 0.7, 1.0, Complex64::new(0.5, 3.0)),
    ] {
        let m = mode(n, a, lam);
        let lad = radial_neumann_ladder(&m, s, 16.0, 2.0, 7).unwrap();
        let g = global_ads_multiplier(&m, s).unwrap();
        assert!(rel(lad, g) < 1e-4, "n {n} a {a}: {:e}", rel(lad, g));
        let p = global_ads_multiplier_printed(&m, s).unwrap();
        assert!(rel(lad, p) > 1e-2);
    }
    assert!(radial_neumann_ladder(&mode(3, 1.3, 1.0), Complex64::new(0.1, 1.0), 16.0, 2.0, 6).is_err());
}

fn flatness(r: &[Complex64]) -> f64 {
    let last = r[r.len() - 1];
    r.iter().map(|v| (v - last).norm() / last.norm()).fold(0.0, f64::max)
}

#[test]
fn principal_symbol_flattens() {
    let taus = [8.0, 16.0, 32.0, 64.0, 128.0];
    for a in [0.4, 1.3] {
        let m = mode(3, a, 3.0);
        let r = principal_symbol_ratio(&m, 0.01, &taus).unwrap();
        let changes: Vec<f64> = r.windows(2).map(|w| (w[1] - w[0]).norm() / w[1].norm()).collect();
        for c in changes.windows(2) {
            assert!(c[1] < c[0], "a {a}: {changes:?}");
        }
        // last decade: 12.8..128
        assert!(flatness(&r[2..]) < 0.05, "a {a}: {:?}", r);
    }
}

#[test]
fn conjugate_symmetry_random() {
    let m = mode(4, 0.3, 2.0);
    for k in 0..20 {
        let s = Complex64::new(0.05 + 0.1 * k as f64, -3.0 + 0.37 * k as f64);
        let a = global_ads_multiplier(&m, s.conj()).unwrap();
        let b = global_ads_multiplier(&m, s).unwrap().conj();
        assert!(rel(a, b) < 1e-12);
    }
}
