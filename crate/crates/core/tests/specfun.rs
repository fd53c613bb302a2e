use std::f64::consts::PI;

use fracwave_core::specfun::{bessel_k, gamma, hyp2f1, hyp2f1_complex, ln_gamma};
use fracwave_core::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

/// Stirling series at z + N, walked back with the recurrence.
fn gamma_stirling(z: Complex64) -> Complex64 {
    let shift = 20;
    let w = z + shift as f64;
    let inv = w.inv();
    let inv2 = inv * inv;
    // Bernoulli terms B_{2k}/(2k(2k−1) w^{2k−1})
    let coeffs = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360360.0,
        1.0 / 156.0,
    ];
    let mut series = c(0.0, 0.0);
    let mut p = inv;
    for k in coeffs {
        series += p * k;
        p *= inv2;
    }
    let lg = (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + series;
    let mut g = lg.exp();
    for k in 0..shift {
        g /= z + k as f64;
    }
    g
}

#[test]
fn gamma_against_stirling() {
    for z in [c(1.0, 1.0), c(0.3, 0.7), c(2.5, -3.0), c(7.2, 0.1), c(0.9, 12.0)] {
        let g = gamma(z).unwrap();
        let o = gamma_stirling(z);
        assert!(rel(g, o) < 1e-12, "{z}: {}", rel(g, o));
    }
}

#[test]
fn gamma_one_plus_i_reference() {
    let g = gamma(c(1.0, 1.0)).unwrap();
    let reference = c(0.498_015_668_118_356_04, -0.154_949_828_301_810_69);
    assert!(rel(g, reference) < 1e-13);
}

#[test]
fn gamma_reflection_region() {
    for z in [c(-0.5, 0.0), c(-2.3, 0.4), c(-5.7, -1.1)] {
        let g = gamma(z).unwrap();
        let prod = g * gamma(c(1.0, 0.0) - z).unwrap() * (z * PI).sin();
        assert!((prod - c(PI, 0.0)).norm() < 1e-12);
    }
}

#[test]
fn ln_gamma_large_imaginary() {
    let z = c(1.3, 80.0);
    let a = ln_gamma(z + 1.0).unwrap() - ln_gamma(z).unwrap();
    let d = a.exp() - z;
    assert!(d.norm() / z.norm() < 1e-11);
}

#[test]
fn bessel_reference_values() {
    let table = [
        (0.3, c(1e-3, 5e-4), c(13.783_090_806_032_893, -1.993_036_209_673_643_7)),
        (
            0.3,
            c(1.0, 2.0),
            c(-0.247_432_569_317_136_23, -0.174_460_780_399_942_85),
        ),
        (
            0.3,
            c(5.0, -7.0),
            c(0.001_077_458_558_508_598_5, 0.002_652_928_046_570_504),
        ),
        (
            0.3,
            c(30.0, 10.0),
            c(-1.543_035_096_797_729e-14, 1.395_744_180_405_790_1e-14),
        ),
        (0.7, c(1e-3, 5e-4), c(116.342_862_119_054_17, -39.150_704_747_981_86)),
        (0.7, c(1.0, 2.0), c(-0.270_381_986_342_273_3, -0.165_381_271_039_557_46)),
        (1.3, c(1e-3, 5e-4), c(6_253.897_758_693_168, -4_303.749_878_839_225)),
        (
            1.3,
            c(5.0, -7.0),
            c(0.000_937_796_703_497_876_1, 0.002_877_469_935_699_142_7),
        ),
        (2.4, c(1e-3, 5e-4), c(17_576_899.955_888_814, -35_652_047.311_178_47)),
        (2.4, c(1.0, 2.0), c(-0.581_783_693_068_294_9, 0.163_645_275_799_159_1)),
        (2.4, c(45.0, 0.0), c(5.681_928_325_940_361e-21, 0.0)),
    ];
    for (nu, z, v) in table {
        let k = bessel_k(nu, z).unwrap();
        assert!(rel(k, v) < 1e-10, "nu {nu} z {z}: {}", rel(k, v));
    }
}

/// K_ν(z) = √π (z/2)^ν / Γ(ν+½) ∫₁^∞ e^{−zw}(w²−1)^{ν−½} dw, with w = cosh u.
fn k_cosh_integral(nu: f64, z: Complex64) -> Complex64 {
    let h = 0.002;
    let mut acc = c(0.0, 0.0);
    let mut u: f64 = h * 0.5;
    while u < 12.0 {
        let w = u.cosh();
        let sh = u.sinh();
        acc += (-z * w).exp() * sh.powf(2.0 * nu);
        u += h;
    }
    acc *= h;
    let g = gamma(c(nu + 0.5, 0.0)).unwrap().re;
    acc * PI.sqrt() * (z * 0.5).powf(nu) / g
}

#[test]
fn bessel_against_cosh_integral() {
    for nu in [0.6, 1.3, 2.4] {
        for z in [c(0.5, 0.2), c(3.0, -4.0), c(9.0, 2.0)] {
            let k = bessel_k(nu, z).unwrap();
            let o = k_cosh_integral(nu, z);
            assert!(rel(k, o) < 1e-6, "nu {nu} z {z}: {}", rel(k, o));
        }
    }
}

#[test]
fn bessel_small_argument_law() {
    let z = c(1e-4, 0.0);
    for nu in [0.9, 1.3, 2.4] {
        let lhs = z.powf(nu) * bessel_k(nu, z).unwrap();
        let lead = 2f64.powf(nu - 1.0) * gamma(c(nu, 0.0)).unwrap().re;
        assert!((lhs.re - lead).abs() / lead < 1e-6, "nu {nu}");
    }
}

#[test]
fn bessel_recurrence() {
    for nu in [1.3, 1.7, 2.4] {
        for z in [
            c(0.4, 0.1),
            c(1.9, 0.3),
            c(2.5, -1.0),
            c(12.0, 6.0),
            c(25.0, -3.0),
            c(48.0, 0.0),
        ] {
            let lhs = bessel_k(nu - 1.0, z).unwrap();
            let rhs = bessel_k(nu + 1.0, z).unwrap() - bessel_k(nu, z).unwrap() * (2.0 * nu) / z;
            assert!(rel(lhs, rhs) < 1e-9, "nu {nu} z {z}: {}", rel(lhs, rhs));
        }
    }
}

#[test]
fn bessel_decreasing_on_real_axis() {
    let mut last = f64::INFINITY;
    let mut x: f64 = 1.0;
    while x <= 50.0 {
        let k = bessel_k(0.4, c(x, 0.0)).unwrap().re;
        assert!(k < last && k > 0.0);
        last = k;
        x *= 1.1;
    }
}

#[test]
fn hyp2f1_log_form() {
    let v = hyp2f1(1.0, 1.0, 2.0, -3.0).unwrap();
    let e = -(4f64).ln() / -3.0;
    assert!((v - e).abs() / e < 1e-12);
}

/// RK4 on the hypergeometric equation in x = ln(1 − z), started from the
/// plain Gauss series at z = −1/2.
fn hyp2f1_by_ode(a: f64, b: f64, c0: f64, z_end: f64) -> f64 {
    let z0 = -0.5f64;
    let mut f = 0.0;
    let mut df = 0.0;
    let mut t = 1.0;
    for k in 0..400 {
        let kf = k as f64;
        f += t;
        df += kf * t / z0;
        t *= (a + kf) * (b + kf) / ((c0 + kf) * (kf + 1.0)) * z0;
    }
    // state y = (F, dF/dz)
    let rhs = |z: f64, y: [f64; 2]| -> [f64; 2] {
        let d2 = (a * b * y[0] - (c0 - (a + b + 1.0) * z) * y[1]) / (z * (1.0 - z));
        [y[1], d2]
    };
    let x0 = (1.0 - z0).ln();
    let x1 = (1.0 - z_end).ln();
    let steps = 20000;
    let h = (x1 - x0) / steps as f64;
    let mut y = [f, df];
    let mut x = x0;
    let deriv = |x: f64, y: [f64; 2]| -> [f64; 2] {
        let z = 1.0 - x.exp();
        let dzdx = -x.exp();
        let r = rhs(z, y);
        [r[0] * dzdx, r[1] * dzdx]
    };
    for _ in 0..steps {
        let k1 = deriv(x, y);
        let k2 = deriv(x + h / 2.0, [y[0] + h / 2.0 * k1[0], y[1] + h / 2.0 * k1[1]]);
        let k3 = deriv(x + h / 2.0, [y[0] + h / 2.0 * k2[0], y[1] + h / 2.0 * k2[1]]);
        let k4 = deriv(x + h, [y[0] + h * k3[0], y[1] + h * k3[1]]);
        y[0] += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
        y[1] += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
        x += h;
    }
    y[0]
}

#[test]
fn hyp2f1_against_ode() {
    let v = hyp2f1(0.4, 1.1, 1.7, -100.0).unwrap();
    let o = hyp2f1_by_ode(0.4, 1.1, 1.7, -100.0);
    assert!((v - o).abs() / o.abs() < 1e-10, "{v} {o}");
    let reference = 0.212_413_407_375_787_62;
    assert!((v - reference).abs() / reference < 1e-12);
}

#[test]
fn hyp2f1_continuous_across_minus_one() {
    let a = c(0.35, -0.8);
    let b = c(1.15, -0.8);
    let cc = c(2.0, 0.0);
    let l = hyp2f1_complex(a, b, cc, -1.0 + 1e-9).unwrap();
    let r = hyp2f1_complex(a, b, cc, -1.0 - 1e-9).unwrap();
    assert!(rel(l, r) < 1e-8);
}

#[test]
fn hyp2f1_large_negative_argument() {
    for z in [-1e3, -1e6] {
        let v = hyp2f1(0.25, 0.9, 1.4, z).unwrap();
        let o = hyp2f1_by_ode(0.25, 0.9, 1.4, z);
        assert!((v - o).abs() / o.abs() < 1e-8, "{z}: {v} {o}");
    }
}
