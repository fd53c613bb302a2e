use fracwave::grid::{ScalarField, SpacetimeGrid};
use fracwave::hypersingular::{
    box_alpha_integral, box_alpha_kernel2, kernel2_constant, kernel2_printed_constant, null_difference, riesz_constant,
    riesz_potential, NullKernelSpec, QuadratureSpec,
};
use fracwave::FractionalOrder;
use fracwave_core::qcalc::QScheme;

fn bump_field(tc: f64) -> ScalarField {
    let g = SpacetimeGrid::square(64, 64, 0.25, -8.0, -8.0).unwrap();
    ScalarField::from_fn(g, move |t, x| (-((t - tc).powi(2) + x[0] * x[0]) / 2.0).exp())
}

#[test]
fn half_integer_order_rejected() {
    let f = bump_field(0.0);
    let o = FractionalOrder::new(0.5).unwrap();
    assert!(QScheme::new(&o, 2, 2.0, 2).is_err());
    let s = QScheme::new(&FractionalOrder::new(0.3).unwrap(), 2, 2.0, 2).unwrap();
    assert!(box_alpha_integral(&f, &o, &s, &QuadratureSpec::default(), &[vec![0.0, 0.0]]).is_err());
}

#[test]
fn null_difference_kills_affine() {
    let f = |t: f64, x: f64| 3.0 - 2.0 * t + 0.7 * x;
    for (s, y) in [(0.3, 0.1), (2.0, -1.5), (0.01, 0.009)] {
        assert!(null_difference(f, 0.4, -0.2, s, y).abs() < 1e-13);
    }
    let quad = |t: f64, x: f64| t * t - x * x;
    assert!(null_difference(quad, 0.4, -0.2, 0.3, 0.1).abs() > 1e-3);
}

#[test]
fn kernel2_constants() {
    for a in [0.2, 0.4, 0.7] {
        let c = kernel2_constant(a).unwrap();
        let printed = kernel2_printed_constant(a);
        let expect = riesz_constant(2, -a);
        assert!((c - expect).abs() < 1e-12 * expect.abs());
        assert!((printed * 2f64.powf(1.0 + 2.0 * a) - c).abs() < 1e-12 * c);
    }
}

#[test]
fn kernel2_rejects_three_dimensions() {
    let g = SpacetimeGrid::new(8, vec![8, 8], 0.5, vec![0.5, 0.5], 0.0, vec![0.0, 0.0]).unwrap();
    let f = ScalarField::zeros(g);
    let o = FractionalOrder::new(0.4).unwrap();
    assert!(box_alpha_kernel2(&f, &o, &NullKernelSpec::default(), &[vec![1.0, 1.0, 1.0]]).is_err());
}

#[test]
fn riesz_positive_and_causal() {
    let f = bump_field(1.0);
    let pts = vec![vec![-5.0, 0.0], vec![0.0, 0.0], vec![2.0, 1.0], vec![4.0, -2.0]];
    let v = riesz_potential(&f, 0.8, &QuadratureSpec::default(), &pts).unwrap();
    assert!(v[0].abs() < 1e-6, "value before the support: {}", v[0]);
    assert!(v[1..].iter().all(|x| *x > 0.0), "{v:?}");
    assert!(riesz_potential(&f, -0.1, &QuadratureSpec::default(), &pts).is_err());
}

#[test]
fn quadrature_spec_checked() {
    let f = bump_field(0.0);
    let o = FractionalOrder::new(0.3).unwrap();
    let s = QScheme::new(&o, 2, 2.0, 2).unwrap();
    let bad = QuadratureSpec {
        hu: 5.0,
        ..QuadratureSpec::default()
    };
    assert!(box_alpha_integral(&f, &o, &s, &bad, &[vec![0.0, 0.0]]).is_err());
    assert!(box_alpha_integral(&f, &o, &s, &QuadratureSpec::default(), &[vec![0.0]]).is_err());
}

#[test]
fn kernel2_matches_spectral_at_center() {
    let f = bump_field(0.0);
    let o = FractionalOrder::new(0.4).unwrap();
    let k = box_alpha_kernel2(&f, &o, &NullKernelSpec::default(), &[vec![0.0, 0.0]]).unwrap()[0];
    let a = fracwave::symbol::apply_box_alpha_reference(&f, &o, 4).unwrap();
    let centre = a.values[32 * 64 + 32];
    assert!((k - centre).abs() < 1e-2 * centre.abs(), "{k} vs {centre}");
}
