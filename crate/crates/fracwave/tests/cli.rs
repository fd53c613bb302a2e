use std::path::Path;
use std::process::{Command, Output};

use fracwave::grid::{ScalarField, SpacetimeGrid};
use fracwave::io::{read_field, write_field};

fn fracwave(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fracwave"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap_or(-1)
}

fn bump_file(dir: &Path, name: &str) -> String {
    let g = SpacetimeGrid::square(32, 32, 0.25, -4.0, -4.0).unwrap();
    let f = ScalarField::from_fn(g, |t, x| (-(t * t + x[0] * x[0]) / 2.0).exp());
    let p = dir.join(name);
    write_field(&f, &p).unwrap();
    p.to_str().unwrap().to_string()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn apply_and_golden() {
    let dir = tempfile::tempdir().unwrap();
    let input = bump_file(dir.path(), "f.csv");
    let out = dir.path().join("g.fwf");
    let golden = dir.path().join("golden.fwf");
    let o = fracwave(&[
        "apply",
        "--alpha",
        "0.4",
        "--in",
        &input,
        "--out",
        s(&out),
        "--golden",
        s(&golden),
        "--bless",
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(read_field(&out).unwrap().values, read_field(&golden).unwrap().values);
    let o = fracwave(&["apply", "--alpha", "0.4", "--in", &input, "--golden", s(&golden)]);
    assert_eq!(code(&o), 0);
    let o = fracwave(&["apply", "--alpha", "0.41", "--in", &input, "--golden", s(&golden)]);
    assert_eq!(code(&o), 2);
}

#[test]
fn usage_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let input = bump_file(dir.path(), "f.fwf");
    assert_eq!(code(&fracwave(&["apply", "--alpha", "-1", "--in", &input])), 1);
    assert_eq!(
        code(&fracwave(&["apply", "--alpha", "0.4", "--in", "/no/such/file.csv"])),
        1
    );
    assert_eq!(
        code(&fracwave(&[
            "apply", "--route", "integral", "--alpha", "0.4", "--in", &input
        ])),
        1
    );
    assert_eq!(code(&fracwave(&["frobnicate"])), 1);
    assert_eq!(code(&fracwave(&["report"])), 1);
}

#[test]
fn integral_route_at_probes() {
    let dir = tempfile::tempdir().unwrap();
    let input = bump_file(dir.path(), "f.fwf");
    let pts = dir.path().join("p.csv");
    std::fs::write(&pts, "t,x1\n0.0,0.0\n1.0,0.5\n").unwrap();
    let o = fracwave(&[
        "apply",
        "--route",
        "integral",
        "--alpha",
        "0.3",
        "--in",
        &input,
        "--points",
        s(&pts),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().count(), 3);
    assert!(text.starts_with("t,x1,value,indicator"));
}

#[test]
fn validate_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let one = dir.path().join("one.json");
    std::fs::write(&one, r#"{"routes": ["spectral"], "checks": [1]}"#).unwrap();
    assert_eq!(code(&fracwave(&["validate", "--config", s(&one)])), 1);

    let ok = dir.path().join("ok.json");
    let report = dir.path().join("report.json");
    std::fs::write(&ok, r#"{"routes": ["spectral", "closed-form"], "checks": [1, 8]}"#).unwrap();
    let o = fracwave(&["validate", "--config", s(&ok), "--report", s(&report)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let rep = std::fs::read_to_string(&report).unwrap();
    assert!(rep.contains("\"closed-form\""));

    let strict = dir.path().join("strict.json");
    std::fs::write(
        &strict,
        r#"{"routes": ["spectral", "closed-form"], "checks": [8], "tolerances": {"qcalc": 1e-30}}"#,
    )
    .unwrap();
    assert_eq!(code(&fracwave(&["validate", "--config", s(&strict)])), 2);

    let merged = dir.path().join("merged.csv");
    let o = fracwave(&["report", s(&report), s(&report), "--out", s(&merged)]);
    assert_eq!(code(&o), 0);
    assert_eq!(std::fs::read_to_string(&merged).unwrap().lines().count(), 5);
}

#[test]
fn energy_and_geometry_print_csv() {
    let dir = tempfile::tempdir().unwrap();
    let input = bump_file(dir.path(), "f.fwf");
    let o = fracwave(&["energy", "--alpha", "0.4", "--in", &input, "--eps", "0.1,0.05"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8(o.stdout)
        .unwrap()
        .starts_with("lhs,rhs_re,rhs_im,ratio"));

    let o = fracwave(&[
        "geometry",
        "global-ads",
        "--n",
        "3",
        "--alpha",
        "0.4",
        "--lambda",
        "3",
        "--tau-ladder",
        "8,16",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(String::from_utf8(o.stdout).unwrap().lines().count(), 3);

    let modes = dir.path().join("m.csv");
    let mut text = String::from("mode,lambda,t,re,im\n");
    for m in [0, 1] {
        for i in 0..8 {
            text.push_str(&format!(
                "{m},{m},{},{},0\n",
                i as f64 * 0.5,
                (-(i as f64 - 4.0).powi(2)).exp()
            ));
        }
    }
    std::fs::write(&modes, text).unwrap();
    let o = fracwave(&["geometry", "product", "--alpha", "0.4", "--in", s(&modes)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(String::from_utf8(o.stdout).unwrap().lines().count(), 17);
}

#[test]
fn dtn_closed_form_writes_field() {
    let dir = tempfile::tempdir().unwrap();
    let input = bump_file(dir.path(), "f.fwf");
    let out = dir.path().join("d.fwf");
    let o = fracwave(&["dtn", "--alpha", "0.4", "--in", &input, "--out", s(&out)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(read_field(&out).unwrap().values.len(), 32 * 32);
}

#[test]
fn specfun_selftest_passes() {
    let o = fracwave(&["specfun-selftest"]);
    assert_eq!(code(&o), 0);
    assert!(!String::from_utf8(o.stdout).unwrap().contains("FAIL"));
}
