use fracwave::config::{Route, RunConfig};
use fracwave::report::{load_reports, rollup, CheckRecord, ValidationReport, SCHEMA_VERSION};
use fracwave::validate::run_suite;

fn record(id: &str, pass: bool) -> CheckRecord {
    CheckRecord {
        id: id.into(),
        name: format!("check {id}"),
        routes: vec!["spectral".into(), "integral".into()],
        norm: "rel_l2".into(),
        error: 1e-4,
        tolerance: 1e-3,
        pass,
        wall_time_s: 0.5,
        detail: String::new(),
    }
}

#[test]
fn config_parses_and_rejects_unknown_keys() {
    let cfg =
        RunConfig::from_json(r#"{"routes": ["spectral", "time-domain"], "alpha": 0.4, "checks": [1, 8]}"#).unwrap();
    assert_eq!(cfg.routes, vec![Route::Spectral, Route::TimeDomain]);
    assert!(cfg.require_comparison().is_ok());
    assert!(RunConfig::from_json(r#"{"routes": ["spectral"], "alpah": 0.4}"#).is_err());
    assert!(RunConfig::from_json(r#"{"routes": ["spectral"], "checks": [12]}"#).is_err());
    let one = RunConfig::from_json(r#"{"routes": ["spectral"]}"#).unwrap();
    assert!(one.require_comparison().is_err());
    let again = RunConfig::from_json(&cfg.to_json()).unwrap();
    assert_eq!(again, cfg);
}

#[test]
fn rollup_counts_and_errors() {
    let a = ValidationReport::new(vec![record("1", true), record("2", false)]);
    let b = ValidationReport::new(vec![record("3", true)]);
    let m = rollup(&[a.clone(), b]).unwrap();
    assert_eq!((m.passed, m.failed, m.pass), (2, 1, false));
    assert!(rollup(&[]).is_err());
    let mut old = a.clone();
    old.schema_version = SCHEMA_VERSION + 1;
    assert!(rollup(&[a, old]).is_err());
}

#[test]
fn report_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let r = ValidationReport::new(vec![record("1", true)]);
    let p = dir.path().join("r.json");
    r.save(&p).unwrap();
    let back = load_reports(&[&p]).unwrap();
    assert_eq!(back[0], r);
    r.save(&dir.path().join("r.csv")).unwrap();
    let text = std::fs::read_to_string(dir.path().join("r.csv")).unwrap();
    assert_eq!(text.lines().count(), 2);
    let wrong = r.to_json().replace("\"schema_version\": 1", "\"schema_version\": 99");
    assert!(ValidationReport::from_json(&wrong).is_err());
}

#[test]
fn suite_is_deterministic() {
    let tol = Default::default();
    let a = ValidationReport::new(run_suite(&tol, &[1, 8, 11])).without_timing();
    let b = ValidationReport::new(run_suite(&tol, &[1, 8, 11])).without_timing();
    assert_eq!(a.to_json(), b.to_json());
    assert!(a.pass);
}
