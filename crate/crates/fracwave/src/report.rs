//! Validation reports: one record per check, CSV tables and JSON rollups.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckRecord {
    pub id: String,
    pub name: String,
    pub routes: Vec<String>,
    pub norm: String,
    pub error: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub wall_time_s: f64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValidationReport {
    pub schema_version: u32,
    pub records: Vec<CheckRecord>,
    pub passed: usize,
    pub failed: usize,
    pub pass: bool,
    /// resolved configuration of the run, if any
    #[serde(default)]
    pub config: Option<serde_json::Value>,
}

impl ValidationReport {
    pub fn new(records: Vec<CheckRecord>) -> Self {
        let passed = records.iter().filter(|r| r.pass).count();
        let failed = records.len() - passed;
        Self {
            schema_version: SCHEMA_VERSION,
            pass: failed == 0,
            passed,
            failed,
            records,
            config: None,
        }
    }

    /// Copy with wall times zeroed, for determinism comparisons.
    pub fn without_timing(&self) -> Self {
        let mut r = self.clone();
        for rec in &mut r.records {
            rec.wall_time_s = 0.0;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let r: ValidationReport = serde_json::from_str(text)?;
        if r.schema_version != SCHEMA_VERSION {
            return Err(Error::Format(format!(
                "report schema version {} is not {SCHEMA_VERSION}",
                r.schema_version
            )));
        }
        Ok(r)
    }

    pub fn write_csv<W: std::io::Write>(&self, w: W) -> Result<()> {
        let mut wr = csv::Writer::from_writer(w);
        wr.write_record([
            "id",
            "name",
            "routes",
            "norm",
            "error",
            "tolerance",
            "pass",
            "wall_time_s",
            "detail",
        ])?;
        for r in &self.records {
            wr.write_record([
                r.id.clone(),
                r.name.clone(),
                r.routes.join("|"),
                r.norm.clone(),
                format!("{:e}", r.error),
                format!("{:e}", r.tolerance),
                r.pass.to_string(),
                format!("{:.3}", r.wall_time_s),
                r.detail.clone(),
            ])?;
        }
        wr.flush()?;
        Ok(())
    }

    /// Writes JSON, or CSV when the path ends in `.csv`.
    pub fn save(&self, path: &Path) -> Result<()> {
        if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
            self.write_csv(std::fs::File::create(path)?)
        } else {
            std::fs::write(path, self.to_json())?;
            Ok(())
        }
    }
}

/// Concatenates reports and recomputes the pass/fail rollup.
pub fn rollup(reports: &[ValidationReport]) -> Result<ValidationReport> {
    if reports.is_empty() {
        return Err(Error::Format("no reports to merge".into()));
    }
    if reports.iter().any(|r| r.schema_version != reports[0].schema_version) {
        return Err(Error::Format("reports have mixed schema versions".into()));
    }
    Ok(ValidationReport::new(
        reports.iter().flat_map(|r| r.records.iter().cloned()).collect(),
    ))
}

pub fn load_reports(paths: &[impl AsRef<Path>]) -> Result<Vec<ValidationReport>> {
    paths
        .iter()
        .map(|p| ValidationReport::from_json(&std::fs::read_to_string(p)?))
        .collect()
}
