//! JSON run configuration.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    Spectral,
    Integral,
    Kernel2,
    ClosedForm,
    TimeDomain,
}

/// Grid for synthetic data when no input file is given.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub nt: usize,
    pub nx: Vec<usize>,
    pub h: f64,
    pub t0: f64,
    pub x0: Vec<f64>,
}

/// Pass thresholds of the validation suite. Unset entries keep their defaults.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Tolerances {
    pub semigroup: f64,
    pub route_b: f64,
    pub q_independence: f64,
    pub kernel2: f64,
    pub closed_form: f64,
    pub neumann: f64,
    pub time_domain: f64,
    pub solver_energy: f64,
    pub energy_ratio: f64,
    pub energy_imag: f64,
    pub qcalc: f64,
    pub riesz: f64,
    pub ode_residual: f64,
    pub ads_ladder: f64,
    pub ads_flatness: f64,
    pub product: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            semigroup: 1e-12,
            route_b: 1e-3,
            q_independence: 1e-4,
            kernel2: 2e-2,
            closed_form: 1e-3,
            neumann: 1e-6,
            time_domain: 5e-2,
            solver_energy: 1e-6,
            energy_ratio: 1e-2,
            energy_imag: 1e-10,
            qcalc: 1e-12,
            riesz: 1e-3,
            ode_residual: 1e-7,
            ads_ladder: 1e-4,
            ads_flatness: 5e-2,
            product: 1e-12,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub routes: Vec<Route>,
    #[serde(default)]
    pub alpha: Option<f64>,
    #[serde(default)]
    pub grid: Option<GridSpec>,
    #[serde(default)]
    pub q: Option<f64>,
    #[serde(default)]
    pub l: Option<u32>,
    /// Bromwich abscissa; defaults to 4/T
    #[serde(default)]
    pub eps: Option<f64>,
    #[serde(default)]
    pub tolerances: Tolerances,
    /// criterion numbers to run; all when empty
    #[serde(default)]
    pub checks: Vec<u32>,
    #[serde(default)]
    pub input: Option<PathBuf>,
    #[serde(default)]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub report: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: RunConfig = serde_json::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn validate(&self) -> Result<()> {
        if self.routes.is_empty() {
            return Err(Error::Config("at least one route is required".into()));
        }
        if let Some(a) = self.alpha {
            if !(a > 0.0) || !a.is_finite() {
                return Err(Error::Config(format!("alpha must be positive, got {a}")));
            }
        }
        if let Some(q) = self.q {
            if !(q > 0.0) || q == 1.0 {
                return Err(Error::Config("q must be positive and differ from 1".into()));
            }
        }
        if let Some(e) = self.eps {
            if !(e > 0.0) {
                return Err(Error::Config("eps must be positive".into()));
            }
        }
        if let Some(c) = self.checks.iter().find(|c| !(1..=11).contains(*c)) {
            return Err(Error::Config(format!("unknown check {c}")));
        }
        Ok(())
    }

    /// A validation run compares routes, so it needs at least two.
    pub fn require_comparison(&self) -> Result<()> {
        if self.routes.len() < 2 {
            return Err(Error::Config("validation needs at least two routes".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }
}
