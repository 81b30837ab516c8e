use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

/// Radial and momentum solver settings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SolverConfig {
    /// Initial Lobatto grid size.
    pub grid_size: usize,
    /// Largest grid the doubling loop may reach.
    pub grid_max: usize,
    /// Convergence threshold on the eigenvalue between successive grids.
    pub energy_rtol: f64,
    /// Bound on the neglected momentum-space norm tail.
    pub quadrature_rtol: f64,
    /// Double the grid until `energy_rtol` is met.
    pub adaptive: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self { grid_size: 128, grid_max: 1024, energy_rtol: 1e-11, quadrature_rtol: 1e-10, adaptive: true }
    }
}

impl SolverConfig {
    pub fn fixed(grid_size: usize) -> Self {
        Self { grid_size, adaptive: false, ..Self::default() }
    }

    fn validate(self) -> Result<Self, Error> {
        if self.grid_size < 16 {
            return Err(Error::Config(format!("grid_size must be >= 16, got {}", self.grid_size)));
        }
        if self.grid_max < self.grid_size {
            return Err(Error::Config("grid_max must be >= grid_size".into()));
        }
        if !(self.energy_rtol > 0.0) || !(self.quadrature_rtol > 0.0) {
            return Err(Error::Config("tolerances must be positive".into()));
        }
        Ok(self)
    }
}

/// Plain-text `key = value` lines. Blank lines and `#` comments are
/// ignored; unknown keys are rejected.
impl FromStr for SolverConfig {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        let mut cfg = SolverConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected `key = value`", lineno + 1)))?;
            let key = key.trim();
            let value = value.trim();
            let bad = || Error::Config(format!("line {}: bad value `{value}` for `{key}`", lineno + 1));
            match key {
                "grid_size" => cfg.grid_size = value.parse().map_err(|_| bad())?,
                "grid_max" => cfg.grid_max = value.parse().map_err(|_| bad())?,
                "energy_rtol" => cfg.energy_rtol = value.parse().map_err(|_| bad())?,
                "quadrature_rtol" => cfg.quadrature_rtol = value.parse().map_err(|_| bad())?,
                other => return Err(Error::Config(format!("line {}: unknown key `{other}`", lineno + 1))),
            }
        }
        cfg.validate()
    }
}
