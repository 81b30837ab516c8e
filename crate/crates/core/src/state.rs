use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Label of one hydrogen-like state inside a hard sphere of radius `r_c`.
/// An infinite `r_c` denotes the free atom.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuantumState {
    pub n: u32,
    pub l: u32,
    pub m: i32,
    pub z: f64,
    pub r_c: f64,
}

impl QuantumState {
    pub fn new(n: u32, l: u32, m: i32, z: f64, r_c: f64) -> Result<Self> {
        if n == 0 {
            return Err(invalid("n must be >= 1"));
        }
        if l >= n {
            return Err(invalid(format!("l = {l} must be < n = {n}")));
        }
        if m.unsigned_abs() > l {
            return Err(invalid(format!("|m| = {} must be <= l = {l}", m.unsigned_abs())));
        }
        if !(z > 0.0) || !z.is_finite() {
            return Err(invalid(format!("Z must be positive and finite, got {z}")));
        }
        if !(r_c > 0.0) {
            return Err(invalid(format!("r_c must be positive, got {r_c}")));
        }
        Ok(Self { n, l, m, z, r_c })
    }

    /// Hydrogen (Z = 1) state at confinement radius `r_c`.
    pub fn hydrogen(n: u32, l: u32, m: i32, r_c: f64) -> Result<Self> {
        Self::new(n, l, m, 1.0, r_c)
    }

    pub fn free(n: u32, l: u32, m: i32, z: f64) -> Result<Self> {
        Self::new(n, l, m, z, f64::INFINITY)
    }

    pub fn is_free(&self) -> bool {
        self.r_c.is_infinite()
    }

    pub fn abs_m(&self) -> u32 {
        self.m.unsigned_abs()
    }

    /// Number of radial nodes, `n - l - 1`.
    pub fn radial_nodes(&self) -> usize {
        (self.n - self.l - 1) as usize
    }

    pub fn with_m(self, m: i32) -> Result<Self> {
        Self::new(self.n, self.l, m, self.z, self.r_c)
    }

    pub fn with_z(self, z: f64) -> Result<Self> {
        Self::new(self.n, self.l, self.m, z, self.r_c)
    }

    pub fn with_r_c(self, r_c: f64) -> Result<Self> {
        Self::new(self.n, self.l, self.m, self.z, r_c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(QuantumState::new(2, 1, 1, 1.0, 1.0).is_ok());
        assert!(QuantumState::new(2, 2, 0, 1.0, 1.0).is_err());
        assert!(QuantumState::new(3, 1, -2, 1.0, 1.0).is_err());
        assert!(QuantumState::new(1, 0, 0, 0.0, 1.0).is_err());
        assert!(QuantumState::new(1, 0, 0, 1.0, -1.0).is_err());
        assert!(QuantumState::new(0, 0, 0, 1.0, 1.0).is_err());
        assert!(QuantumState::free(1, 0, 0, 2.0).unwrap().is_free());
    }
}
