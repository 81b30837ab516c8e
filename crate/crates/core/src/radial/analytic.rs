//! Closed-form confined wavefunction in terms of Kummer's function, valid
//! for negative energies.

use crate::error::{Error, Result};
use crate::numerics::kummer_1f1;
use crate::state::QuantumState;

/// Unnormalized `R(r) = (2kr)^l 1F1(l + 1 - Z/k; 2l + 2; 2kr) e^{-kr}` with
/// `k = sqrt(-2E)`.
pub fn analytic_wavefunction(state: &QuantumState, energy: f64, r: f64) -> Result<f64> {
    if !(energy < 0.0) {
        return Err(Error::OutOfDomain(format!("closed form needs E < 0 (sqrt(-2E) is imaginary for E = {energy})")));
    }
    if !(r >= 0.0) || (state.r_c.is_finite() && r > state.r_c * (1.0 + 1e-12)) {
        return Err(Error::OutOfDomain(format!("r = {r} outside [0, r_c = {}]", state.r_c)));
    }
    let k = (-2.0 * energy).sqrt();
    let l = state.l as f64;
    let x = 2.0 * k * r;
    let m = kummer_1f1(l + 1.0 - state.z / k, 2.0 * l + 2.0, x)?;
    Ok(x.powi(state.l as i32) * m * (-0.5 * x).exp())
}

#[derive(Debug, Clone, Copy)]
pub struct RootConfig {
    /// Absolute tolerance on the energy.
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for RootConfig {
    fn default() -> Self {
        Self { tol: 1e-13, max_iter: 400 }
    }
}

fn wall_value(state: &QuantumState, energy: f64) -> Result<f64> {
    analytic_wavefunction(state, energy, state.r_c)
}

/// Root of `R(r_c; E) = 0` inside `bracket`, by bisection followed by an
/// Illinois (bracketed secant) polish.
pub fn analytic_energy_root(state: &QuantumState, bracket: (f64, f64), config: &RootConfig) -> Result<f64> {
    let (mut lo, mut hi) = if bracket.0 <= bracket.1 { bracket } else { (bracket.1, bracket.0) };
    if !(hi < 0.0) {
        return Err(Error::OutOfDomain(format!("bracket [{lo}, {hi}] must lie in E < 0")));
    }
    let mut flo = wall_value(state, lo)?;
    let mut fhi = wall_value(state, hi)?;
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::Bracket { lo, hi });
    }
    let mut iter = 0;
    while hi - lo > 1e-6 * hi.abs().max(1e-3) && iter < config.max_iter {
        let mid = 0.5 * (lo + hi);
        let fm = wall_value(state, mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
        iter += 1;
    }
    let mut side = 0i8;
    while hi - lo > config.tol && iter < config.max_iter {
        let x = (lo * fhi - hi * flo) / (fhi - flo);
        let x = if x > lo && x < hi { x } else { 0.5 * (lo + hi) };
        let fx = wall_value(state, x)?;
        if fx == 0.0 {
            return Ok(x);
        }
        if fx.signum() == flo.signum() {
            lo = x;
            flo = fx;
            if side == -1 {
                fhi *= 0.5;
            }
            side = -1;
        } else {
            hi = x;
            fhi = fx;
            if side == 1 {
                flo *= 0.5;
            }
            side = 1;
        }
        iter += 1;
        // Stalled secant steps shrink one side only; fall back to halving.
        if iter % 8 == 0 {
            let mid = 0.5 * (lo + hi);
            let fm = wall_value(state, mid)?;
            if fm.signum() == flo.signum() {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
                fhi = fm;
            }
        }
    }
    if hi - lo > config.tol {
        return Err(Error::NumericalFailure(format!(
            "energy root not resolved to {:e} after {iter} iterations",
            config.tol
        )));
    }
    Ok(0.5 * (lo + hi))
}

/// Scan `E` upward from the free `l`-channel threshold `-Z^2 / (2(l+1)^2)`
/// and return the interval holding the `(n - l)`-th sign change of
/// `R(r_c; E)`, if it lies below zero.
pub fn find_energy_bracket(state: &QuantumState, steps: usize) -> Result<(f64, f64)> {
    let l = state.l as f64;
    let e_lo = -state.z * state.z / (2.0 * (l + 1.0) * (l + 1.0));
    let e_hi = e_lo * 1e-9;
    let want = state.radial_nodes() + 1;
    let mut seen = 0;
    let mut prev_e = e_lo;
    let mut prev_f = wall_value(state, e_lo)?;
    for i in 1..=steps {
        let e = e_lo + (e_hi - e_lo) * i as f64 / steps as f64;
        let f = wall_value(state, e)?;
        if f.signum() != prev_f.signum() || f == 0.0 {
            seen += 1;
            if seen == want {
                return Ok((prev_e, e));
            }
        }
        prev_e = e;
        prev_f = f;
    }
    Err(Error::Bracket { lo: e_lo, hi: e_hi })
}
