//! Fisher information in position and momentum space.
//!
//! For `psi = R_{nl}(r) Y_{lm}`, both measures reduce to radial moments:
//!
//! `I_r = 4<p^2> - 2(2l+1)|m| <r^-2>`, `I_p = 4<r^2> - 2(2l+1)|m| <p^-2>`,
//!
//! and their product obeys `81 / (<r^2><p^2>) <= I_r I_p <= 16 <r^2><p^2>`,
//! with equality on the right for `m = 0`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::config::SolverConfig;
use crate::error::{invalid, Error, Result};
use crate::momentum::{expectation_p, transform, MomentumConfig, MomentumSolution};
use crate::numerics::{gauss_legendre, NormalizedLegendre};
use crate::radial::{expectation_r, solve_state, ExpectationSet, RadialSolution};
use crate::state::QuantumState;

/// Relative agreement demanded between the kinetic and energy forms of `I_r`.
const ENERGY_FORM_RTOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FisherReport {
    pub state: QuantumState,
    pub i_r: f64,
    pub i_p: f64,
    pub i_t: f64,
    pub lower_bound: f64,
    pub upper_bound: f64,
    pub expectations: ExpectationSet,
}

impl FisherReport {
    pub fn from_expectations(state: QuantumState, exp: ExpectationSet) -> Result<Self> {
        let i_r = fisher_r(&exp, &state)?;
        let i_p = fisher_p(&exp, &state)?;
        let (lower_bound, upper_bound) = fisher_bounds(&exp);
        Ok(Self { state, i_r, i_p, i_t: i_r * i_p, lower_bound, upper_bound, expectations: exp })
    }

    pub fn lower_satisfied(&self) -> bool {
        self.lower_bound <= self.i_t
    }

    pub fn upper_satisfied(&self) -> bool {
        self.i_t <= self.upper_bound
    }
}

fn angular_weight(state: &QuantumState) -> f64 {
    2.0 * (2 * state.l + 1) as f64 * state.abs_m() as f64
}

fn positive(value: f64, what: &str, state: &QuantumState) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Consistency(format!(
            "{what} = {value} for n={} l={} m={} r_c={}",
            state.n, state.l, state.m, state.r_c
        )))
    }
}

pub fn fisher_r(exp: &ExpectationSet, state: &QuantumState) -> Result<f64> {
    positive(4.0 * exp.p_p2 - angular_weight(state) * exp.r_m2, "I_r", state)
}

/// `I_r` from the energy form `8E + 8Z<r^-1> - 2(2l+1)|m|<r^-2>`, checked
/// against [`fisher_r`].
pub fn fisher_r_energy_form(exp: &ExpectationSet, state: &QuantumState, energy: f64) -> Result<f64> {
    let direct = fisher_r(exp, state)?;
    let recast = 8.0 * energy + 8.0 * state.z * exp.r_m1 - angular_weight(state) * exp.r_m2;
    if (recast - direct).abs() > ENERGY_FORM_RTOL * direct.abs() {
        return Err(Error::Consistency(format!(
            "energy form of I_r gives {recast}, kinetic form {direct} (n={} l={} m={} r_c={})",
            state.n, state.l, state.m, state.r_c
        )));
    }
    Ok(recast)
}

pub fn fisher_p(exp: &ExpectationSet, state: &QuantumState) -> Result<f64> {
    positive(4.0 * exp.r_p2 - angular_weight(state) * exp.p_m2, "I_p", state)
}

/// `(81 / (<r^2><p^2>), 16 <r^2><p^2>)`.
pub fn fisher_bounds(exp: &ExpectationSet) -> (f64, f64) {
    (81.0 / (exp.r_p2 * exp.p_p2), 16.0 * exp.r_p2 * exp.p_p2)
}

/// Closed forms for the unconfined atom.
pub fn free_atom_fisher(state: &QuantumState) -> (f64, f64) {
    let n = state.n as f64;
    let l = state.l as f64;
    let m = state.abs_m() as f64;
    let z = state.z;
    let i_r = 4.0 * z * z / (n * n) * (1.0 - m / n);
    let i_p = 2.0 * n * n / (z * z) * ((5.0 * n * n + 1.0 - 3.0 * l * (l + 1.0)) - m * (8.0 * n - 6.0 * l - 3.0));
    (i_r, i_p)
}

/// Map a report for charge 1 at radius `r_c` to charge `z` at radius
/// `r_c / z`; `r^k` moments scale as `z^-k` and `p^k` moments as `z^k`.
pub fn z_scale(base: &FisherReport, z: f64) -> Result<FisherReport> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(invalid(format!("Z must be positive, got {z}")));
    }
    let e = &base.expectations;
    let z2 = z * z;
    let expectations =
        ExpectationSet { r_m2: e.r_m2 * z2, r_m1: e.r_m1 * z, r_p2: e.r_p2 / z2, p_p2: e.p_p2 * z2, p_m2: e.p_m2 / z2 };
    let state = QuantumState { z: base.state.z * z, r_c: base.state.r_c / z, ..base.state };
    let i_r = base.i_r * z2;
    let i_p = base.i_p / z2;
    Ok(FisherReport {
        state,
        i_r,
        i_p,
        i_t: i_r * i_p,
        lower_bound: base.lower_bound,
        upper_bound: base.upper_bound,
        expectations,
    })
}

/// `int |grad rho|^2 / rho d^3r` evaluated from the density itself rather
/// than from moments. The radial part uses the collocation derivative of
/// `u`; the polar part integrates `(g')^2 / g` for `g = Theta^2` on panels
/// that stop `1e-8` short of every zero of `Theta`.
pub fn direct_fisher_oracle(sol: &RadialSolution, state: &QuantumState) -> Result<f64> {
    let l = state.l as usize;
    let theta = NormalizedLegendre::new(l, state.m as i64)?;

    // rho_r = R^2, r^2 (rho_r')^2 / rho_r = 4 (u' - u/r)^2; the integrand
    // vanishes at r = 0.
    let du = sol.u_derivative();
    let radial: f64 = (1..sol.grid.len())
        .map(|i| {
            let r = sol.grid.nodes[i];
            let g = du[i] - sol.u_values[i] / r;
            sol.grid.weights[i] * 4.0 * g * g
        })
        .sum();

    let gap = 1e-8;
    let mut breaks = vec![0.0];
    breaks.extend(theta.zeros());
    breaks.push(PI);
    let polar = |order: usize| -> Result<f64> {
        let rule = gauss_legendre(order)?;
        let mut acc = 0.0;
        for w in breaks.windows(2) {
            let (a, b) = (w[0] + gap, w[1] - gap);
            acc += rule.integrate(a, b, |t| {
                let v = theta.value(t);
                let g = v * v;
                let dg = 2.0 * v * theta.derivative(t);
                dg * dg / g * t.sin()
            });
        }
        Ok(acc)
    };
    let coarse = polar(40)?;
    let fine = polar(64)?;
    if (coarse - fine).abs() > 1e-9 * fine.abs().max(1.0) {
        return Err(Error::NumericalFailure(format!("polar Fisher integral not converged: {coarse} vs {fine}")));
    }
    Ok(radial + expectation_r(sol, -2) * fine)
}

/// Report plus the diagnostics of the solves behind it.
#[derive(Debug, Clone, Serialize)]
pub struct Evaluation {
    pub report: FisherReport,
    pub energy: f64,
    pub grid_size: usize,
    pub norm_deficit: f64,
    /// `<p^2>` from the momentum-space quadrature.
    pub momentum_p2: f64,
}

/// Solve, transform and evaluate one state.
pub fn evaluate(state: &QuantumState, cfg: &SolverConfig) -> Result<Evaluation> {
    let mut out = evaluate_m_family(state, &[state.m], cfg)?;
    Ok(out.remove(0))
}

/// Evaluate several `m` of one `(n, l, Z, r_c)`; the radial solve and the
/// momentum transform do not depend on `m` and are shared.
pub fn evaluate_m_family(state: &QuantumState, ms: &[i32], cfg: &SolverConfig) -> Result<Vec<Evaluation>> {
    let sol = solve_state(state, cfg)?;
    let mcfg = MomentumConfig { tail_tol: cfg.quadrature_rtol, ..MomentumConfig::default() };
    let msol = transform(&sol, &mcfg)?;
    ms.iter().map(|&m| evaluate_solved(&sol, &msol, &state.with_m(m)?)).collect()
}

/// Fisher report of `state` from an existing radial and momentum solution.
pub fn evaluate_solved(sol: &RadialSolution, msol: &MomentumSolution, state: &QuantumState) -> Result<Evaluation> {
    let exp = ExpectationSet::new(sol, expectation_p(msol, -2)?);
    let report = FisherReport::from_expectations(*state, exp)?;
    fisher_r_energy_form(&exp, state, sol.energy)?;
    Ok(Evaluation {
        report,
        energy: sol.energy,
        grid_size: sol.grid_size,
        norm_deficit: msol.norm_deficit,
        momentum_p2: expectation_p(msol, 2)?,
    })
}
