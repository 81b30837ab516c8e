//! Confined radial Schrödinger problem on a Lobatto collocation grid.
//!
//! The reduced function `u(r) = r R(r)` obeys
//! `-u''/2 + [l(l+1)/(2r^2) - Z/r] u = E u` on `[0, r_c]` with
//! `u(0) = u(r_c) = 0`. Deleting the endpoint rows and columns imposes both
//! Dirichlet conditions, and a similarity with the square roots of the
//! Lobatto weights turns the collocation operator into a symmetric matrix.

mod analytic;

use std::sync::Arc;

use nalgebra::DMatrix;
use serde::Serialize;

pub use analytic::{analytic_energy_root, analytic_wavefunction, find_energy_bracket, RootConfig};

use crate::config::SolverConfig;
use crate::error::{invalid, Error, Result};
use crate::numerics::{sym_eig, CollocationGrid};
use crate::state::QuantumState;

/// Interior Hamiltonian in the weight-symmetrized basis together with the
/// grid it lives on. Row `i` of the matrix belongs to grid node `i + 1`.
pub fn build_hamiltonian(l: u32, z: f64, r_c: f64, n: usize) -> Result<(DMatrix<f64>, CollocationGrid)> {
    if n < 16 {
        return Err(invalid(format!("grid size must be >= 16, got {n}")));
    }
    if !(r_c > 0.0) || !r_c.is_finite() {
        return Err(invalid(format!("r_c must be positive and finite, got {r_c}")));
    }
    let grid = CollocationGrid::lobatto(n, r_c)?;
    let d2 = grid.second_derivative();
    let dim = n - 2;
    let sqrt_w: Vec<f64> = grid.weights.iter().map(|w| w.sqrt()).collect();
    let centrifugal = (l * (l + 1)) as f64 * 0.5;
    let mut h = DMatrix::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            h[(i, j)] = -0.5 * sqrt_w[i + 1] * d2[(i + 1, j + 1)] / sqrt_w[j + 1];
        }
        let r = grid.nodes[i + 1];
        h[(i, i)] += centrifugal / (r * r) - z / r;
    }
    // W^{1/2} D2 W^{-1/2} is symmetric in exact arithmetic; average away
    // the rounding-level asymmetry.
    let h = (&h + h.transpose()) * 0.5;
    Ok((h, grid))
}

/// One converged confined eigenstate.
#[derive(Debug, Clone)]
pub struct RadialSolution {
    pub state: QuantumState,
    pub energy: f64,
    pub grid: Arc<CollocationGrid>,
    /// `u(r)` at every grid node, endpoints included.
    pub u_values: Vec<f64>,
    /// `|int u^2 dr - 1|`.
    pub norm_residual: f64,
    pub grid_size: usize,
}

impl RadialSolution {
    pub fn radii(&self) -> &[f64] {
        &self.grid.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.grid.weights
    }

    /// `u'(r)` at the grid nodes.
    pub fn u_derivative(&self) -> Vec<f64> {
        self.grid.derivative(&self.u_values)
    }

    /// `u'(r_c)`, the slope at the wall.
    pub fn wall_slope(&self) -> f64 {
        let n = self.grid.len();
        let row = self.grid.diff.row(n - 1);
        row.iter().zip(&self.u_values).map(|(d, u)| d * u).sum()
    }

    /// Interpolated `u(r)` for `0 <= r <= r_c`.
    pub fn u_at(&self, r: f64) -> f64 {
        self.grid.interpolate(&self.u_values, r)
    }

    /// `<p^2>` from the kinetic quadrature `int u'^2 dr + l(l+1) <r^-2>`.
    pub fn kinetic_p2(&self) -> f64 {
        let du = self.u_derivative();
        let grad: f64 = self.grid.weights.iter().zip(&du).map(|(w, d)| w * d * d).sum();
        let l = self.state.l as f64;
        grad + l * (l + 1.0) * expectation_r(self, -2)
    }

    /// `<p^2> = 2(E + Z <r^-1>)`, the energy form of the same quantity.
    pub fn energy_p2(&self) -> f64 {
        2.0 * (self.energy + self.state.z * expectation_r(self, -1))
    }
}

fn solve_on_grid(state: &QuantumState, n: usize) -> Result<RadialSolution> {
    let (h, grid) = build_hamiltonian(state.l, state.z, state.r_c, n)?;
    let idx = state.radial_nodes();
    if idx >= h.nrows() {
        return Err(invalid(format!("grid of {n} points cannot hold radial level {}", idx + 1)));
    }
    let eig = sym_eig(&h)?;
    let v = eig.vector(idx);
    let mut u = vec![0.0; n];
    for i in 0..n - 2 {
        u[i + 1] = v[i] / grid.weights[i + 1].sqrt();
    }
    // Fix the overall sign so u > 0 next to the origin.
    let peak = u.iter().fold(0.0f64, |a, b| a.max(b.abs()));
    if let Some(first) = u.iter().find(|x| x.abs() > 1e-6 * peak) {
        if *first < 0.0 {
            u.iter_mut().for_each(|x| *x = -*x);
        }
    }
    let norm: f64 = grid.weights.iter().zip(&u).map(|(w, x)| w * x * x).sum();
    Ok(RadialSolution {
        state: *state,
        energy: eig.values[idx],
        grid: Arc::new(grid),
        u_values: u,
        norm_residual: (norm - 1.0).abs(),
        grid_size: n,
    })
}

/// Solve for the `(n - l)`-th eigenvalue of the given `l` channel.
///
/// With `config.adaptive` the grid doubles from `grid_size` until two
/// successive eigenvalues agree to `energy_rtol * max(|E|, 1)`.
pub fn solve_state(state: &QuantumState, config: &SolverConfig) -> Result<RadialSolution> {
    if state.is_free() {
        return Err(invalid("solve_state needs a finite confinement radius"));
    }
    let mut sol = solve_on_grid(state, config.grid_size)?;
    if config.adaptive {
        loop {
            let next = sol.grid_size * 2;
            if next > config.grid_max {
                return Err(Error::NumericalFailure(format!(
                    "energy not converged to {:e} with grid_max = {} (E = {})",
                    config.energy_rtol, config.grid_max, sol.energy
                )));
            }
            let refined = solve_on_grid(state, next)?;
            let delta = (refined.energy - sol.energy).abs();
            sol = refined;
            if delta <= config.energy_rtol * sol.energy.abs().max(1.0) {
                break;
            }
        }
    }
    let nodes = count_nodes(&sol);
    if nodes != state.radial_nodes() {
        return Err(Error::Consistency(format!(
            "state n={} l={} selected an eigenvector with {nodes} nodes, expected {}",
            state.n,
            state.l,
            state.radial_nodes()
        )));
    }
    Ok(sol)
}

/// `<r^k> = int u^2 r^k dr`. At `r = 0` the integrand takes its limit,
/// which is `u'(0)^2` for `k = -2, l = 0` and zero otherwise.
pub fn expectation_r(sol: &RadialSolution, k: i32) -> f64 {
    let g = &sol.grid;
    let mut acc = 0.0;
    for i in 1..g.len() {
        let r = g.nodes[i];
        let u = sol.u_values[i];
        acc += g.weights[i] * u * u * r.powi(k);
    }
    if k == -2 && sol.state.l == 0 {
        let row = g.diff.row(0);
        let du0: f64 = row.iter().zip(&sol.u_values).map(|(d, u)| d * u).sum();
        acc += g.weights[0] * du0 * du0;
    }
    acc
}

/// Strict sign changes of `u` over the interior nodes. Values below
/// `1e-8` of the peak are skipped so numerical noise in exponentially
/// decayed regions does not register as a node.
pub fn count_nodes(sol: &RadialSolution) -> usize {
    let peak = sol.u_values.iter().fold(0.0f64, |a, b| a.max(b.abs()));
    let cut = 1e-8 * peak;
    let mut last = 0.0f64;
    let mut changes = 0;
    for &u in &sol.u_values[1..sol.u_values.len() - 1] {
        if u.abs() <= cut {
            continue;
        }
        if last != 0.0 && last.signum() != u.signum() {
            changes += 1;
        }
        last = u;
    }
    changes
}

/// Radial and momentum expectation values entering the Fisher measures.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExpectationSet {
    pub r_m2: f64,
    pub r_m1: f64,
    pub r_p2: f64,
    pub p_p2: f64,
    pub p_m2: f64,
}

impl ExpectationSet {
    /// Combine the position-space moments of `sol` with `<p^-2>` from the
    /// momentum transform.
    pub fn new(sol: &RadialSolution, p_m2: f64) -> Self {
        Self {
            r_m2: expectation_r(sol, -2),
            r_m1: expectation_r(sol, -1),
            r_p2: expectation_r(sol, 2),
            p_p2: sol.kinetic_p2(),
            p_m2,
        }
    }

    pub fn all_positive(&self) -> bool {
        [self.r_m2, self.r_m1, self.r_p2, self.p_p2, self.p_m2].iter().all(|v| *v > 0.0)
    }
}
