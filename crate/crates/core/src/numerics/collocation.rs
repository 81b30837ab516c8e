use nalgebra::DMatrix;

use super::quadrature::{gauss_lobatto, legendre_p};
use crate::error::{invalid, Result};

/// Legendre-Gauss-Lobatto collocation grid mapped linearly onto `[0, r_c]`.
///
/// The node set includes both endpoints. `diff` is the first-derivative
/// matrix of the Lagrange cardinal functions in the mapped variable, and
/// `weights` integrate any polynomial of degree `<= 2N - 3` on `[0, r_c]`.
#[derive(Debug, Clone)]
pub struct CollocationGrid {
    pub r_c: f64,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub diff: DMatrix<f64>,
    /// Barycentric weights of the reference nodes (`1 / P_{N-1}(x_j)`).
    bary: Vec<f64>,
    reference: Vec<f64>,
}

impl CollocationGrid {
    pub fn lobatto(n: usize, r_c: f64) -> Result<Self> {
        if !(r_c > 0.0 && r_c.is_finite()) {
            return Err(invalid(format!("grid radius must be positive and finite, got {r_c}")));
        }
        let rule = gauss_lobatto(n)?;
        let deg = n - 1;
        let bary: Vec<f64> = rule.nodes.iter().map(|&x| 1.0 / legendre_p(deg, x).0).collect();
        let scale = 2.0 / r_c;
        let x = &rule.nodes;
        let mut diff = DMatrix::zeros(n, n);
        for i in 0..n {
            let mut row_sum = 0.0;
            for j in 0..n {
                if i != j {
                    let d = bary[j] / bary[i] / (x[i] - x[j]);
                    diff[(i, j)] = d * scale;
                    row_sum += d;
                }
            }
            diff[(i, i)] = -row_sum * scale;
        }
        let nodes = x.iter().map(|&x| 0.5 * r_c * (x + 1.0)).collect();
        let weights = rule.weights.iter().map(|&w| 0.5 * r_c * w).collect();
        Ok(Self { r_c, nodes, weights, diff, bary, reference: rule.nodes })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Second-derivative matrix (mapped variable), built from the first
    /// derivative matrix without a dense product.
    pub fn second_derivative(&self) -> DMatrix<f64> {
        let n = self.len();
        let x = &self.reference;
        let scale = 2.0 / self.r_c;
        let mut d2 = DMatrix::zeros(n, n);
        for i in 0..n {
            let dii = self.diff[(i, i)] / scale;
            let mut row_sum = 0.0;
            for j in 0..n {
                if i != j {
                    let dij = self.diff[(i, j)] / scale;
                    let v = 2.0 * dij * (dii - 1.0 / (x[i] - x[j]));
                    d2[(i, j)] = v * scale * scale;
                    row_sum += v;
                }
            }
            d2[(i, i)] = -row_sum * scale * scale;
        }
        d2
    }

    /// Apply the derivative matrix to nodal values.
    pub fn derivative(&self, values: &[f64]) -> Vec<f64> {
        let n = self.len();
        (0..n).map(|i| (0..n).map(|j| self.diff[(i, j)] * values[j]).sum()).collect()
    }

    /// Evaluate the interpolating polynomial through `(nodes, values)` at `r`
    /// with the second barycentric formula.
    pub fn interpolate(&self, values: &[f64], r: f64) -> f64 {
        let x = 2.0 * r / self.r_c - 1.0;
        let mut num = 0.0;
        let mut den = 0.0;
        for ((&xj, &bj), &fj) in self.reference.iter().zip(&self.bary).zip(values) {
            let dx = x - xj;
            if dx == 0.0 {
                return fj;
            }
            let t = bj / dx;
            num += t * fj;
            den += t;
        }
        num / den
    }

    /// Quadrature of nodal samples.
    pub fn integrate(&self, values: &[f64]) -> f64 {
        self.weights.iter().zip(values).map(|(w, v)| w * v).sum()
    }
}
