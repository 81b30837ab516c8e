use std::f64::consts::PI;

use crate::error::{invalid, Result};

/// Nodes and weights of a rule on the reference interval [-1, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Integrate `f` over `[a, b]` with the rule mapped affinely.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        let mut acc = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(mid + half * x);
        }
        acc * half
    }

    /// Nodes and weights mapped onto `[a, b]`.
    pub fn mapped(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        self.nodes.iter().zip(&self.weights).map(move |(x, w)| (mid + half * x, w * half))
    }
}

/// Evaluate `P_n(x)` and `P_{n-1}(x)` by the three-term recurrence.
pub fn legendre_p(n: usize, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 2..=n {
        let kf = k as f64;
        let next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = next;
    }
    (p, p_prev)
}

/// n-point Gauss-Legendre rule. Nodes are found by Newton iteration on
/// `P_n` from Chebyshev starting points.
pub fn gauss_legendre(n: usize) -> Result<QuadratureRule> {
    if n < 2 {
        return Err(invalid(format!("Gauss-Legendre rule needs n >= 2, got {n}")));
    }
    let nf = n as f64;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let half = n.div_ceil(2);
    for i in 0..half {
        // Chebyshev-Gauss node as the initial guess, descending from +1.
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, p1) = legendre_p(n, x);
            dp = nf * (x * p - p1) / (x * x - 1.0);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (p, p1) = legendre_p(n, x);
        dp = if p.is_finite() { nf * (x * p - p1) / (x * x - 1.0) } else { dp };
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[n - 1 - i] = x;
        nodes[i] = -x;
        weights[n - 1 - i] = w;
        weights[i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    Ok(QuadratureRule { nodes, weights })
}

/// n-point Legendre-Gauss-Lobatto rule on [-1, 1], nodes ascending and
/// including both endpoints.
pub fn gauss_lobatto(n: usize) -> Result<QuadratureRule> {
    if n < 3 {
        return Err(invalid(format!("Gauss-Lobatto rule needs n >= 3, got {n}")));
    }
    let deg = n - 1;
    let degf = deg as f64;
    let lam = degf * (degf + 1.0);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    nodes[0] = -1.0;
    nodes[n - 1] = 1.0;
    // Interior nodes are the roots of P'_deg.
    for j in 1..=(deg / 2) {
        let mut x = (PI * j as f64 / degf).cos();
        for _ in 0..100 {
            let (p, p1) = legendre_p(deg, x);
            let one_m_x2 = 1.0 - x * x;
            let dp = degf * (p1 - x * p) / one_m_x2;
            let d2p = (2.0 * x * dp - lam * p) / one_m_x2;
            let dx = dp / d2p;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[n - 1 - j] = x;
        nodes[j] = -x;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    for (x, w) in nodes.iter().zip(weights.iter_mut()) {
        let (p, _) = legendre_p(deg, *x);
        *w = 2.0 / (lam * p * p);
    }
    Ok(QuadratureRule { nodes, weights })
}
