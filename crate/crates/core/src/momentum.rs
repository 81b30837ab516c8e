//! Momentum-space radial function by the spherical-Bessel transform
//!
//! `P(p) = sqrt(2/pi) int_0^{r_c} u(r) r j_l(p r) dr`,
//!
//! normalized so `int P^2 p^2 dp = 1`. The phase `(-i)^l` is dropped.
//!
//! Small and moderate momenta are integrated directly with Gauss-Legendre
//! panels no wider than a quarter period of `j_l(p r)`. Past a switch
//! momentum, `P(p)` is evaluated from its large-`p` expansion: the wall
//! contributes `~ u'(r_c) sin(p r_c - l pi/2) / p^3` plus higher orders
//! obtained from the Taylor series of `u` about `r_c`, and the origin
//! contributes the odd powers of the Frobenius series of `u`. Both are
//! derived from the radial equation, so they only need `E`, `u'(r_c)` and
//! the Frobenius amplitude.

use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::numerics::{gauss_legendre, spherical_bessel_j, QuadratureRule};
use crate::radial::RadialSolution;
use crate::state::QuantumState;

/// Taylor orders kept in the wall expansion.
const WALL_ORDERS: usize = 24;
const ORIGIN_TERMS: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MomentumConfig {
    /// The neglected norm beyond `p_max` must fall below this.
    pub tail_tol: f64,
    /// Largest tolerated `|1 - int P^2 p^2 dp|` before renormalization.
    pub norm_target: f64,
    /// Lower bound on `p_switch * r_c`.
    pub switch_product: f64,
    pub max_doublings: u32,
}

impl Default for MomentumConfig {
    fn default() -> Self {
        Self { tail_tol: 1e-10, norm_target: 1e-8, switch_product: 200.0, max_doublings: 48 }
    }
}

/// Large-`p` expansion of the unnormalized `P(p)`.
#[derive(Debug, Clone)]
struct Asymptotic {
    l: usize,
    r_c: f64,
    /// `G_k^{(j)}(r_c)` for `G_k = u r^{-k}`, `k = 0..=l`.
    wall: Vec<Vec<f64>>,
    /// Hankel coefficients with the sign pattern of the sin/cos split.
    hankel: Vec<f64>,
    /// `(power, coefficient)` pairs: origin part is `sum c p^{-power}`.
    origin: Vec<(i32, f64)>,
    wall_slope: f64,
}

impl Asymptotic {
    fn new(sol: &RadialSolution) -> Self {
        let st = &sol.state;
        let l = st.l as usize;
        let lf = l as f64;
        let r_c = st.r_c;
        let e = sol.energy;
        let z = st.z;
        let d = sol.wall_slope();

        // Taylor coefficients of u(r_c + t) from u'' = q u.
        let cent = lf * (lf + 1.0);
        let q: Vec<f64> = (0..WALL_ORDERS)
            .map(|m| {
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                let mut v =
                    cent * sign * (m as f64 + 1.0) / r_c.powi(m as i32 + 2) - 2.0 * z * sign / r_c.powi(m as i32 + 1);
                if m == 0 {
                    v -= 2.0 * e;
                }
                v
            })
            .collect();
        let mut taylor = [0.0; WALL_ORDERS];
        taylor[1] = d;
        for j in 0..WALL_ORDERS - 2 {
            let s: f64 = (0..=j).map(|m| q[m] * taylor[j - m]).sum();
            taylor[j + 2] = s / ((j + 2) as f64 * (j + 1) as f64);
        }
        let mut wall = Vec::with_capacity(l + 1);
        for k in 0..=l {
            // [t^m] (r_c + t)^{-k}
            let mut h = [0.0; WALL_ORDERS];
            h[0] = r_c.powi(-(k as i32));
            for m in 1..WALL_ORDERS {
                h[m] = -h[m - 1] * (k + m - 1) as f64 / (m as f64 * r_c);
            }
            let mut fact = 1.0;
            let derivs: Vec<f64> = (0..WALL_ORDERS)
                .map(|j| {
                    if j > 0 {
                        fact *= j as f64;
                    }
                    let g: f64 = (0..=j).map(|m| taylor[j - m] * h[m]).sum();
                    g * fact
                })
                .collect();
            wall.push(derivs);
        }

        // j_l(x) = [sin(x - l pi/2) sum_even (-1)^{k/2} a_k x^{-k}
        //         + cos(x - l pi/2) sum_odd (-1)^{(k-1)/2} a_k x^{-k}] / x
        let mut hankel = Vec::with_capacity(l + 1);
        let mut a = 1.0;
        for k in 0..=l {
            if k > 0 {
                a *= ((l + k) * (l + 1 - k)) as f64 / (2.0 * k as f64);
            }
            let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
            hankel.push(sign * a);
        }

        let origin = origin_terms(sol);
        Self { l, r_c, wall, hankel, origin, wall_slope: d }
    }

    fn wall_part(&self, p: f64) -> f64 {
        let phase = p * self.r_c - self.l as f64 * FRAC_PI_2;
        let (sp, cp) = phase.sin_cos();
        let inv_p = 1.0 / p;
        let mut total = 0.0;
        for (k, derivs) in self.wall.iter().enumerate() {
            // c = sum_j (-1)^j G^{(j)} (-i)^{j+1} p^{-(j+1)}
            let (mut re, mut im) = (0.0, 0.0);
            let mut pw = inv_p;
            for (j, &g) in derivs.iter().enumerate() {
                let v = if j % 2 == 0 { g } else { -g } * pw;
                match (j + 1) % 4 {
                    0 => re += v,
                    1 => im -= v,
                    2 => re -= v,
                    _ => im += v,
                }
                pw *= inv_p;
            }
            let s_re = cp * re - sp * im;
            let s_im = sp * re + cp * im;
            let t = if k % 2 == 0 { s_im } else { s_re };
            total += self.hankel[k] * inv_p.powi(k as i32 + 1) * t;
        }
        (2.0 / PI).sqrt() * total
    }

    fn origin_part(&self, p: f64) -> f64 {
        self.origin.iter().map(|&(pow, c)| c * p.powi(-pow)).sum()
    }

    fn value(&self, p: f64) -> f64 {
        self.wall_part(p) + self.origin_part(p)
    }
}

/// Odd-power Frobenius terms of `u` mapped through
/// `int_0^inf r^mu j_l(p r) dr = sqrt(pi) 2^{mu-1} Gamma((l+mu+1)/2) / (Gamma((l-mu+2)/2) p^{mu+1})`.
fn origin_terms(sol: &RadialSolution) -> Vec<(i32, f64)> {
    let st = &sol.state;
    if st.z == 0.0 {
        return Vec::new();
    }
    let l = st.l as usize;
    let lf = l as f64;
    let e = sol.energy;
    let z = st.z;
    let mut c = vec![0.0; ORIGIN_TERMS + 1];
    c[0] = 1.0;
    c[1] = -z / (lf + 1.0);
    for k in 2..=ORIGIN_TERMS {
        let kf = k as f64;
        c[k] = (-2.0 * z * c[k - 1] - 2.0 * e * c[k - 2]) / (kf * (kf + 2.0 * lf + 1.0));
    }
    // Amplitude from matching the series to u at a point inside its
    // comfortable convergence range.
    let kappa = (2.0 * e.abs() + z * z).sqrt();
    let r_star = (0.5 * st.r_c).min((lf + 1.0) / kappa);
    let series: f64 = c.iter().enumerate().map(|(k, ck)| ck * r_star.powi((l + 1 + k) as i32)).sum();
    let amp = sol.u_at(r_star) / series;

    let mut out = Vec::new();
    // R_1 = -2^{l+1} (l+1)!
    let mut ratio = -(2f64).powi(l as i32 + 1) * (1..=l + 1).map(|v| v as f64).product::<f64>();
    let mut k = 1;
    while k <= ORIGIN_TERMS {
        out.push(((l + 3 + k) as i32, (2.0 / PI).sqrt() * amp * c[k] * ratio));
        let kf = k as f64;
        ratio *= 4.0 * (lf + (3.0 + kf) / 2.0) * (-(kf + 2.0) / 2.0);
        k += 2;
    }
    out
}

/// Direct-quadrature tier: valid for `p <= p_hi`.
#[derive(Debug, Clone)]
struct Tier {
    p_hi: f64,
    radii: Vec<f64>,
    /// `sqrt(2/pi) w_i u(r_i) r_i`
    weighted: Vec<f64>,
}

impl Tier {
    fn value(&self, l: usize, p: f64) -> f64 {
        self.radii.iter().zip(&self.weighted).map(|(r, f)| f * spherical_bessel_j(l, p * r)).sum()
    }
}

#[derive(Debug, Clone)]
struct Transformer {
    l: usize,
    tiers: Vec<Tier>,
    asym: Asymptotic,
    p_switch: f64,
}

impl Transformer {
    fn raw(&self, p: f64) -> f64 {
        if p > self.p_switch {
            return self.asym.value(p);
        }
        let tier = self.tiers.iter().find(|t| p <= t.p_hi).unwrap_or_else(|| self.tiers.last().unwrap());
        tier.value(self.l, p)
    }
}

/// Momentum-space radial function of one state.
#[derive(Debug, Clone)]
pub struct MomentumSolution {
    pub state: QuantumState,
    /// Quadrature nodes on `[0, p_switch]`.
    pub p_grid: Vec<f64>,
    pub p_weights: Vec<f64>,
    /// Normalized `P(p)` on `p_grid`.
    pub p_values: Vec<f64>,
    /// Direct quadrature is used below this momentum, the expansion above.
    pub p_switch: f64,
    /// Truncation momentum of the tail quadrature.
    pub p_max: f64,
    /// `|1 - int P^2 p^2 dp|` before renormalization.
    pub norm_deficit: f64,
    /// `|P_direct - P_expansion|` at `p_switch`, relative to `max |P|`.
    pub switch_mismatch: f64,
    /// `[k = -2, 0, 2]` moments over `[p_switch, p_max]`, normalized.
    tail: [f64; 3],
    /// Analytic estimates beyond `p_max`, normalized.
    remainder: [f64; 3],
    scale: f64,
    transformer: Arc<Transformer>,
}

/// A moment `<p^k>` together with the analytic tail estimate it includes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Moment {
    pub value: f64,
    pub tail_remainder: f64,
}

impl MomentumSolution {
    /// Normalized `P(p)` at any `p >= 0`.
    pub fn value_at(&self, p: f64) -> f64 {
        self.scale * self.transformer.raw(p)
    }

    pub fn moment(&self, k: i32) -> Result<Moment> {
        let slot = match k {
            -2 => 0,
            0 => 1,
            2 => 2,
            _ => return Err(invalid(format!("momentum moment k = {k} not supported (use -2, 0, 2)"))),
        };
        let head: f64 = self
            .p_grid
            .iter()
            .zip(&self.p_weights)
            .zip(&self.p_values)
            .map(|((p, w), v)| w * v * v * p.powi(2 + k))
            .sum();
        Ok(Moment { value: head + self.tail[slot] + self.remainder[slot], tail_remainder: self.remainder[slot] })
    }

    pub fn wall_slope(&self) -> f64 {
        self.transformer.asym.wall_slope
    }
}

/// `<p^k>` for `k` in `{-2, 0, 2}`.
pub fn expectation_p(msol: &MomentumSolution, k: i32) -> Result<f64> {
    Ok(msol.moment(k)?.value)
}

fn panels(a: f64, b: f64, max_width: f64) -> impl Iterator<Item = (f64, f64)> {
    let count = ((b - a) / max_width).ceil().max(1.0) as usize;
    let h = (b - a) / count as f64;
    (0..count).map(move |i| (a + i as f64 * h, a + (i + 1) as f64 * h))
}

fn effective_extent(sol: &RadialSolution) -> f64 {
    let peak = sol.u_values.iter().fold(0.0f64, |a, b| a.max(b.abs()));
    let last = sol.u_values.iter().rposition(|u| u.abs() > 1e-15 * peak).unwrap_or(sol.u_values.len() - 1);
    let idx = (last + 1).min(sol.u_values.len() - 1);
    sol.radii()[idx]
}

/// Transform a normalized radial solution to momentum space.
pub fn transform(sol: &RadialSolution, cfg: &MomentumConfig) -> Result<MomentumSolution> {
    let st = sol.state;
    let l = st.l as usize;
    let r_c = st.r_c;
    let rule = gauss_legendre(16)?;
    let kappa = (2.0 * sol.energy.abs() + st.z * st.z).sqrt();
    let r_top = effective_extent(sol);

    let p_switch = (cfg.switch_product / r_c).max(10.0 * kappa);
    let tiers = build_tiers(sol, &rule, kappa, r_top, p_switch);
    let asym = Asymptotic::new(sol);
    let transformer = Transformer { l, tiers, asym, p_switch };

    // Head: direct quadrature on [0, p_switch]; the first panel is graded
    // geometrically toward p = 0.
    let mut p_grid = Vec::new();
    let mut p_weights = Vec::new();
    let width = PI / r_top;
    let first_end = width.min(p_switch);
    let mut edges = vec![0.0, first_end / 8.0, first_end / 4.0, first_end / 2.0, first_end];
    edges.dedup();
    for w in edges.windows(2) {
        for (p, wt) in rule.mapped(w[0], w[1]) {
            p_grid.push(p);
            p_weights.push(wt);
        }
    }
    if first_end < p_switch {
        for (a, b) in panels(first_end, p_switch, width) {
            for (p, wt) in rule.mapped(a, b) {
                p_grid.push(p);
                p_weights.push(wt);
            }
        }
    }
    let raw_values: Vec<f64> = p_grid.iter().map(|&p| transformer.raw(p)).collect();
    let head = |k: i32| -> f64 {
        p_grid.iter().zip(&p_weights).zip(&raw_values).map(|((p, w), v)| w * v * v * p.powi(2 + k)).sum()
    };
    let head_moments = [head(-2), head(0), head(2)];

    let peak = raw_values.iter().fold(0.0f64, |a, b| a.max(b.abs()));
    let direct_at_switch = transformer.tiers.last().map(|t| t.value(l, p_switch)).unwrap_or(0.0);
    let switch_mismatch = (direct_at_switch - transformer.asym.value(p_switch)).abs() / peak;

    // Tail: the expansion on [p_switch, p_max], p_max doubled until the
    // neglected norm is below tail_tol.
    let remainder_at = |p: f64| -> [f64; 3] {
        let d2 = transformer.asym.wall_slope.powi(2);
        let po = transformer.asym.origin_part(p).powi(2);
        let lf = l as f64;
        let mut out = [0.0; 3];
        for (slot, k) in [-2i32, 0, 2].into_iter().enumerate() {
            let kf = k as f64;
            out[slot] = d2 / PI * p.powi(k - 3) / (3.0 - kf) + po * p.powi(3 + k) / (2.0 * lf + 5.0 - kf);
        }
        out
    };
    let mut p_max = (10.0 * kappa).max(20.0).max(2.0 * p_switch);
    let mut doublings = 0;
    while remainder_at(p_max)[1] > cfg.tail_tol {
        p_max *= 2.0;
        doublings += 1;
        if doublings > cfg.max_doublings {
            return Err(Error::NumericalFailure(format!(
                "momentum tail still {:e} at p_max = {p_max:e}",
                remainder_at(p_max)[1]
            )));
        }
    }
    let mut tail = [0.0; 3];
    let tail_width = PI / r_c.max(r_top);
    for (a, b) in panels(p_switch, p_max, tail_width) {
        for (p, wt) in rule.mapped(a, b) {
            let v = transformer.asym.value(p);
            let dens = wt * v * v * p * p;
            tail[0] += dens / (p * p);
            tail[1] += dens;
            tail[2] += dens * p * p;
        }
    }
    let remainder = remainder_at(p_max);

    let norm = head_moments[1] + tail[1] + remainder[1];
    let norm_deficit = (1.0 - norm).abs();
    if !(norm > 0.0) || norm_deficit > cfg.norm_target {
        return Err(Error::NumericalFailure(format!(
            "momentum norm deficit {norm_deficit:e} exceeds {:e} (p_max = {p_max:e})",
            cfg.norm_target
        )));
    }
    let scale = 1.0 / norm.sqrt();
    let p_values = raw_values.iter().map(|v| v * scale).collect();
    let inv = 1.0 / norm;
    Ok(MomentumSolution {
        state: st,
        p_grid,
        p_weights,
        p_values,
        p_switch,
        p_max,
        norm_deficit,
        switch_mismatch,
        tail: tail.map(|t| t * inv),
        remainder: remainder.map(|t| t * inv),
        scale,
        transformer: Arc::new(transformer),
    })
}

fn build_tiers(sol: &RadialSolution, rule: &QuadratureRule, kappa: f64, r_top: f64, p_switch: f64) -> Vec<Tier> {
    let mut tiers = Vec::new();
    let mut p_hi = kappa.max(4.0 / r_top).min(p_switch);
    let norm = (2.0 / PI).sqrt();
    loop {
        let freq = p_hi.max(kappa);
        let mut radii = Vec::new();
        let mut weighted = Vec::new();
        let width = (FRAC_PI_2 / freq).min(r_top / 16.0);
        for (a, b) in panels(0.0, r_top, width) {
            for (r, w) in rule.mapped(a, b) {
                radii.push(r);
                weighted.push(norm * w * sol.u_at(r) * r);
            }
        }
        tiers.push(Tier { p_hi, radii, weighted });
        if p_hi >= p_switch {
            break;
        }
        p_hi = (2.0 * p_hi).min(p_switch);
    }
    tiers
}
