use std::f64::consts::PI;

use crate::error::{invalid, Result};

/// Polar factor `Theta_{l,m}(theta)` normalized so that
/// `int_0^pi Theta^2 sin(theta) dtheta = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormalizedLegendre {
    pub l: usize,
    pub m: usize,
}

impl NormalizedLegendre {
    pub fn new(l: usize, m: i64) -> Result<Self> {
        let am = m.unsigned_abs() as usize;
        if am > l {
            return Err(invalid(format!("|m| = {am} exceeds l = {l}")));
        }
        Ok(Self { l, m: am })
    }

    /// Values of `Theta_{k,m}` for `k = m ..= l`, as `(Theta_l, Theta_{l-1})`.
    fn pair(&self, theta: f64) -> (f64, f64) {
        let (s, x) = theta.sin_cos();
        let m = self.m;
        let mut pmm = (0.5 * (2 * m + 1) as f64).sqrt();
        for k in 1..=m {
            pmm *= -((2 * k - 1) as f64 / (2 * k) as f64).sqrt() * s;
        }
        if self.l == m {
            return (pmm, 0.0);
        }
        let mut prev = pmm;
        let mut cur = ((2 * m + 3) as f64).sqrt() * x * pmm;
        let mf = m as f64;
        for k in (m + 2)..=self.l {
            let kf = k as f64;
            let a = ((4.0 * kf * kf - 1.0) / (kf * kf - mf * mf)).sqrt();
            let km = kf - 1.0;
            let a_prev = ((4.0 * km * km - 1.0) / (km * km - mf * mf)).sqrt();
            let next = a * (x * cur - prev / a_prev);
            prev = cur;
            cur = next;
        }
        (cur, prev)
    }

    pub fn value(&self, theta: f64) -> f64 {
        self.pair(theta).0
    }

    /// `d Theta / d theta`; valid for `0 < theta < pi`.
    pub fn derivative(&self, theta: f64) -> f64 {
        let (s, x) = theta.sin_cos();
        let (p, p_prev) = self.pair(theta);
        let lf = self.l as f64;
        let mf = self.m as f64;
        let c = if self.l > self.m { ((2.0 * lf + 1.0) * (lf * lf - mf * mf) / (2.0 * lf - 1.0)).sqrt() } else { 0.0 };
        (lf * x * p - c * p_prev) / s
    }

    /// Interior zeros of `Theta` in `(0, pi)`, ascending. There are `l - m`
    /// of them.
    pub fn zeros(&self) -> Vec<f64> {
        let want = self.l - self.m;
        if want == 0 {
            return Vec::new();
        }
        let samples = 64 * (self.l + 1);
        let h = PI / samples as f64;
        let mut out = Vec::with_capacity(want);
        let mut a = 0.5 * h;
        let mut fa = self.value(a);
        for i in 1..samples {
            let b = (i as f64 + 0.5) * h;
            let fb = self.value(b);
            if fa == 0.0 {
                out.push(a);
            } else if fa * fb < 0.0 {
                let (mut lo, mut hi, mut flo) = (a, b, fa);
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    let fm = self.value(mid);
                    if fm == 0.0 || hi - lo < 1e-15 {
                        lo = mid;
                        hi = mid;
                        break;
                    }
                    if flo * fm < 0.0 {
                        hi = mid;
                    } else {
                        lo = mid;
                        flo = fm;
                    }
                }
                out.push(0.5 * (lo + hi));
            }
            a = b;
            fa = fb;
        }
        out
    }
}

/// Angular probability density `|Theta_{l,m}(theta)|^2 |Phi_m|^2` with
/// `|Phi_m|^2 = 1 / (2 pi)`.
pub fn assoc_legendre_density(l: usize, m: i64, theta: f64) -> Result<f64> {
    let p = NormalizedLegendre::new(l, m)?;
    let v = p.value(theta);
    Ok(v * v / (2.0 * PI))
}
