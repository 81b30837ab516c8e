//! Spherical Bessel functions of the first kind for real non-negative
//! arguments.

/// `j_l(x)`.
pub fn spherical_bessel_j(l: usize, x: f64) -> f64 {
    if x == 0.0 {
        return if l == 0 { 1.0 } else { 0.0 };
    }
    if x < 1.0 {
        return series(l, x);
    }
    if x > l as f64 {
        upward(l, x).0
    } else {
        let mut out = vec![0.0; l + 1];
        miller(l, x, &mut out);
        out[l]
    }
}

/// `j_0(x) ..= j_lmax(x)`.
pub fn spherical_bessel_j_all(lmax: usize, x: f64) -> Vec<f64> {
    let mut out = vec![0.0; lmax + 1];
    if x == 0.0 {
        out[0] = 1.0;
        return out;
    }
    if x < 1.0 {
        for (l, v) in out.iter_mut().enumerate() {
            *v = series(l, x);
        }
        return out;
    }
    let split = (x.floor() as usize).min(lmax);
    // Upward recurrence is stable for orders below x; the rest comes
    // from the downward sweep.
    let (s, c) = x.sin_cos();
    out[0] = s / x;
    if lmax >= 1 {
        out[1] = (s / x - c) / x;
    }
    for k in 1..split {
        out[k + 1] = (2 * k + 1) as f64 / x * out[k] - out[k - 1];
    }
    if split < lmax {
        let mut tmp = vec![0.0; lmax + 1];
        miller(lmax, x, &mut tmp);
        out[split + 1..].copy_from_slice(&tmp[split + 1..]);
    }
    out
}

fn series(l: usize, x: f64) -> f64 {
    let mut lead = 1.0;
    for k in 0..l {
        lead *= x / (2 * k + 3) as f64;
    }
    // lead = x^l / (2l+1)!!
    let y = -0.5 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..40 {
        term *= y / (k as f64 * (2 * l + 2 * k + 1) as f64);
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    lead * sum
}

fn upward(l: usize, x: f64) -> (f64, f64) {
    let (s, c) = x.sin_cos();
    let j0 = s / x;
    if l == 0 {
        return (j0, 0.0);
    }
    let mut prev = j0;
    let mut cur = (j0 - c) / x;
    for k in 1..l {
        let next = (2 * k + 1) as f64 / x * cur - prev;
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

/// Downward recurrence from well above `lmax`, normalized against the
/// closed forms of `j_0` or `j_1`, whichever is larger.
fn miller(lmax: usize, x: f64, out: &mut [f64]) {
    let start = lmax + 40 + (x.sqrt() * 8.0) as usize;
    let mut f_next = 0.0;
    let mut f = 1e-300;
    let mut f0 = 0.0;
    let mut f1 = 0.0;
    for k in (0..=start).rev() {
        // f holds the unnormalized j_k, f_next holds j_{k+1}.
        if k <= lmax {
            out[k] = f;
        }
        if k == 1 {
            f1 = f;
        }
        if k == 0 {
            f0 = f;
            break;
        }
        let prev = (2 * k + 1) as f64 / x * f - f_next;
        f_next = f;
        f = prev;
        if f.abs() > 1e250 {
            let s = 1e-250;
            f *= s;
            f_next *= s;
            for v in out.iter_mut().take(lmax + 1).skip(k.min(lmax + 1)) {
                *v *= s;
            }
            f1 *= s;
        }
    }
    let (s, c) = x.sin_cos();
    let j0 = s / x;
    let j1 = (j0 - c) / x;
    let norm = if j0.abs() >= j1.abs() { j0 / f0 } else { j1 / f1 };
    for v in out.iter_mut().take(lmax + 1) {
        *v *= norm;
    }
}
