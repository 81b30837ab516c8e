use crate::error::{invalid, Error, Result};

const MAX_TERMS: usize = 100_000;

fn is_nonpositive_integer(v: f64) -> bool {
    v <= 0.0 && v.fract() == 0.0
}

/// Confluent hypergeometric function `1F1(a; b; x)` by its ascending series.
///
/// Terms are accumulated with Neumaier compensation. A non-positive
/// integer `a` truncates the series to a polynomial, which is summed exactly
/// to its last term.
pub fn kummer_1f1(a: f64, b: f64, x: f64) -> Result<f64> {
    if is_nonpositive_integer(b) {
        return Err(invalid(format!("1F1 undefined for non-positive integer b = {b}")));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(invalid(format!("1F1 argument must be finite and >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    let terminating = if is_nonpositive_integer(a) { Some((-a) as usize) } else { None };

    let mut sum = 1.0;
    let mut comp = 0.0;
    let mut term = 1.0;
    let mut small_run = 0;
    for k in 0..MAX_TERMS {
        if terminating == Some(k) {
            return Ok(sum + comp);
        }
        let kf = k as f64;
        term *= (a + kf) / (b + kf) * x / (kf + 1.0);
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
        if !sum.is_finite() {
            return Err(Error::NumericalFailure(format!("1F1({a}, {b}, {x}) overflowed after {k} terms")));
        }
        if terminating.is_none() {
            if term.abs() < 1e-17 * (sum + comp).abs() {
                small_run += 1;
                if small_run == 3 {
                    return Ok(sum + comp);
                }
            } else {
                small_run = 0;
            }
        }
    }
    Err(Error::NumericalFailure(format!(
        "1F1({a}, {b}, {x}) series did not converge in {MAX_TERMS} terms (partial sum {sum:e})"
    )))
}
