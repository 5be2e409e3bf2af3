use crate::error::{Error, Result};

/// The unique `t ≥ −min dᵢ` with `∏ (t + dᵢ) = target`.
///
/// On `[−min d, ∞)` the product is increasing and convex, so Newton started
/// above the root decreases monotonically onto it.
pub fn solve_unique_t(d: &[f64], target: f64) -> Result<f64> {
    if d.is_empty() {
        return Err(Error::BadDegree(0));
    }
    if !(target >= 0.0) {
        return Err(Error::NegativeTarget(target));
    }
    let lo = -d.iter().copied().fold(f64::INFINITY, f64::min);
    if target == 0.0 {
        return Ok(lo);
    }
    let k = d.len() as f64;
    // ∏(lo + s + (dᵢ − min d)) ≥ s^k, so this step overshoots the root
    let mut t = lo + target.powf(1.0 / k) * (1.0 + 1e-12);
    for _ in 0..200 {
        let (p, dp) = product_and_derivative(d, t);
        let f = p - target;
        if f <= 0.0 || dp <= 0.0 {
            break;
        }
        let next = (t - f / dp).max(lo);
        if next >= t {
            break;
        }
        t = next;
    }
    Ok(t)
}

fn product_and_derivative(d: &[f64], t: f64) -> (f64, f64) {
    let mut p = 1.0;
    let mut dp = 0.0;
    for &di in d {
        dp = dp * (t + di) + p;
        p *= t + di;
    }
    (p, dp)
}
