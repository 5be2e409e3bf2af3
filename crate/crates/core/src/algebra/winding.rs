//! Winding numbers of sampled closed curves in ℂ \ {0}.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Winding number of the closed polygon through `samples` around the origin.
///
/// The last sample connects back to the first. Each step must turn by less
/// than π, otherwise the branch of the increment is ambiguous.
pub fn winding_number(samples: &[Complex64]) -> Result<i64> {
    if let Some(index) = samples.iter().position(|z| z.norm() < 1e-12) {
        return Err(Error::DegenerateLoop { index, modulus: samples[index].norm() });
    }
    let n = samples.len();
    let mut total = 0.0;
    for i in 0..n {
        let step = (samples[(i + 1) % n] / samples[i]).arg();
        if step.abs() >= PI * (1.0 - 1e-12) {
            return Err(Error::UndersampledLoop { index: i, increment: step });
        }
        total += step;
    }
    Ok((total / TAU).round() as i64)
}

/// Samples `f(t)` at `n` equally spaced `t ∈ [0, 1)`.
pub fn sample_loop(n: usize, f: impl Fn(f64) -> Complex64) -> Vec<Complex64> {
    (0..n).map(|k| f(k as f64 / n as f64)).collect()
}
