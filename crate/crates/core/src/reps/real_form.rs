//! The real form `V_ℝ(2m+1) ⊂ V(2m+1)`: forms `Σ_{|k|≤m} c_k x^{m+k}y^{m−k}`
//! with `c_{−k} = (−1)^k conj(c_k)`.
//!
//! In the monomial storage of [`BinaryForm`] (position `p` holds the
//! coefficient of `x^{2m−p}y^p`) the index `k` sits at position `m − k`.

use num_complex::Complex64;

use crate::algebra::{binomial, BinaryForm};

fn half(f: &BinaryForm) -> usize {
    f.degree() / 2
}

/// `c_k` for `|k| ≤ m`.
pub fn coeff(f: &BinaryForm, k: i64) -> Complex64 {
    f.coeffs[(half(f) as i64 - k) as usize]
}

fn sign(k: usize) -> f64 {
    if k % 2 == 0 { 1.0 } else { -1.0 }
}

/// Largest violation of the reality condition.
pub fn reality_defect(f: &BinaryForm) -> f64 {
    let m = half(f) as i64;
    (0..=m)
        .map(|k| (coeff(f, -k) - coeff(f, k).conj() * sign(k as usize)).norm())
        .fold(0.0, f64::max)
}

/// Builds the real form with `c_0, …, c_m` given (`c_0` is made real).
pub fn from_half(c: &[Complex64]) -> BinaryForm {
    let m = c.len() - 1;
    let mut out = vec![Complex64::new(0.0, 0.0); 2 * m + 1];
    out[m] = Complex64::new(c[0].re, 0.0);
    for k in 1..=m {
        out[m - k] = c[k];
        out[m + k] = c[k].conj() * sign(k);
    }
    BinaryForm::new(out)
}

/// Orthogonal projection of an arbitrary form of even degree onto the real form.
pub fn project(f: &BinaryForm) -> BinaryForm {
    let m = half(f) as i64;
    let c: Vec<Complex64> =
        (0..=m).map(|k| 0.5 * (coeff(f, k) + coeff(f, -k).conj() * sign(k as usize))).collect();
    from_half(&c)
}

/// Orthonormal coordinates: `c_0/√C(n,m)` then `√(2/C(n,m−k))·(Re c_k, Im c_k)`.
pub fn coords(f: &BinaryForm) -> Vec<f64> {
    let m = half(f);
    let n = 2 * m;
    let mut out = Vec::with_capacity(n + 1);
    out.push(coeff(f, 0).re / binomial(n, m).sqrt());
    for k in 1..=m {
        let c = coeff(f, k as i64);
        let s = (2.0 / binomial(n, m - k)).sqrt();
        out.push(c.re * s);
        out.push(c.im * s);
    }
    out
}

pub fn from_coords(x: &[f64]) -> BinaryForm {
    let n = x.len() - 1;
    let m = n / 2;
    let mut c = vec![Complex64::new(x[0] * binomial(n, m).sqrt(), 0.0)];
    for k in 1..=m {
        let s = (binomial(n, m - k) / 2.0).sqrt();
        c.push(Complex64::new(x[2 * k - 1], x[2 * k]) * s);
    }
    from_half(&c)
}
