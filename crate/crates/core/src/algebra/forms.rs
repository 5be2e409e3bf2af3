//! Complex binary forms `Σ c_k x^{n−k} y^k` and their linear factorisation.
//!
//! A unit vector `v = (a, b) ∈ ℂ²` stands for the linear form
//! `(v, ·) = āx + b̄y`, so a form factors as `c · ∏ (v_j, ·)`. With this
//! convention `(g·f)(w) = f(g⁻¹w)` moves every root vector to `g v_j`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A binary form of degree `n`, stored in the basis `x^n, x^{n−1}y, …, y^n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BinaryForm {
    pub coeffs: Vec<Complex64>,
}

/// Factorisation `f = constant · ∏ (v_j, ·)` with unit `v_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub constant: Complex64,
    pub roots: Vec<[Complex64; 2]>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        Self { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        Self::new(vec![ZERO; degree + 1])
    }

    /// The monomial `x^{n−k} y^k`.
    pub fn monomial(degree: usize, k: usize) -> Self {
        let mut f = Self::zero(degree);
        f.coeffs[k] = ONE;
        f
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == ZERO)
    }

    pub fn eval(&self, x: Complex64, y: Complex64) -> Complex64 {
        let n = self.degree();
        let mut acc = ZERO;
        // Horner in y/x is unstable at x = 0, so expand with explicit powers
        let mut xp = vec![ONE; n + 1];
        let mut yp = vec![ONE; n + 1];
        for k in 1..=n {
            xp[k] = xp[k - 1] * x;
            yp[k] = yp[k - 1] * y;
        }
        for (k, c) in self.coeffs.iter().enumerate() {
            acc += c * xp[n - k] * yp[k];
        }
        acc
    }

    /// `f(M w)` for a 2×2 complex matrix `M`, as a form in `w`.
    pub fn substitute(&self, m: [[Complex64; 2]; 2]) -> Self {
        let n = self.degree();
        let px = linear_powers([m[0][0], m[0][1]], n);
        let py = linear_powers([m[1][0], m[1][1]], n);
        let mut out = vec![ZERO; n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            if *c == ZERO {
                continue;
            }
            let term = mul_forms(&px[n - k], &py[k]);
            for (o, t) in out.iter_mut().zip(term) {
                *o += c * t;
            }
        }
        Self::new(out)
    }

    /// Coefficient-space Euclidean norm.
    pub fn coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Bombieri norm `(Σ |c_k|² / C(n,k))^{1/2}`, invariant under SU(2).
    pub fn bombieri_norm(&self) -> f64 {
        let n = self.degree();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.norm_sqr() / binomial(n, k))
            .sum::<f64>()
            .sqrt()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect())
    }

    /// `∂f/∂x`, a form of degree `n − 1` (the zero form of degree 0 if `n = 0`).
    pub fn partial_x(&self) -> Self {
        let n = self.degree();
        if n == 0 {
            return Self::zero(0);
        }
        Self::new((0..n).map(|k| self.coeffs[k] * (n - k) as f64).collect())
    }

    /// `∂f/∂y`.
    pub fn partial_y(&self) -> Self {
        let n = self.degree();
        if n == 0 {
            return Self::zero(0);
        }
        Self::new((1..=n).map(|k| self.coeffs[k] * k as f64).collect())
    }

    /// Product with the linear form `l0 x + l1 y`.
    pub fn mul_linear(&self, l: [Complex64; 2]) -> Self {
        Self::new(mul_forms(&self.coeffs, &l))
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect())
    }

    /// `∏ (v_j, ·)`, where `v = (a, b)` contributes the factor `āx + b̄y`.
    pub fn from_factors(vectors: &[[Complex64; 2]]) -> Self {
        let mut acc = vec![ONE];
        for v in vectors {
            acc = mul_forms(&acc, &[v[0].conj(), v[1].conj()]);
        }
        Self::new(acc)
    }

    /// Roots as unit vectors, one per linear factor, with multiplicity.
    pub fn roots(&self) -> Result<Vec<[Complex64; 2]>> {
        Ok(self.factor()?.roots)
    }

    /// Full factorisation with unit root vectors and a least-squares constant.
    pub fn factor(&self) -> Result<Factorization> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let n = self.degree();
        let lead = self.coeffs.iter().take_while(|c| **c == ZERO).count();
        let trail = self.coeffs.iter().rev().take_while(|c| **c == ZERO).count();
        let core = &self.coeffs[lead..=n - trail];

        let mut fixed = Vec::with_capacity(n);
        fixed.extend(std::iter::repeat_n([ZERO, ONE], lead));
        fixed.extend(std::iter::repeat_n([ONE, ZERO], trail));

        // Multiple roots come back from the iteration as small clusters whose
        // centroid is far more accurate than the members; keep whichever
        // candidate refactors best.
        let raw = core_roots(core);
        let mut best: Option<(f64, Factorization)> = None;
        for &radius in &[0.0, 1e-6, 1e-4, 1e-2] {
            let mut roots = fixed.clone();
            if radius == 0.0 {
                roots.extend(raw.iter().map(|r| r.1));
            } else {
                let zs: Vec<Complex64> = raw.iter().map(|r| r.0).collect();
                roots.extend(merge_clusters(&zs, radius, core));
            }
            let fac = self.fit_constant(roots);
            let model = Self::from_factors(&fac.roots).scale(fac.constant);
            let err = model.sub(self).coeff_norm();
            if best.as_ref().is_none_or(|(e, _)| err < *e) {
                best = Some((err, fac));
            }
        }
        Ok(best.expect("at least one candidate").1)
    }

    fn fit_constant(&self, roots: Vec<[Complex64; 2]>) -> Factorization {
        let model = Self::from_factors(&roots);
        let (num, den) = model
            .coeffs
            .iter()
            .zip(&self.coeffs)
            .fold((ZERO, 0.0), |(num, den), (m, c)| (num + m.conj() * c, den + m.norm_sqr()));
        Factorization { constant: num / den, roots }
    }
}

/// Replaces every cluster of nearby roots by copies of one refined point.
///
/// A cluster of size `m` approximates a root of multiplicity `m`, which is a
/// simple root of the `(m−1)`-th derivative; Newton on that derivative,
/// started at the centroid, recovers it to working precision.
fn merge_clusters(zs: &[Complex64], radius: f64, c: &[Complex64]) -> Vec<[Complex64; 2]> {
    let n = zs.len();
    let mut label: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in 0..i {
            let scale = 1.0 + zs[i].norm().max(zs[j].norm());
            if (zs[i] - zs[j]).norm() <= radius * scale {
                let (a, b) = (label[i], label[j]);
                for l in label.iter_mut() {
                    if *l == a {
                        *l = b;
                    }
                }
            }
        }
    }
    let p: Vec<Complex64> = c.to_vec();
    let q: Vec<Complex64> = c.iter().rev().copied().collect();
    (0..n)
        .map(|i| {
            let members: Vec<Complex64> = (0..n).filter(|&j| label[j] == label[i]).map(|j| zs[j]).collect();
            let m = members.len();
            let centre = members.iter().sum::<Complex64>() / m as f64;
            if centre.norm() <= 1.0 {
                let z = newton_polish(&derivative(&p, m - 1), centre);
                unit([ONE, -z.conj()])
            } else {
                let w = newton_polish(&derivative(&q, m - 1), centre.inv());
                unit([w.conj(), -ONE])
            }
        })
        .collect()
}

/// `k`-th derivative of `Σ p_i z^{d−i}`.
fn derivative(p: &[Complex64], k: usize) -> Vec<Complex64> {
    let mut p = p.to_vec();
    for _ in 0..k {
        let d = p.len() - 1;
        if d == 0 {
            return vec![ZERO];
        }
        p = p[..d].iter().enumerate().map(|(i, a)| a * (d - i) as f64).collect();
    }
    p
}

/// Roots `z` of `f(z, 1)` for a form whose end coefficients are nonzero,
/// each paired with its Newton-polished unit vector.
fn core_roots(c: &[Complex64]) -> Vec<(Complex64, [Complex64; 2])> {
    let d = c.len() - 1;
    if d == 0 {
        return Vec::new();
    }
    // p(z) = f(z, 1) has leading coefficient c_0, q(w) = f(1, w) has leading c_d
    let p: Vec<Complex64> = c.to_vec();
    let q: Vec<Complex64> = c.iter().rev().copied().collect();
    let zs = aberth(&p);
    zs.into_iter()
        .map(|z| {
            let v = if z.norm() <= 1.0 {
                let z = newton_polish(&p, z);
                unit([ONE, -z.conj()])
            } else {
                let w = newton_polish(&q, z.inv());
                unit([w.conj(), -ONE])
            };
            (z, v)
        })
        .collect()
}

fn unit(v: [Complex64; 2]) -> [Complex64; 2] {
    let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
    [v[0] / n, v[1] / n]
}

/// Horner evaluation of `p(z) = Σ p_k z^{d−k}` and its derivative.
fn horner(p: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut v = ZERO;
    let mut dv = ZERO;
    for &a in p {
        dv = dv * z + v;
        v = v * z + a;
    }
    (v, dv)
}

fn newton_polish(p: &[Complex64], mut z: Complex64) -> Complex64 {
    for _ in 0..4 {
        let (v, dv) = horner(p, z);
        if dv == ZERO {
            break;
        }
        let step = v / dv;
        let next = z - step;
        // accept only contracting steps; clustered roots stay where Aberth left them
        if horner(p, next).0.norm() < v.norm() {
            z = next;
        } else {
            break;
        }
    }
    z
}

/// Aberth–Ehrlich simultaneous iteration for all roots of `p`.
fn aberth(p: &[Complex64]) -> Vec<Complex64> {
    let d = p.len() - 1;
    let lead = p[0];
    let monic: Vec<Complex64> = p.iter().map(|a| a / lead).collect();
    // Fujiwara-style radius bound for the initial circle
    let radius = (1..=d)
        .map(|k| monic[k].norm().powf(1.0 / k as f64))
        .fold(0.0_f64, f64::max)
        .max(1e-300)
        * 2.0;
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let ang = std::f64::consts::TAU * (k as f64 + 0.25) / d as f64 + 0.4;
            Complex64::from_polar(radius * 0.5, ang)
        })
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0_f64;
        for i in 0..d {
            let (v, dv) = horner(&monic, z[i]);
            if v == ZERO {
                continue;
            }
            let ratio = v / dv;
            let s: Complex64 = (0..d)
                .filter(|&j| j != i)
                .map(|j| {
                    let diff = z[i] - z[j];
                    if diff == ZERO { ZERO } else { diff.inv() }
                })
                .sum();
            let denom = ONE - ratio * s;
            let step = if denom.norm() > 0.0 && denom.is_finite() { ratio / denom } else { ratio };
            if step.is_finite() {
                z[i] -= step;
                moved = moved.max(step.norm() / (1.0 + z[i].norm()));
            }
        }
        if moved < 1e-16 {
            break;
        }
    }
    z
}

/// Product of two forms given by coefficient vectors in the same basis.
fn mul_forms(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Powers `L^0, …, L^n` of the linear form `L = l0 x + l1 y`.
fn linear_powers(l: [Complex64; 2], n: usize) -> Vec<Vec<Complex64>> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(vec![ONE]);
    for k in 1..=n {
        let next = mul_forms(&out[k - 1], &l);
        out.push(next);
    }
    out
}

pub fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Roots of `Σ c_k x^{n−k} y^k` as unit vectors `(a_j, b_j)`; see the module
/// docs for the factor convention.
pub fn poly_roots(coeffs: &[Complex64]) -> Result<Vec<[Complex64; 2]>> {
    if coeffs.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    BinaryForm::new(coeffs.to_vec()).roots()
}
