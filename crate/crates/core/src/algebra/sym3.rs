//! Symmetric 3×3 matrices and their spectral decomposition.

use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use super::rotation::Rotation3;

/// A real symmetric 3×3 matrix, stored as `[s00, s11, s22, s01, s02, s12]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Sym3 {
    e: [f64; 6],
}

impl Sym3 {
    pub const ZERO: Sym3 = Sym3 { e: [0.0; 6] };

    pub fn new(s00: f64, s11: f64, s22: f64, s01: f64, s02: f64, s12: f64) -> Self {
        Self { e: [s00, s11, s22, s01, s02, s12] }
    }

    pub fn identity() -> Self {
        Self::diag([1.0, 1.0, 1.0])
    }

    pub fn diag(d: [f64; 3]) -> Self {
        Self::new(d[0], d[1], d[2], 0.0, 0.0, 0.0)
    }

    /// Symmetric part `(m + mᵀ)/2`.
    pub fn from_matrix(m: &Matrix3<f64>) -> Self {
        Self::new(
            m[(0, 0)],
            m[(1, 1)],
            m[(2, 2)],
            0.5 * (m[(0, 1)] + m[(1, 0)]),
            0.5 * (m[(0, 2)] + m[(2, 0)]),
            0.5 * (m[(1, 2)] + m[(2, 1)]),
        )
    }

    pub fn entries(&self) -> [f64; 6] {
        self.e
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        match (r.min(c), r.max(c)) {
            (0, 0) => self.e[0],
            (1, 1) => self.e[1],
            (2, 2) => self.e[2],
            (0, 1) => self.e[3],
            (0, 2) => self.e[4],
            (1, 2) => self.e[5],
            _ => panic!("index out of range"),
        }
    }

    pub fn to_matrix(&self) -> Matrix3<f64> {
        Matrix3::from_fn(|r, c| self.get(r, c))
    }

    pub fn trace(&self) -> f64 {
        self.e[0] + self.e[1] + self.e[2]
    }

    pub fn is_traceless(&self, tol: f64) -> bool {
        self.trace().abs() <= tol
    }

    /// `S − (tr S / 3) E`.
    pub fn traceless_part(&self) -> Self {
        let m = self.trace() / 3.0;
        Self::new(self.e[0] - m, self.e[1] - m, self.e[2] - m, self.e[3], self.e[4], self.e[5])
    }

    pub fn frobenius_norm(&self) -> f64 {
        let [a, b, c, d, e, f] = self.e;
        (a * a + b * b + c * c + 2.0 * (d * d + e * e + f * f)).sqrt()
    }

    pub fn determinant(&self) -> f64 {
        self.to_matrix().determinant()
    }

    /// `R S Rᵀ`.
    pub fn conjugate_by(&self, r: &Rotation3) -> Self {
        let m = r.matrix();
        Self::from_matrix(&(m * self.to_matrix() * m.transpose()))
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut e = self.e;
        for (a, b) in e.iter_mut().zip(o.e) {
            *a -= b;
        }
        Self { e }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { e: self.e.map(|a| a * s) }
    }
}

/// Eigen-decomposition `S = frame · diag(λ) · frameᵀ` with `λ₁ ≥ λ₂ ≥ λ₃`.
///
/// Cyclic Jacobi sweeps; converges to machine precision in a handful of
/// sweeps for 3×3 input. The frame is a proper rotation; for `S = 0` it is
/// the identity.
pub fn eig_sym3(s: &Sym3) -> ([f64; 3], Rotation3) {
    let mut a = s.to_matrix();
    let mut v = Matrix3::<f64>::identity();
    let scale = a.abs().max();
    if scale == 0.0 || !scale.is_finite() {
        return ([a[(0, 0)], a[(1, 1)], a[(2, 2)]], Rotation3::identity());
    }
    for _sweep in 0..64 {
        let off = a[(0, 1)].abs() + a[(0, 2)].abs() + a[(1, 2)].abs();
        if off <= f64::EPSILON * 1e-3 * scale {
            break;
        }
        for (p, q) in [(0, 1), (0, 2), (1, 2)] {
            let apq = a[(p, q)];
            if apq.abs() <= f64::MIN_POSITIVE {
                continue;
            }
            let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
            let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
            let t = if theta == 0.0 { 1.0 } else { t };
            let c = 1.0 / (t * t + 1.0).sqrt();
            let sn = t * c;
            let mut rot = Matrix3::<f64>::identity();
            rot[(p, p)] = c;
            rot[(q, q)] = c;
            rot[(p, q)] = sn;
            rot[(q, p)] = -sn;
            a = rot.transpose() * a * rot;
            a[(p, q)] = 0.0;
            a[(q, p)] = 0.0;
            v *= rot;
        }
    }
    let mut idx = [0usize, 1, 2];
    idx.sort_by(|&i, &j| a[(j, j)].total_cmp(&a[(i, i)]));
    let lambda = idx.map(|i| a[(i, i)]);
    let mut frame = Matrix3::from_columns(&idx.map(|i| v.column(i).into_owned()));
    if frame.determinant() < 0.0 {
        frame.set_column(2, &(-frame.column(2)));
    }
    (lambda, Rotation3::from_matrix_unchecked(frame))
}

/// True iff every eigenvalue of `S` is at least `−tol`.
pub fn psd_check(s: &Sym3, tol: f64) -> bool {
    eig_sym3(s).0[2] >= -tol
}

/// Reassembles `frame · diag(λ) · frameᵀ`.
pub fn from_spectrum(lambda: [f64; 3], frame: &Rotation3) -> Sym3 {
    let m = frame.matrix();
    let d = Matrix3::from_diagonal(&Vector3::from(lambda));
    Sym3::from_matrix(&(m * d * m.transpose()))
}
