//! SO(3) and the double cover SU(2) → SO(3).

use nalgebra::{Matrix3, Vector3};
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::quaternion::{Quaternion, UnitQuaternion};

/// A rotation of ℝ³ stored as an orthogonal matrix with determinant one.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rotation3(Matrix3<f64>);

impl Rotation3 {
    pub fn identity() -> Self {
        Self(Matrix3::identity())
    }

    /// Accepts `m` if it is orthogonal with determinant one within `1e-10`.
    pub fn from_matrix(m: Matrix3<f64>) -> Option<Self> {
        let err = (m.transpose() * m - Matrix3::identity()).abs().max();
        (err <= 1e-10 && (m.determinant() - 1.0).abs() <= 1e-10).then_some(Self(m))
    }

    pub(crate) fn from_matrix_unchecked(m: Matrix3<f64>) -> Self {
        Self(m)
    }

    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.0
    }

    pub fn transpose(&self) -> Self {
        Self(self.0.transpose())
    }

    pub fn inverse(&self) -> Self {
        self.transpose()
    }

    pub fn apply(&self, v: &Vector3<f64>) -> Vector3<f64> {
        self.0 * v
    }

    pub fn from_axis_angle(axis: [f64; 3], angle: f64) -> Self {
        su2_to_so3(UnitQuaternion::from_axis_angle(axis, angle))
    }

    /// One of the two unit quaternions covering this rotation (the one with `w ≥ 0`).
    pub fn to_unit_quaternion(&self) -> UnitQuaternion {
        let m = &self.0;
        let tr = m.trace();
        // Shepperd's method: pick the largest diagonal candidate for stability
        let q = if tr > m[(0, 0)] && tr > m[(1, 1)] && tr > m[(2, 2)] {
            let s = (1.0 + tr).sqrt() * 2.0;
            Quaternion::new(
                0.25 * s,
                (m[(2, 1)] - m[(1, 2)]) / s,
                (m[(0, 2)] - m[(2, 0)]) / s,
                (m[(1, 0)] - m[(0, 1)]) / s,
            )
        } else if m[(0, 0)] >= m[(1, 1)] && m[(0, 0)] >= m[(2, 2)] {
            let s = (1.0 + m[(0, 0)] - m[(1, 1)] - m[(2, 2)]).sqrt() * 2.0;
            Quaternion::new(
                (m[(2, 1)] - m[(1, 2)]) / s,
                0.25 * s,
                (m[(0, 1)] + m[(1, 0)]) / s,
                (m[(0, 2)] + m[(2, 0)]) / s,
            )
        } else if m[(1, 1)] >= m[(2, 2)] {
            let s = (1.0 + m[(1, 1)] - m[(0, 0)] - m[(2, 2)]).sqrt() * 2.0;
            Quaternion::new(
                (m[(0, 2)] - m[(2, 0)]) / s,
                (m[(0, 1)] + m[(1, 0)]) / s,
                0.25 * s,
                (m[(1, 2)] + m[(2, 1)]) / s,
            )
        } else {
            let s = (1.0 + m[(2, 2)] - m[(0, 0)] - m[(1, 1)]).sqrt() * 2.0;
            Quaternion::new(
                (m[(1, 0)] - m[(0, 1)]) / s,
                (m[(0, 2)] + m[(2, 0)]) / s,
                (m[(1, 2)] + m[(2, 1)]) / s,
                0.25 * s,
            )
        };
        let q = if q.w < 0.0 { -q } else { q };
        UnitQuaternion::new(q).unwrap_or(UnitQuaternion::IDENTITY)
    }

    /// Haar-distributed rotation (image of a Haar element of SU(2)).
    pub fn haar<R: Rng + ?Sized>(rng: &mut R) -> Self {
        su2_to_so3(UnitQuaternion::haar(rng))
    }
}

impl std::ops::Mul for Rotation3 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self(self.0 * o.0)
    }
}

/// The covering homomorphism: `q` maps to the rotation `v ↦ q v q⁻¹` of the
/// imaginary quaternions, written in the basis `(i, j, k)`.
pub fn su2_to_so3(q: UnitQuaternion) -> Rotation3 {
    let Quaternion { w, x, y, z } = q.quaternion();
    Rotation3(Matrix3::new(
        1.0 - 2.0 * (y * y + z * z),
        2.0 * (x * y - w * z),
        2.0 * (x * z + w * y),
        2.0 * (x * y + w * z),
        1.0 - 2.0 * (x * x + z * z),
        2.0 * (y * z - w * x),
        2.0 * (x * z - w * y),
        2.0 * (y * z + w * x),
        1.0 - 2.0 * (x * x + y * y),
    ))
}
