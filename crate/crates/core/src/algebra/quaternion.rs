//! Quaternions and the unit quaternion model of SU(2).

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

/// A real quaternion `w + x i + y j + z k`.
///
/// Multiplication follows Hamilton's convention `ij = k`, `jk = i`, `ki = j`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 4]", into = "[f64; 4]")]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub const fn real(w: f64) -> Self {
        Self::new(w, 0.0, 0.0, 0.0)
    }

    /// Purely imaginary quaternion `x i + y j + z k`.
    pub const fn imaginary(v: [f64; 3]) -> Self {
        Self::new(0.0, v[0], v[1], v[2])
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    /// Imaginary part as a vector in the basis `(i, j, k)`.
    pub fn vector(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn conj(self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn dot(self, other: Self) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Multiplicative inverse; the zero quaternion maps to non-finite values.
    pub fn inverse(self) -> Self {
        self.conj() / self.norm_sqr()
    }

    pub fn is_imaginary(self, tol: f64) -> bool {
        self.w.abs() <= tol
    }

    pub fn is_finite(self) -> bool {
        self.to_array().iter().all(|c| c.is_finite())
    }

    /// `exp` of a purely imaginary quaternion `v`: `cos|v| + sin|v| v/|v|`.
    pub fn exp_imaginary(v: [f64; 3]) -> Self {
        let angle = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if angle < 1e-300 {
            return Self::ONE;
        }
        let s = angle.sin() / angle;
        Self::new(angle.cos(), s * v[0], s * v[1], s * v[2])
    }
}

impl From<[f64; 4]> for Quaternion {
    fn from(a: [f64; 4]) -> Self {
        Self::from_array(a)
    }
}

impl From<Quaternion> for [f64; 4] {
    fn from(q: Quaternion) -> Self {
        q.to_array()
    }
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for Quaternion {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl Div<f64> for Quaternion {
    type Output = Self;
    fn div(self, s: f64) -> Self {
        Self::new(self.w / s, self.x / s, self.y / s, self.z / s)
    }
}

pub fn quat_mul(a: Quaternion, b: Quaternion) -> Quaternion {
    a * b
}

pub fn quat_conj(a: Quaternion) -> Quaternion {
    a.conj()
}

pub fn quat_norm(a: Quaternion) -> f64 {
    a.norm()
}

/// An element of SU(2), stored as a quaternion of modulus one.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 4]", try_from = "[f64; 4]")]
pub struct UnitQuaternion(Quaternion);

impl UnitQuaternion {
    pub const IDENTITY: UnitQuaternion = UnitQuaternion(Quaternion::ONE);

    /// Normalises `q`. Returns `None` for the zero quaternion or non-finite input.
    pub fn new(q: Quaternion) -> Option<Self> {
        let n = q.norm();
        (n > 0.0 && n.is_finite()).then(|| Self(q / n))
    }

    pub fn quaternion(self) -> Quaternion {
        self.0
    }

    pub fn inverse(self) -> Self {
        Self(self.0.conj())
    }

    /// Rotation by `angle` about `axis` under the covering map, i.e. the
    /// quaternion `cos(angle/2) + sin(angle/2) axis/|axis|`.
    pub fn from_axis_angle(axis: [f64; 3], angle: f64) -> Self {
        let n = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
        let h = 0.5 * angle / n;
        Self(Quaternion::exp_imaginary([axis[0] * h, axis[1] * h, axis[2] * h]))
    }

    /// `exp(v)` for an imaginary `v`; the one-parameter subgroup through `v`.
    pub fn exp(v: [f64; 3]) -> Self {
        Self(Quaternion::exp_imaginary(v))
    }

    /// The diagonal element `diag(λ, λ̄)` with `λ = e^{iφ}`.
    pub fn torus(phase: f64) -> Self {
        Self(Quaternion::new(phase.cos(), 0.0, 0.0, phase.sin()))
    }

    /// The 2×2 complex matrix of this element acting on `C²`.
    ///
    /// With `q = w + xi + yj + zk` the matrix is
    /// `[[w + iz, y − ix], [−y − ix, w − iz]]`; it is a group homomorphism and
    /// makes the Hopf projection of `C²` intertwine left multiplication with
    /// the rotation `v ↦ q v q⁻¹` (see [`crate::reps::hopf`]).
    pub fn su2_matrix(self) -> [[Complex64; 2]; 2] {
        let q = self.0;
        [
            [Complex64::new(q.w, q.z), Complex64::new(q.y, -q.x)],
            [Complex64::new(-q.y, -q.x), Complex64::new(q.w, -q.z)],
        ]
    }

    /// Inverse of [`UnitQuaternion::su2_matrix`] on SU(2) matrices.
    pub fn from_su2_matrix(m: [[Complex64; 2]; 2]) -> Option<Self> {
        let w = 0.5 * (m[0][0].re + m[1][1].re);
        let z = 0.5 * (m[0][0].im - m[1][1].im);
        let y = 0.5 * (m[0][1].re - m[1][0].re);
        let x = -0.5 * (m[0][1].im + m[1][0].im);
        Self::new(Quaternion::new(w, x, y, z))
    }

    /// Haar-distributed element: four standard Gaussians, normalised.
    pub fn haar<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let q = Quaternion::new(
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
            );
            if let Some(u) = Self::new(q) {
                return u;
            }
        }
    }

    /// Distance between the two elements as points of the 3-sphere.
    pub fn chordal_distance(self, other: Self) -> f64 {
        (self.0 - other.0).norm()
    }
}

impl Mul for UnitQuaternion {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        // renormalise to stop drift under long products
        let q = self.0 * o.0;
        Self(q / q.norm())
    }
}

impl Neg for UnitQuaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

impl From<UnitQuaternion> for [f64; 4] {
    fn from(u: UnitQuaternion) -> Self {
        u.0.to_array()
    }
}

impl TryFrom<[f64; 4]> for UnitQuaternion {
    type Error = String;
    fn try_from(a: [f64; 4]) -> std::result::Result<Self, String> {
        Self::new(Quaternion::from_array(a)).ok_or_else(|| "zero quaternion".to_string())
    }
}

/// Haar sample of SU(2).
pub fn haar_su2<R: Rng + ?Sized>(rng: &mut R) -> UnitQuaternion {
    UnitQuaternion::haar(rng)
}
