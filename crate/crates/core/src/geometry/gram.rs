//! Gram coordinates of triples of unit vectors and the region `D` they fill.

use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use crate::algebra::{eig_sym3, Sym3};
use crate::error::{Error, Result};

/// `(x₁, x₂, x₃) = ((v₂,v₃), (v₃,v₁), (v₁,v₂))`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GramPoint {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl GramPoint {
    pub const fn new(x1: f64, x2: f64, x3: f64) -> Self {
        Self { x1, x2, x3 }
    }

    pub fn from_array(x: [f64; 3]) -> Self {
        Self::new(x[0], x[1], x[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    pub fn max_abs_diff(self, o: Self) -> f64 {
        (self.x1 - o.x1).abs().max((self.x2 - o.x2).abs()).max((self.x3 - o.x3).abs())
    }
}

pub fn gram_map(v: &[Vector3<f64>; 3]) -> GramPoint {
    GramPoint::new(v[1].dot(&v[2]), v[2].dot(&v[0]), v[0].dot(&v[1]))
}

/// `A(x)` with unit diagonal and `A₁₂ = x₃`, `A₁₃ = x₂`, `A₂₃ = x₁`.
pub fn gram_matrix(x: GramPoint) -> Sym3 {
    Sym3::new(1.0, 1.0, 1.0, x.x3, x.x2, x.x1)
}

/// `δ(x) = det A(x) = 2x₁x₂x₃ + 1 − (x₁² + x₂² + x₃²)`.
pub fn delta(x: GramPoint) -> f64 {
    2.0 * x.x1 * x.x2 * x.x3 + 1.0 - (x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3)
}

pub fn in_d(x: GramPoint, tol: f64) -> bool {
    crate::algebra::psd_check(&gram_matrix(x), tol)
}

/// Unit vectors realising `x`: the columns of `diag(√λ) Qᵀ` for `A(x) = Q diag(λ) Qᵀ`.
pub fn gram_section(x: GramPoint) -> Result<[Vector3<f64>; 3]> {
    let (lambda, frame) = eig_sym3(&gram_matrix(x));
    if lambda[2] < -1e-9 {
        return Err(Error::NotInD(lambda[2]));
    }
    let root = Matrix3::from_diagonal(&Vector3::from(lambda.map(|l| l.max(0.0).sqrt())));
    let b = root * frame.matrix().transpose();
    Ok([0, 1, 2].map(|i| {
        let c = b.column(i).into_owned();
        c / c.norm()
    }))
}
