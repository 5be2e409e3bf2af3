//! Canonical form for `SO(3)` acting on traceless symmetric matrices plus
//! vectors, and the coordinates fed to the cone chart.
//!
//! Every orbit meets `D × ℝ³` with `D` the sorted diagonal matrices. What is
//! left is the stabiliser of `A` acting on `v`: all of `SO(3)` at `A = 0`,
//! rotations about `e₃` (or `e₁`) with a flip on the two rays, and the Klein
//! four-group of diagonal rotations in the interior.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::algebra::{eig_sym3, Sym3};

/// Relative spectral gap below which two eigenvalues are treated as equal.
pub const DEGENERATE_TOL: f64 = 1e-9;

/// Below this Frobenius norm `A` is treated as zero.
pub const ZERO_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FiveThreeCanon {
    pub lambda: [f64; 3],
    pub r: f64,
    pub v_canon: Vector3<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Stratum {
    Zero,
    /// `λ₁ = λ₂`.
    Ray0,
    /// `λ₂ = λ₃`.
    Ray1,
    Interior,
}

impl FiveThreeCanon {
    pub fn s(&self) -> f64 {
        self.lambda.iter().map(|l| l * l).sum::<f64>().sqrt()
    }

    pub fn stratum(&self) -> Stratum {
        stratum(self.lambda)
    }

    pub fn max_abs_diff(&self, o: &FiveThreeCanon) -> f64 {
        let l = (0..3).map(|i| (self.lambda[i] - o.lambda[i]).abs()).fold(0.0, f64::max);
        l.max((self.r - o.r).abs()).max((self.v_canon - o.v_canon).amax())
    }
}

fn stratum(l: [f64; 3]) -> Stratum {
    let s = l.iter().map(|x| x * x).sum::<f64>().sqrt();
    if s <= ZERO_TOL {
        Stratum::Zero
    } else if l[0] - l[1] <= DEGENERATE_TOL * s {
        Stratum::Ray0
    } else if l[1] - l[2] <= DEGENERATE_TOL * s {
        Stratum::Ray1
    } else {
        Stratum::Interior
    }
}

pub fn canonicalize_53(a: &Sym3, v: &Vector3<f64>) -> FiveThreeCanon {
    let (lambda, frame) = eig_sym3(&a.traceless_part());
    let w = frame.transpose().apply(v);
    let r = v.norm();
    let v_canon = match stratum(lambda) {
        Stratum::Zero => Vector3::new(r, 0.0, 0.0),
        Stratum::Ray0 => Vector3::new(w.x.hypot(w.y), 0.0, w.z.abs()),
        Stratum::Ray1 => Vector3::new(w.x.abs(), w.y.hypot(w.z), 0.0),
        Stratum::Interior => {
            let sign = if w.x * w.y * w.z < 0.0 { -1.0 } else { 1.0 };
            Vector3::new(w.x.abs(), w.y.abs(), sign * w.z.abs())
        }
    };
    FiveThreeCanon { lambda, r, v_canon }
}

/// Ray parameter: `0` on `ℝ₊·diag(1,1,−2)`, `1` on `ℝ₊·diag(2,−1,−1)`,
/// linear in the angle in between.
pub fn ray_parameter(lambda: [f64; 3]) -> f64 {
    let a = (lambda[0] - lambda[1]) / 2f64.sqrt();
    let b = (lambda[0] + lambda[1] - 2.0 * lambda[2]) / 6f64.sqrt();
    if a == 0.0 && b == 0.0 {
        return 0.0;
    }
    (a.atan2(b) / FRAC_PI_3).clamp(0.0, 1.0)
}

const CENTROID: f64 = 1.0 / 3.0;

fn plane_basis() -> (Vector3<f64>, Vector3<f64>) {
    (Vector3::new(1.0, -1.0, 0.0) / 2f64.sqrt(), Vector3::new(1.0, 1.0, -2.0) / 6f64.sqrt())
}

/// Distance from the centroid of the standard simplex to its boundary along
/// the in-plane direction at angle `phi`.
fn simplex_radius(phi: f64) -> f64 {
    let (b1, b2) = plane_basis();
    let d = b1 * phi.cos() + b2 * phi.sin();
    d.iter().filter(|c| **c < 0.0).map(|c| -CENTROID / c).fold(f64::INFINITY, f64::min)
}

/// A homotopy `h_t` of self-maps of the spherical triangle `S² ∩ ℝ³₊` from the
/// identity to the vertex cycle `e₁ ↦ e₃ ↦ e₂ ↦ e₁`.
///
/// The triangle is projected onto the simplex, rotated about its centroid by
/// `−2πt/3` and rescaled along rays so that it maps onto itself.
pub fn twist(t: f64, x: &Vector3<f64>) -> Vector3<f64> {
    if t == 0.0 {
        return *x;
    }
    let sum = x.sum();
    if sum <= 0.0 {
        return *x;
    }
    let (b1, b2) = plane_basis();
    let d = x / sum - Vector3::repeat(CENTROID);
    let (p, q) = (d.dot(&b1), d.dot(&b2));
    let rho = p.hypot(q);
    if rho < 1e-300 {
        return *x;
    }
    let phi = q.atan2(p);
    let phi_t = phi - t * 2.0 * FRAC_PI_3;
    let rho_t = rho * simplex_radius(phi_t) / simplex_radius(phi);
    let y = (Vector3::repeat(CENTROID) + (b1 * phi_t.cos() + b2 * phi_t.sin()) * rho_t).map(|c| c.max(0.0));
    y / y.norm()
}

/// `(s, r, t, u₁, u₂, j)` for the cone chart.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Chart53Params {
    pub s: f64,
    pub r: f64,
    pub t: f64,
    pub u1: f64,
    pub u2: f64,
    pub j: i8,
}

/// Inverse of `x = (sin(πu₁/2)cos(πu₂/2), sin(πu₁/2)sin(πu₂/2), cos(πu₁/2))`
/// on the positive octant.
pub fn spherical_params(y: &Vector3<f64>) -> (f64, f64) {
    let u1 = (y.z.clamp(-1.0, 1.0).acos() / FRAC_PI_2).clamp(0.0, 1.0);
    let u2 = if y.x == 0.0 && y.y == 0.0 { 0.0 } else { (y.y.atan2(y.x) / FRAC_PI_2).clamp(0.0, 1.0) };
    (u1, u2)
}

pub fn extract_53_chart(c: &FiveThreeCanon) -> Chart53Params {
    let s = c.s();
    let t = if c.stratum() == Stratum::Zero { 0.0 } else { ray_parameter(c.lambda) };
    let t = match c.stratum() {
        Stratum::Ray0 => 0.0,
        Stratum::Ray1 => 1.0,
        _ => t,
    };
    let r = c.r;
    if r == 0.0 {
        return Chart53Params { s, r, t, u1: 0.0, u2: 0.0, j: 1 };
    }
    let w = c.v_canon;
    let j = if w.x * w.y * w.z < 0.0 { -1 } else { 1 };
    let x = w.map(f64::abs) / w.norm();
    let (u1, u2) = spherical_params(&twist(t, &x));
    Chart53Params { s, r, t, u1, u2, j }
}
