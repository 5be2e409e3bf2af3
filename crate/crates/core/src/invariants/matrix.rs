//! Three copies of the tautological representation: `A ↦ A C⁻¹` on 3×3 matrices.

use nalgebra::{Matrix3, Vector3};

use super::coords::QuotientCoord;
use super::unique_t::solve_unique_t;
use crate::algebra::{eig_sym3, Sym3};

/// `(traceless part of AAᵀ, det A)`.
pub fn inv_333(a: &Matrix3<f64>) -> QuotientCoord {
    let aat = Sym3::from_matrix(&(a * a.transpose()));
    QuotientCoord::SymDet { s: aat.traceless_part(), det: a.determinant() }
}

/// A matrix `P` with `PPᵀ = tE + S` and `det P = det`.
pub fn section_333(s: &Sym3, det: f64) -> Matrix3<f64> {
    let (lambda, frame) = eig_sym3(&s.traceless_part());
    let t = solve_unique_t(&lambda, det * det).expect("square is nonnegative");
    let roots = Vector3::from(lambda.map(|l| (t + l).max(0.0).sqrt()));
    let f = frame.matrix();
    let p = f * Matrix3::from_diagonal(&roots) * f.transpose();
    if det < 0.0 {
        p * Matrix3::from_diagonal(&Vector3::new(1.0, 1.0, -1.0))
    } else {
        p
    }
}
