//! Roots of binary forms as points of the sphere, and the stabilizer
//! witnesses for real forms.

use nalgebra::Vector3;
use num_complex::Complex64;

use super::point::RepPoint;
use super::real_form;
use crate::algebra::UnitQuaternion;
use crate::error::{Error, Result};

/// Hopf projection `(a, b) ↦ (2 Re(a b̄), 2 Im(a b̄), |b|² − |a|²)`.
///
/// It sends `(1, 0)` to the south pole and intertwines the SU(2) action on
/// ℂ² with the covering rotation.
pub fn hopf(v: [Complex64; 2]) -> Vector3<f64> {
    let ab = v[0] * v[1].conj();
    Vector3::new(2.0 * ab.re, 2.0 * ab.im, v[1].norm_sqr() - v[0].norm_sqr())
}

/// The unordered tuple of sphere points of the linear factors of a form.
pub fn roots_to_sphere(p: &RepPoint) -> Result<Vec<Vector3<f64>>> {
    let f = match p {
        RepPoint::PolyC(f) | RepPoint::PolyR(f) => f,
        other => return Err(Error::TypeMismatch { element: "roots", case: other.case().name() }),
    };
    Ok(f.roots()?.into_iter().map(hopf).collect())
}

/// Witnesses for the stabilizer statements about `V_ℝ(2m+1)`.
#[derive(Clone, Debug)]
pub struct Lemma31Witnesses {
    /// `x^m y^m`, fixed by the diagonal torus.
    pub torus_vector: RepPoint,
    /// `x^{2m} + (−1)^m y^{2m}`, with finite stabilizer.
    pub finite_vector: RepPoint,
    /// `diag(e^{πi/m}, e^{−πi/m})`, a noncentral element fixing `finite_vector`.
    pub finite_element: UnitQuaternion,
}

pub fn lemma31_witnesses(m: usize) -> Result<Lemma31Witnesses> {
    if m < 2 {
        return Err(Error::BadDegree(m));
    }
    let zero = Complex64::new(0.0, 0.0);
    let mut c = vec![zero; m + 1];
    c[0] = 1.0.into();
    let torus_vector = RepPoint::PolyR(real_form::from_half(&c));
    let mut c = vec![zero; m + 1];
    c[m] = 1.0.into();
    let finite_vector = RepPoint::PolyR(real_form::from_half(&c));
    debug_assert!(matches!(&finite_vector, RepPoint::PolyR(f) if f.coeffs[2 * m] == Complex64::new(if m % 2 == 0 { 1.0 } else { -1.0 }, 0.0)));
    Ok(Lemma31Witnesses {
        torus_vector,
        finite_vector,
        finite_element: UnitQuaternion::torus(std::f64::consts::PI / m as f64),
    })
}
