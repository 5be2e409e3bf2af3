//! The two quaternionic cases: `ℍ²` with right multiplication and
//! `ℍ ⊕ ℍ₀` with `(z, z₀) ↦ (z h⁻¹, h z₀ h⁻¹)`.

use super::coords::QuotientCoord;
use super::unique_t::solve_unique_t;
use crate::algebra::Quaternion;
use crate::error::{Error, Result};
use crate::reps::RepPoint;

const IMAG_TOL: f64 = 1e-10;

pub fn inv_44(z1: Quaternion, z2: Quaternion) -> QuotientCoord {
    QuotientCoord::RH { d: z1.norm_sqr() - z2.norm_sqr(), lambda: z1 * z2.conj() }
}

/// Preimage with `z₁` real and nonnegative.
pub fn section_44(d: f64, lambda: Quaternion) -> (Quaternion, Quaternion) {
    let t = solve_unique_t(&[0.0, d], lambda.norm_sqr()).expect("norm is nonnegative");
    let a = t + d;
    if a > 0.0 {
        let s = a.sqrt();
        (Quaternion::real(s), lambda.conj() / s)
    } else {
        (Quaternion::ZERO, Quaternion::real(t.sqrt()))
    }
}

pub fn inv_43(z: Quaternion, z0: Quaternion) -> Result<QuotientCoord> {
    if !z0.is_imaginary(IMAG_TOL * z0.norm().max(1.0)) {
        return Err(Error::NotImaginary(z0.w));
    }
    let l = z * Quaternion::imaginary(z0.vector()) * z.conj();
    Ok(QuotientCoord::RH0 { d: z.norm_sqr() - z0.norm_sqr(), lambda0: Quaternion::imaginary(l.vector()) })
}

/// Preimage with `z` real and nonnegative; when `z = 0` the vector `z₀`
/// is put on the `i` axis.
pub fn section_43(d: f64, lambda0: Quaternion) -> (Quaternion, Quaternion) {
    let t = solve_unique_t(&[0.0, d, d], lambda0.norm_sqr()).expect("norm is nonnegative");
    let a = t + d;
    if a > 0.0 {
        (Quaternion::real(a.sqrt()), Quaternion::imaginary(lambda0.vector()) / a)
    } else {
        (Quaternion::ZERO, Quaternion::imaginary([t.sqrt(), 0.0, 0.0]))
    }
}

/// [`inv_44`] or [`inv_43`] on a [`RepPoint`] of the matching case.
pub fn invariant_quaternionic(p: &RepPoint) -> Result<QuotientCoord> {
    match p {
        RepPoint::QuatPair { z1, z2 } => Ok(inv_44(*z1, *z2)),
        RepPoint::QuatVec { z, z0 } => inv_43(*z, *z0),
        other => Err(Error::TypeMismatch { element: "quaternionic invariant", case: other.case().name() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::UnitQuaternion;
    use crate::reps::{act, RepCase};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rh(c: QuotientCoord) -> (f64, Quaternion) {
        match c {
            QuotientCoord::RH { d, lambda } => (d, lambda),
            QuotientCoord::RH0 { d, lambda0 } => (d, lambda0),
            _ => unreachable!(),
        }
    }

    #[test]
    fn inv_44_examples() {
        let one = Quaternion::ONE;
        let zero = Quaternion::ZERO;
        assert_eq!(rh(inv_44(one, zero)), (1.0, zero));
        assert_eq!(rh(inv_44(zero, one)), (-1.0, zero));
        assert_eq!(rh(inv_44(one, Quaternion::I)), (0.0, -Quaternion::I));
    }

    #[test]
    fn section_44_examples() {
        assert_eq!(section_44(1.0, Quaternion::ZERO), (Quaternion::ONE, Quaternion::ZERO));
        assert_eq!(section_44(-4.0, Quaternion::ZERO), (Quaternion::ZERO, Quaternion::real(2.0)));
        assert_eq!(section_44(0.0, Quaternion::ONE), (Quaternion::ONE, Quaternion::ONE));
    }

    #[test]
    fn inv_43_examples() {
        let (one, i, zero) = (Quaternion::ONE, Quaternion::I, Quaternion::ZERO);
        assert_eq!(rh(inv_43(one, i).unwrap()), (0.0, i));
        assert_eq!(rh(inv_43(zero, i).unwrap()), (-1.0, zero));
        assert_eq!(rh(inv_43(Quaternion::real(2.0), zero).unwrap()), (4.0, zero));
        assert_eq!(inv_43(one, one), Err(Error::NotImaginary(1.0)));
    }

    #[test]
    fn section_43_examples() {
        let (one, i, zero) = (Quaternion::ONE, Quaternion::I, Quaternion::ZERO);
        assert_eq!(section_43(0.0, i), (one, i));
        assert_eq!(section_43(4.0, zero), (Quaternion::real(2.0), zero));
        assert_eq!(section_43(-1.0, zero), (zero, i));
    }

    #[test]
    fn invariance_and_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..2000 {
            for case in [RepCase::QuatPair, RepCase::QuatVec] {
                let p = case.random_point(&mut rng);
                let g = UnitQuaternion::haar(&mut rng);
                let a = invariant_quaternionic(&p).unwrap();
                let b = invariant_quaternionic(&act(&g.into(), &p).unwrap()).unwrap();
                assert!(a.distance(&b).unwrap() <= 1e-12 * (1.0 + p.norm() * p.norm()));
            }
            let d = rng.random_range(-3.0..3.0);
            let l = Quaternion::new(rng.random(), rng.random(), -rng.random::<f64>(), rng.random());
            let (z1, z2) = section_44(d, l);
            assert!(inv_44(z1, z2).distance(&QuotientCoord::RH { d, lambda: l }).unwrap() < 1e-12);
            let l0 = Quaternion::imaginary(l.vector());
            let (z, z0) = section_43(d, l0);
            assert!(inv_43(z, z0).unwrap().distance(&QuotientCoord::RH0 { d, lambda0: l0 }).unwrap() < 1e-12);
        }
    }
}
