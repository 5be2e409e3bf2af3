//! Degree-3 binary forms: the factor map π, the norm `r′`, the θ-functions
//! and the Hopf-type map φ₀.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::coords::QuotientCoord;
use crate::algebra::BinaryForm;
use crate::error::{Error, Result};
use crate::geometry::sheet_label;
use crate::reps::{hopf, RepPoint};

pub type C2 = [Complex64; 2];

/// Hermitian product `v*w`.
pub fn inner(v: C2, w: C2) -> Complex64 {
    v[0].conj() * w[0] + v[1].conj() * w[1]
}

/// `det(v | w)`.
pub fn det2(v: C2, w: C2) -> Complex64 {
    v[0] * w[1] - w[0] * v[1]
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThetaValues {
    pub theta1_prime: Complex64,
    pub theta2_prime: Complex64,
    pub theta1: Complex64,
    pub theta2: Complex64,
    pub theta3: Complex64,
}

pub fn theta1_prime(v1: C2, v2: C2, v3: C2) -> Complex64 {
    inner(v3, v1) * det2(v3, v2) + inner(v3, v2) * det2(v3, v1)
}

pub fn theta2_prime(v1: C2, v2: C2, _v3: C2) -> Complex64 {
    let d = det2(v1, v2);
    d * d
}

pub fn theta_values(v1: C2, v2: C2, v3: C2) -> ThetaValues {
    let t1 = [theta1_prime(v1, v2, v3), theta1_prime(v2, v3, v1), theta1_prime(v3, v1, v2)];
    let t2 = [theta2_prime(v1, v2, v3), theta2_prime(v2, v3, v1), theta2_prime(v3, v1, v2)];
    let theta2 = t2[0] * t2[1] * t2[2];
    let pair = t1[1] * t1[2];
    ThetaValues {
        theta1_prime: t1[0],
        theta2_prime: t2[0],
        theta1: t1[0] * t1[1] * t1[2],
        theta2,
        theta3: pair * pair * theta2,
    }
}

/// The cubic form `v ↦ ∏ (vⱼ, v)`.
pub fn pi_poly(v1: C2, v2: C2, v3: C2) -> Result<BinaryForm> {
    if [v1, v2, v3].iter().any(|v| v[0].norm_sqr() + v[1].norm_sqr() == 0.0) {
        return Err(Error::ZeroVector);
    }
    Ok(BinaryForm::from_factors(&[v1, v2, v3]))
}

/// Unit vectors with `π(v₁, v₂, v₃) = f / r′(f)`, and `r′(f)`.
pub fn unit_factorization(f: &BinaryForm) -> Result<([C2; 3], f64)> {
    if f.degree() != 3 {
        return Err(Error::BadDegree(f.degree()));
    }
    let fac = f.factor()?;
    let r = fac.constant.norm();
    // (λv, ·) = λ̄ (v, ·), so the phase of the constant goes into v₁ conjugated
    let phase = (fac.constant / r).conj();
    let v = [[fac.roots[0][0] * phase, fac.roots[0][1] * phase], fac.roots[1], fac.roots[2]];
    Ok((v, r))
}

/// `r′(f)`: the modulus of the constant in `f = c ∏ (vⱼ, ·)` with unit `vⱼ`.
pub fn r_norm(f: &BinaryForm) -> Result<f64> {
    Ok(f.factor()?.constant.norm())
}

pub fn normalize_r(f: &BinaryForm) -> Result<BinaryForm> {
    let r = r_norm(f)?;
    Ok(f.scale(Complex64::new(1.0 / r, 0.0)))
}

/// The length-preserving map `ℂ² → ℝ³` whose fibres are `(λz₁, λ²z₂)`.
pub fn hopf_phi0(z1: Complex64, z2: Complex64) -> [f64; 3] {
    let n1 = z1.norm();
    if n1 == 0.0 {
        return [z2.norm(), 0.0, 0.0];
    }
    let len = (z1.norm_sqr() + z2.norm_sqr()).sqrt();
    let w = z1 * z1 * z2.conj() / (n1 * len);
    [(z2.norm_sqr() - z1.norm_sqr()) / len, 2.0 * w.re, 2.0 * w.im]
}

/// Complete invariant of a nonzero cubic form.
pub fn inv_8(p: &RepPoint) -> Result<QuotientCoord> {
    let RepPoint::PolyC(f) = p else {
        return Err(Error::TypeMismatch { element: "inv_8", case: p.case().name() });
    };
    let (v, scale) = unit_factorization(f)?;
    let base = sheet_label(&v.map(hopf));
    let th = theta_values(v[0], v[1], v[2]);
    Ok(QuotientCoord::ThetaTriple { base, theta1: th.theta1, theta2: th.theta2, scale })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::UnitQuaternion;
    use crate::reps::{act, RepCase};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_unit(rng: &mut ChaCha8Rng) -> C2 {
        let v = [c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)), c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))];
        let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
        [v[0] / n, v[1] / n]
    }

    fn apply(g: UnitQuaternion, v: C2) -> C2 {
        let m = g.su2_matrix();
        [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
    }

    #[test]
    fn closed_forms() {
        let e1 = [c(1.0, 0.0), c(0.0, 0.0)];
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        let (v1, v2) = (random_unit(&mut rng), random_unit(&mut rng));
        let got = theta1_prime(v1, v2, e1);
        assert!((got - (v1[0] * v2[1] + v2[0] * v1[1])).norm() < 1e-15);
        assert_eq!(theta2_prime(v1, v1, e1), c(0.0, 0.0));

        let (a, b) = (0.8, 0.6);
        let (p, m) = ([c(a, 0.0), c(b, 0.0)], [c(a, 0.0), c(-b, 0.0)]);
        let val = theta1_prime(m, e1, p);
        assert!((val - c(-0.936, 0.0)).norm() < 1e-14);
        assert!((val - c(-b * (3.0 * a * a - b * b), 0.0)).norm() < 1e-14);
        assert!((theta_values(p, m, e1).theta2 - c(4.0 * a * a * b.powi(6), 0.0)).norm() < 1e-14);
    }

    #[test]
    fn first_two_arguments_commute() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..100 {
            let (v1, v2, v3) = (random_unit(&mut rng), random_unit(&mut rng), random_unit(&mut rng));
            assert!((theta1_prime(v1, v2, v3) - theta1_prime(v2, v1, v3)).norm() < 1e-14);
            assert!((theta2_prime(v1, v2, v3) - theta2_prime(v2, v1, v3)).norm() < 1e-14);
        }
    }

    #[test]
    fn pi_poly_examples() {
        let (x, y) = ([c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]);
        assert_eq!(pi_poly(x, x, x).unwrap().coeffs, vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(pi_poly(x, y, x).unwrap().coeffs, vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(pi_poly(x, [c(0.0, 0.0); 2], x), Err(Error::ZeroVector));
    }

    #[test]
    fn pi_poly_scaling_and_equivariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..500 {
            let v = [random_unit(&mut rng), random_unit(&mut rng), random_unit(&mut rng)];
            let l: Vec<Complex64> = (0..3).map(|_| c(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0))).collect();
            let scaled = pi_poly([v[0][0] * l[0], v[0][1] * l[0]], [v[1][0] * l[1], v[1][1] * l[1]], [v[2][0] * l[2], v[2][1] * l[2]]).unwrap();
            let base = pi_poly(v[0], v[1], v[2]).unwrap();
            assert!(scaled.sub(&base.scale((l[0] * l[1] * l[2]).conj())).coeff_norm() < 1e-12);

            let g = UnitQuaternion::haar(&mut rng);
            let moved = pi_poly(apply(g, v[0]), apply(g, v[1]), apply(g, v[2])).unwrap();
            let acted = act(&g.into(), &RepPoint::PolyC(base.clone())).unwrap();
            assert!(RepPoint::PolyC(moved).distance(&acted).unwrap() < 1e-12);
            assert!((r_norm(&base).unwrap() - 1.0).abs() < 1e-8);
        }
    }

    #[test]
    fn r_norm_examples() {
        let x3 = BinaryForm::new(vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(r_norm(&x3).unwrap(), 1.0);
        assert_eq!(r_norm(&x3.scale(c(2.0, 0.0))).unwrap(), 2.0);
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..200 {
            let RepPoint::PolyC(f) = RepCase::PolyC(4).random_point(&mut rng) else { unreachable!() };
            let l = c(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
            let (a, b) = (r_norm(&f).unwrap(), r_norm(&f.scale(l)).unwrap());
            assert!((b - l.norm() * a).abs() < 1e-10 * b);
            assert!((r_norm(&normalize_r(&f).unwrap()).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn phi0_examples_and_fibres() {
        assert_eq!(hopf_phi0(c(0.0, 0.0), c(0.0, 2.0)), [2.0, 0.0, 0.0]);
        assert_eq!(hopf_phi0(c(1.0, 0.0), c(0.0, 0.0)), [-1.0, 0.0, 0.0]);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let y = hopf_phi0(c(h, 0.0), c(h, 0.0));
        assert!(y[0].abs() < 1e-15 && (y[1] - 1.0).abs() < 1e-15 && y[2].abs() < 1e-15);
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        for _ in 0..1000 {
            let (z1, z2) = (c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)), c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
            let y = hopf_phi0(z1, z2);
            let n = (y[0] * y[0] + y[1] * y[1] + y[2] * y[2]).sqrt();
            assert!((n - (z1.norm_sqr() + z2.norm_sqr()).sqrt()).abs() < 1e-12);
            let l = Complex64::from_polar(1.0, rng.random_range(0.0..6.3));
            let y2 = hopf_phi0(l * z1, l * l * z2);
            assert!((0..3).all(|k| (y[k] - y2[k]).abs() < 1e-12));
        }
    }

    #[test]
    fn inv_8_is_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(45);
        for _ in 0..500 {
            let p = RepCase::PolyC(4).random_point(&mut rng);
            let g = UnitQuaternion::haar(&mut rng);
            let a = inv_8(&p).unwrap();
            let b = inv_8(&act(&g.into(), &p).unwrap()).unwrap();
            assert!(a.distance(&b).unwrap() < 1e-8, "{a:?} vs {b:?}");
        }
    }
}
