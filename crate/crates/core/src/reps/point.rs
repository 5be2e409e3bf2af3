//! Points of the concrete representation models and the group action on them.

use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use super::real_form;
use crate::algebra::{su2_to_so3, BinaryForm, Quaternion, Rotation3, Sym3, UnitQuaternion};
use crate::error::{Error, Result};

/// Tolerance for the structural constraints checked by the constructors.
const STRUCT_TOL: f64 = 1e-10;

/// Which model a point lives in, with its size parameter where needed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RepCase {
    /// `Mat₂ₓ₁(ℍ)`, two copies of the 4-dimensional irreducible.
    QuatPair,
    /// `ℍ ⊕ ℍ₀`.
    QuatVec,
    /// `Mat₃ₓ₃(ℝ)`, three copies of the tautological SO(3) representation.
    Mat3,
    /// `V(m)`: complex binary forms with `m` coefficients (degree `m − 1`).
    PolyC(usize),
    /// `V_ℝ(d)` for odd `d`: the real form inside forms of degree `d − 1`.
    PolyR(usize),
    /// Traceless symmetric 3×3 matrices plus a vector of ℝ³.
    FiveThree,
}

impl RepCase {
    pub fn name(&self) -> &'static str {
        match self {
            RepCase::QuatPair => "QuatPair",
            RepCase::QuatVec => "QuatVec",
            RepCase::Mat3 => "Mat3",
            RepCase::PolyC(_) => "PolyC",
            RepCase::PolyR(_) => "PolyR",
            RepCase::FiveThree => "FiveThree",
        }
    }

    /// Real dimension of the model.
    pub fn real_dim(&self) -> usize {
        match *self {
            RepCase::QuatPair => 8,
            RepCase::QuatVec => 7,
            RepCase::Mat3 => 9,
            RepCase::PolyC(m) => 2 * m,
            RepCase::PolyR(d) => d,
            RepCase::FiveThree => 8,
        }
    }

    /// Point with i.i.d. standard Gaussian orthonormal coordinates.
    pub fn random_point<R: Rng + ?Sized>(&self, rng: &mut R) -> RepPoint {
        let coords: Vec<f64> = (0..self.real_dim()).map(|_| rng.sample(StandardNormal)).collect();
        RepPoint::from_coords(*self, &coords).expect("coordinate count matches the case")
    }
}

/// A group element: SU(2) as unit quaternions or SO(3) as rotation matrices.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum GroupElement {
    Su2(UnitQuaternion),
    So3(Rotation3),
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement::Su2(UnitQuaternion::IDENTITY)
    }

    /// The rotation this element induces on ℝ³.
    pub fn rotation(&self) -> Rotation3 {
        match self {
            GroupElement::Su2(q) => su2_to_so3(*q),
            GroupElement::So3(r) => *r,
        }
    }

    /// A unit quaternion covering this element; for rotations the lift with `w ≥ 0`.
    pub fn quaternion(&self) -> UnitQuaternion {
        match self {
            GroupElement::Su2(q) => *q,
            GroupElement::So3(r) => r.to_unit_quaternion(),
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            GroupElement::Su2(_) => "UnitQuaternion",
            GroupElement::So3(_) => "Rotation3",
        }
    }
}

impl From<UnitQuaternion> for GroupElement {
    fn from(q: UnitQuaternion) -> Self {
        GroupElement::Su2(q)
    }
}

impl From<Rotation3> for GroupElement {
    fn from(r: Rotation3) -> Self {
        GroupElement::So3(r)
    }
}

/// A vector in one of the representation models.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum RepPoint {
    QuatPair { z1: Quaternion, z2: Quaternion },
    QuatVec { z: Quaternion, z0: Quaternion },
    Mat3(Matrix3<f64>),
    PolyC(BinaryForm),
    PolyR(BinaryForm),
    FiveThree { a: Sym3, v: Vector3<f64> },
}

fn ortho_basis_traceless() -> [Sym3; 5] {
    let r2 = std::f64::consts::SQRT_2;
    let r6 = 6f64.sqrt();
    [
        Sym3::new(1.0 / r2, -1.0 / r2, 0.0, 0.0, 0.0, 0.0),
        Sym3::new(1.0 / r6, 1.0 / r6, -2.0 / r6, 0.0, 0.0, 0.0),
        Sym3::new(0.0, 0.0, 0.0, 1.0 / r2, 0.0, 0.0),
        Sym3::new(0.0, 0.0, 0.0, 0.0, 1.0 / r2, 0.0),
        Sym3::new(0.0, 0.0, 0.0, 0.0, 0.0, 1.0 / r2),
    ]
}

fn sym_dot(a: &Sym3, b: &Sym3) -> f64 {
    let (x, y) = (a.entries(), b.entries());
    x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + 2.0 * (x[3] * y[3] + x[4] * y[4] + x[5] * y[5])
}

impl RepPoint {
    pub fn quat_pair(z1: Quaternion, z2: Quaternion) -> Self {
        RepPoint::QuatPair { z1, z2 }
    }

    pub fn quat_vec(z: Quaternion, z0: Quaternion) -> Result<Self> {
        if !z0.is_imaginary(STRUCT_TOL) {
            return Err(Error::NotImaginary(z0.w));
        }
        Ok(RepPoint::QuatVec { z, z0 })
    }

    pub fn poly_c(coeffs: Vec<Complex64>) -> Self {
        RepPoint::PolyC(BinaryForm::new(coeffs))
    }

    /// Checks the reality condition `c₋ₖ = (−1)ᵏ conj(cₖ)` before wrapping.
    pub fn poly_r(form: BinaryForm) -> Result<Self> {
        if form.degree() % 2 == 1 {
            return Err(Error::BadDegree(form.degree()));
        }
        let defect = real_form::reality_defect(&form);
        if defect > 1e-12 * form.coeff_norm().max(1.0) {
            return Err(Error::NotReal(defect));
        }
        Ok(RepPoint::PolyR(form))
    }

    pub fn five_three(a: Sym3, v: Vector3<f64>) -> Result<Self> {
        if !a.is_traceless(STRUCT_TOL * a.frobenius_norm().max(1.0)) {
            return Err(Error::OutOfRange { name: "trace", value: a.trace() });
        }
        Ok(RepPoint::FiveThree { a, v })
    }

    pub fn case(&self) -> RepCase {
        match self {
            RepPoint::QuatPair { .. } => RepCase::QuatPair,
            RepPoint::QuatVec { .. } => RepCase::QuatVec,
            RepPoint::Mat3(_) => RepCase::Mat3,
            RepPoint::PolyC(f) => RepCase::PolyC(f.coeffs.len()),
            RepPoint::PolyR(f) => RepCase::PolyR(f.coeffs.len()),
            RepPoint::FiveThree { .. } => RepCase::FiveThree,
        }
    }

    /// Coordinates in an orthonormal basis for the invariant inner product.
    ///
    /// For forms the basis is `x^{n−k}y^k / √C(n,k)`, so the Euclidean norm of
    /// the coordinates is the Bombieri norm. For `PolyR` only `c_0, …, c_m`
    /// are read; `c_0` contributes its real part and each `c_k`, `k > 0`,
    /// stands for itself and its mirror `c_{−k}`.
    pub fn coords(&self) -> Vec<f64> {
        match self {
            RepPoint::QuatPair { z1, z2 } => [z1.to_array(), z2.to_array()].concat(),
            RepPoint::QuatVec { z, z0 } => [z.to_array().as_slice(), &z0.vector()].concat(),
            RepPoint::Mat3(a) => a.iter().copied().collect(),
            RepPoint::PolyC(f) => {
                let n = f.degree();
                f.coeffs
                    .iter()
                    .enumerate()
                    .flat_map(|(k, c)| {
                        let s = crate::algebra::binomial(n, k).sqrt();
                        [c.re / s, c.im / s]
                    })
                    .collect()
            }
            RepPoint::PolyR(f) => real_form::coords(f),
            RepPoint::FiveThree { a, v } => {
                let mut out: Vec<f64> = ortho_basis_traceless().iter().map(|b| sym_dot(a, b)).collect();
                out.extend(v.iter());
                out
            }
        }
    }

    /// Inverse of [`RepPoint::coords`].
    pub fn from_coords(case: RepCase, x: &[f64]) -> Result<Self> {
        if x.len() != case.real_dim() {
            return Err(Error::DimensionMismatch);
        }
        Ok(match case {
            RepCase::QuatPair => RepPoint::QuatPair {
                z1: Quaternion::new(x[0], x[1], x[2], x[3]),
                z2: Quaternion::new(x[4], x[5], x[6], x[7]),
            },
            RepCase::QuatVec => RepPoint::QuatVec {
                z: Quaternion::new(x[0], x[1], x[2], x[3]),
                z0: Quaternion::imaginary([x[4], x[5], x[6]]),
            },
            RepCase::Mat3 => RepPoint::Mat3(Matrix3::from_column_slice(x)),
            RepCase::PolyC(m) => {
                let n = m - 1;
                RepPoint::PolyC(BinaryForm::new(
                    (0..m)
                        .map(|k| Complex64::new(x[2 * k], x[2 * k + 1]) * crate::algebra::binomial(n, k).sqrt())
                        .collect(),
                ))
            }
            RepCase::PolyR(d) => {
                if d % 2 == 0 {
                    return Err(Error::BadDegree(d));
                }
                RepPoint::PolyR(real_form::from_coords(x))
            }
            RepCase::FiveThree => {
                let mut a = Sym3::ZERO;
                for (b, c) in ortho_basis_traceless().iter().zip(x) {
                    let e = a.entries();
                    let f = b.entries();
                    a = Sym3::new(
                        e[0] + c * f[0],
                        e[1] + c * f[1],
                        e[2] + c * f[2],
                        e[3] + c * f[3],
                        e[4] + c * f[4],
                        e[5] + c * f[5],
                    );
                }
                RepPoint::FiveThree { a, v: Vector3::new(x[5], x[6], x[7]) }
            }
        })
    }

    /// Norm of the invariant inner product.
    pub fn norm(&self) -> f64 {
        self.coords().iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn distance(&self, other: &RepPoint) -> Result<f64> {
        if self.case() != other.case() {
            return Err(Error::CaseMismatch { left: self.case().name(), right: other.case().name() });
        }
        Ok(self
            .coords()
            .iter()
            .zip(other.coords())
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt())
    }

    pub fn scale(&self, s: f64) -> RepPoint {
        let x: Vec<f64> = self.coords().iter().map(|c| c * s).collect();
        RepPoint::from_coords(self.case(), &x).expect("same case")
    }

    /// Derivative of `ε ↦ act(exp(εξ), p)` at `ε = 0` for imaginary `ξ`.
    pub fn infinitesimal(&self, xi: [f64; 3]) -> RepPoint {
        let xq = Quaternion::imaginary(xi);
        // the rotation generator of exp(εξ) is v ↦ 2ξ × v
        let omega = Matrix3::new(0.0, -2.0 * xi[2], 2.0 * xi[1], 2.0 * xi[2], 0.0, -2.0 * xi[0], -2.0 * xi[1], 2.0 * xi[0], 0.0);
        match self {
            RepPoint::QuatPair { z1, z2 } => RepPoint::QuatPair { z1: -(*z1 * xq), z2: -(*z2 * xq) },
            RepPoint::QuatVec { z, z0 } => RepPoint::QuatVec { z: -(*z * xq), z0: xq * *z0 - *z0 * xq },
            RepPoint::Mat3(a) => RepPoint::Mat3(-(a * omega)),
            RepPoint::PolyC(f) => RepPoint::PolyC(form_infinitesimal(f, xi)),
            RepPoint::PolyR(f) => RepPoint::PolyR(form_infinitesimal(f, xi)),
            RepPoint::FiveThree { a, v } => {
                let am = a.to_matrix();
                RepPoint::FiveThree { a: Sym3::from_matrix(&(omega * am - am * omega)), v: omega * v }
            }
        }
    }
}

/// `−(f_x · (Xw)₁ + f_y · (Xw)₂)` where `X` is the 2×2 matrix of `ξ`.
fn form_infinitesimal(f: &BinaryForm, xi: [f64; 3]) -> BinaryForm {
    // the matrix of an imaginary quaternion, by linearity of the SU(2) model
    let x = [
        [Complex64::new(0.0, xi[2]), Complex64::new(xi[1], -xi[0])],
        [Complex64::new(-xi[1], -xi[0]), Complex64::new(0.0, -xi[2])],
    ];
    let fx = f.partial_x().mul_linear(x[0]);
    let fy = f.partial_y().mul_linear(x[1]);
    fx.add(&fy).scale(Complex64::new(-1.0, 0.0))
}

/// The action of SU(2) or SO(3) on each model.
///
/// Quaternionic cases: `z ↦ z h⁻¹` and `z₀ ↦ h z₀ h⁻¹`. Matrices: `A ↦ A C⁻¹`.
/// Forms: `(g·f)(w) = f(g⁻¹w)`. The 5⊕3 case: `(A, v) ↦ (gAg⁻¹, gv)`.
/// SO(3) elements are rejected on models where `−1 ∈ SU(2)` acts nontrivially.
pub fn act(g: &GroupElement, p: &RepPoint) -> Result<RepPoint> {
    let mismatch = || Error::TypeMismatch { element: g.kind(), case: p.case().name() };
    Ok(match p {
        RepPoint::QuatPair { z1, z2 } => {
            let GroupElement::Su2(h) = g else { return Err(mismatch()) };
            let hi = h.inverse().quaternion();
            RepPoint::QuatPair { z1: *z1 * hi, z2: *z2 * hi }
        }
        RepPoint::QuatVec { z, z0 } => {
            let GroupElement::Su2(h) = g else { return Err(mismatch()) };
            let (hq, hi) = (h.quaternion(), h.inverse().quaternion());
            let w0 = hq * *z0 * hi;
            RepPoint::QuatVec { z: *z * hi, z0: Quaternion::new(0.0, w0.x, w0.y, w0.z) }
        }
        RepPoint::Mat3(a) => RepPoint::Mat3(a * g.rotation().matrix().transpose()),
        RepPoint::PolyC(f) => {
            let GroupElement::Su2(h) = g else { return Err(mismatch()) };
            RepPoint::PolyC(f.substitute(h.inverse().su2_matrix()))
        }
        RepPoint::PolyR(f) => RepPoint::PolyR(f.substitute(g.quaternion().inverse().su2_matrix())),
        RepPoint::FiveThree { a, v } => {
            let r = g.rotation();
            RepPoint::FiveThree { a: a.conjugate_by(&r), v: r.apply(v) }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const CASES: [RepCase; 8] = [
        RepCase::QuatPair,
        RepCase::QuatVec,
        RepCase::Mat3,
        RepCase::PolyC(4),
        RepCase::PolyC(2),
        RepCase::PolyR(7),
        RepCase::PolyR(9),
        RepCase::FiveThree,
    ];

    #[test]
    fn identity_acts_trivially() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for case in CASES {
            let p = case.random_point(&mut rng);
            let q = act(&GroupElement::identity(), &p).unwrap();
            assert!(p.distance(&q).unwrap() < 1e-14, "{case:?}");
        }
    }

    #[test]
    fn quat_vec_example() {
        let p = RepPoint::quat_vec(Quaternion::ONE, Quaternion::I).unwrap();
        let h = UnitQuaternion::new(Quaternion::K).unwrap();
        let got = act(&h.into(), &p).unwrap();
        let want = RepPoint::quat_vec(-Quaternion::K, -Quaternion::I).unwrap();
        assert!(got.distance(&want).unwrap() < 1e-15);
    }

    #[test]
    fn torus_on_x_cubed() {
        let p = RepPoint::poly_c(vec![Complex64::new(1.0, 0.0), 0.0.into(), 0.0.into(), 0.0.into()]);
        let lambda = Complex64::from_polar(1.0, 0.4);
        let got = act(&UnitQuaternion::torus(0.4).into(), &p).unwrap();
        let RepPoint::PolyC(f) = got else { panic!() };
        // the root (1,0) moves to (λ,0), whose factor is λ̄x
        assert!((f.coeffs[0] - lambda.conj().powi(3)).norm() < 1e-14);
        assert!(f.coeffs[1..].iter().all(|c| c.norm() < 1e-14));
    }

    #[test]
    fn action_is_isometric_and_composes() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for i in 0..10_000 {
            let case = CASES[i % CASES.len()];
            let p = case.random_point(&mut rng);
            let g1: GroupElement = UnitQuaternion::haar(&mut rng).into();
            let g2: GroupElement = UnitQuaternion::haar(&mut rng).into();
            let gp = act(&g1, &p).unwrap();
            assert!((gp.norm() - p.norm()).abs() <= 1e-10 * (1.0 + p.norm()), "{case:?}");
            let lhs = act(&g1, &act(&g2, &p).unwrap()).unwrap();
            let prod = GroupElement::Su2(g1.quaternion() * g2.quaternion());
            let rhs = act(&prod, &p).unwrap();
            assert!(lhs.distance(&rhs).unwrap() <= 1e-9 * (1.0 + p.norm()), "{case:?}");
            if let RepPoint::PolyR(f) = &gp {
                assert!(real_form::reality_defect(f) <= 1e-10 * (1.0 + p.norm()));
            }
        }
    }

    #[test]
    fn rotations_rejected_on_spinor_models() {
        let g = GroupElement::So3(Rotation3::identity());
        for case in [RepCase::QuatPair, RepCase::QuatVec, RepCase::PolyC(3)] {
            let p = case.random_point(&mut ChaCha8Rng::seed_from_u64(0));
            assert!(matches!(act(&g, &p), Err(Error::TypeMismatch { .. })));
        }
        let p = RepCase::PolyR(5).random_point(&mut ChaCha8Rng::seed_from_u64(0));
        assert!(act(&g, &p).is_ok());
    }

    #[test]
    fn coords_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for case in CASES {
            let p = case.random_point(&mut rng);
            let back = RepPoint::from_coords(case, &p.coords()).unwrap();
            assert_eq!(p.coords().len(), case.real_dim());
            assert!(p.distance(&back).unwrap() < 1e-13);
        }
    }

    #[test]
    fn infinitesimal_matches_finite_difference() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let h = 1e-6;
        for case in CASES {
            let p = case.random_point(&mut rng);
            for axis in 0..3 {
                let mut xi = [0.0; 3];
                xi[axis] = 1.0;
                let plus = act(&UnitQuaternion::exp(xi.map(|c| c * h)).into(), &p).unwrap();
                let minus = act(&UnitQuaternion::exp(xi.map(|c| -c * h)).into(), &p).unwrap();
                let fd: Vec<f64> =
                    plus.coords().iter().zip(minus.coords()).map(|(a, b)| (a - b) / (2.0 * h)).collect();
                let exact = p.infinitesimal(xi).coords();
                let err = fd.iter().zip(&exact).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
                assert!(err < 1e-6 * (1.0 + p.norm()), "{case:?} axis {axis}: {err}");
            }
        }
    }
}
