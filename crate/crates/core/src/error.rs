use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("all coefficients of the polynomial vanish")]
    ZeroPolynomial,
    #[error("loop sample {index} has modulus {modulus:e}, too close to zero")]
    DegenerateLoop { index: usize, modulus: f64 },
    #[error("argument increment {increment:.4} rad at sample {index} is not below pi")]
    UndersampledLoop { index: usize, increment: f64 },
    #[error("group element of type {element} cannot act on a {case} point")]
    TypeMismatch {
        element: &'static str,
        case: &'static str,
    },
    #[error("points belong to different representation cases ({left} vs {right})")]
    CaseMismatch {
        left: &'static str,
        right: &'static str,
    },
    #[error("degree parameter {0} is too small")]
    BadDegree(usize),
    #[error("target value {0} is negative")]
    NegativeTarget(f64),
    #[error("quaternion has real part {0:e}, expected a purely imaginary one")]
    NotImaginary(f64),
    #[error("zero vector where a nonzero one is required")]
    ZeroVector,
    #[error("parameter {name} = {value} is out of range")]
    OutOfRange { name: &'static str, value: f64 },
    #[error("point is outside the Gram region D (min eigenvalue {0:e})")]
    NotInD(f64),
    #[error("root multiset is not antipodally symmetric (mismatch {0:e})")]
    NotAntipodal(f64),
    #[error("coefficients violate the reality condition (mismatch {0:e})")]
    NotReal(f64),
    #[error("unknown case or suite `{0}`")]
    UnknownCase(String),
    #[error("input has {0} nonzero vectors, more than the supported 20")]
    InputTooLarge(usize),
    #[error("dimension {0} is not a valid irreducible dimension (must be >= 3 and odd or divisible by 4)")]
    InvalidDimension(usize),
    #[error("weight vectors have inconsistent dimension")]
    DimensionMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
