use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{Quaternion, Sym3};
use crate::geometry::MhatPoint;

/// A point of an orbit space, tagged by the representation it comes from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum QuotientCoord {
    /// `(|z₁|² − |z₂|², z₁ z̄₂)` for `ℍ²`.
    RH { d: f64, lambda: Quaternion },
    /// `(|z|² − |z₀|², z z₀ z̄)` for `ℍ ⊕ ℍ₀`; `lambda0` is imaginary.
    RH0 { d: f64, lambda0: Quaternion },
    /// Traceless part of `AAᵀ` and `det A` for 3×3 matrices.
    SymDet {
        #[serde(rename = "S")]
        s: Sym3,
        det: f64,
    },
    /// Degree-3 binary forms: the point of M̂ carried by the roots, the two
    /// complex θ-invariants of the normalised form, and its scale `r′`.
    ThetaTriple { base: MhatPoint, theta1: Complex64, theta2: Complex64, scale: f64 },
    /// The 6-component chart of the 5⊕3 quotient.
    Chart53 { y: [f64; 6] },
}

impl QuotientCoord {
    /// Flattened real components, in a fixed order per variant.
    pub fn components(&self) -> Vec<f64> {
        match self {
            QuotientCoord::RH { d, lambda } => [[*d].as_slice(), &lambda.to_array()].concat(),
            QuotientCoord::RH0 { d, lambda0 } => vec![*d, lambda0.x, lambda0.y, lambda0.z],
            QuotientCoord::SymDet { s, det } => [s.entries().as_slice(), &[*det]].concat(),
            QuotientCoord::ThetaTriple { base, theta1, theta2, scale } => {
                vec![base.x.x1, base.x.x2, base.x.x3, base.sheet as f64, theta1.re, theta1.im, theta2.re, theta2.im, *scale]
            }
            QuotientCoord::Chart53 { y } => y.to_vec(),
        }
    }

    /// Max-norm distance between two coordinates of the same variant.
    pub fn distance(&self, other: &QuotientCoord) -> Option<f64> {
        if std::mem::discriminant(self) != std::mem::discriminant(other) {
            return None;
        }
        Some(
            self.components()
                .iter()
                .zip(other.components())
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max),
        )
    }
}
