//! Orbit-separating maps, their sections, and the θ-system.

pub mod chart53;
pub mod coords;
pub mod matrix;
pub mod quaternionic;
pub mod theta;
pub mod unique_t;

pub use chart53::{alpha, chart_53, chart_53_point};
pub use coords::QuotientCoord;
pub use matrix::{inv_333, section_333};
pub use quaternionic::{inv_43, inv_44, invariant_quaternionic, section_43, section_44};
pub use theta::{
    det2, hopf_phi0, inner, inv_8, normalize_r, pi_poly, r_norm, theta_values, unit_factorization, ThetaValues, C2,
};
pub use unique_t::solve_unique_t;

use crate::error::{Error, Result};
use crate::reps::RepPoint;

/// The orbit-separating map of whichever case `p` belongs to.
pub fn invariant(p: &RepPoint) -> Result<QuotientCoord> {
    match p {
        RepPoint::QuatPair { .. } | RepPoint::QuatVec { .. } => invariant_quaternionic(p),
        RepPoint::Mat3(a) => Ok(inv_333(a)),
        RepPoint::PolyC(f) if f.degree() == 3 => inv_8(p),
        RepPoint::FiveThree { .. } => chart_53_point(p),
        _ => Err(Error::UnknownCase(p.case().name().to_string())),
    }
}
