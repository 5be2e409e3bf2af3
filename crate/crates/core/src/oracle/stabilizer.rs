//! Stabilisers: the Lie algebra dimension by rank, finite parts by search.

use nalgebra::DMatrix;
use rand::Rng;

use super::search::{refine, OracleBudget};
use crate::algebra::UnitQuaternion;
use crate::error::{Error, Result};
use crate::reps::{rank, GroupElement, RepPoint};

/// Relative singular-value threshold.
pub const STAB_TOL: f64 = 1e-7;

/// `3 − rank [ξ₁p | ξ₂p | ξ₃p]`.
pub fn stabilizer_dim(p: &RepPoint) -> Result<usize> {
    let n = p.norm();
    if n < 1e-300 {
        return Err(Error::ZeroVector);
    }
    let columns: Vec<Vec<f64>> = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
        .iter()
        .map(|xi| p.infinitesimal(*xi).coords())
        .collect();
    let m = DMatrix::from_fn(columns[0].len(), 3, |i, j| columns[j][i] / n);
    Ok(3 - rank(&m, STAB_TOL))
}

/// Group elements fixing `p` within `tol_match`, pairwise distinct up to the
/// sign of the quaternion.
pub fn stabilizer_probe<R: Rng + ?Sized>(p: &RepPoint, budget: &OracleBudget, rng: &mut R) -> Result<Vec<GroupElement>> {
    budget.validate()?;
    if p.norm() < 1e-300 {
        return Err(Error::ZeroVector);
    }
    let target = p.coords();
    let mut found: Vec<UnitQuaternion> = vec![UnitQuaternion::IDENTITY];
    let starts = budget.coarse_samples.max(budget.restarts);
    for _ in 0..starts {
        let g0 = UnitQuaternion::haar(rng);
        let (g, v) = refine(p, &target, g0, budget.refine_iters, budget.tol_match * 1e-4);
        if v > budget.tol_match {
            continue;
        }
        let fresh = found.iter().all(|h| h.chordal_distance(g) > 1e-3 && h.chordal_distance(-g) > 1e-3);
        if fresh {
            found.push(g);
        }
    }
    Ok(found.into_iter().map(GroupElement::Su2).collect())
}
