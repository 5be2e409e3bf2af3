//! The set `F = {f : −f ∈ G·f}` for the 7-dimensional real representation,
//! read off from the three root lines of `f`.

use nalgebra::Vector3;

use super::chambers::{on_boundary_m7, weyl_canonicalize_d3};
use super::gram::{gram_map, GramPoint};
use crate::error::{Error, Result};
use crate::reps::{roots_to_sphere, RepPoint};

/// Largest accepted `‖s + s′‖` between a root and its partner.
pub const ANTIPODAL_TOL: f64 = 1e-6;

/// Boundary tolerance used by [`f_predicate_7`].
pub const F_TOL: f64 = 1e-7;

fn check_degree(f: &RepPoint) -> Result<()> {
    match f {
        RepPoint::PolyR(g) if g.degree() == 6 => Ok(()),
        RepPoint::PolyR(g) => Err(Error::BadDegree(g.degree())),
        _ => Err(Error::TypeMismatch { element: "form", case: f.case().name() }),
    }
}

/// One representative of each antipodal pair of sphere roots.
pub fn root_lines(f: &RepPoint) -> Result<[Vector3<f64>; 3]> {
    check_degree(f)?;
    let mut roots = roots_to_sphere(f)?;
    let mut lines = Vec::with_capacity(3);
    while let Some(s) = roots.pop() {
        let (j, gap) = roots
            .iter()
            .enumerate()
            .map(|(j, t)| (j, (s + t).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .ok_or(Error::NotAntipodal(f64::INFINITY))?;
        if gap > ANTIPODAL_TOL {
            return Err(Error::NotAntipodal(gap));
        }
        let t = roots.swap_remove(j);
        let mid = (s - t) / 2.0;
        lines.push(mid / mid.norm());
    }
    Ok([lines[0], lines[1], lines[2]])
}

pub fn m7_point(f: &RepPoint) -> Result<GramPoint> {
    let lines = root_lines(f)?;
    Ok(GramPoint::from_array(weyl_canonicalize_d3(gram_map(&lines).to_array())))
}

pub fn f_predicate_7(f: &RepPoint) -> Result<bool> {
    Ok(on_boundary_m7(m7_point(f)?, F_TOL))
}
