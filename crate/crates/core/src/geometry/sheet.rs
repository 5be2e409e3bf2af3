//! Points of `M̂ = (M × {±1}) / ∂M`, the quotient of ordered triples of unit
//! vectors by rotations.

use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use super::chambers::on_boundary_m8;
use super::gram::{gram_map, GramPoint};

/// Gluing tolerance on the boundary product.
pub const SHEET_TOL: f64 = 1e-7;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MhatPoint {
    pub x: GramPoint,
    pub sheet: i8,
}

impl MhatPoint {
    pub fn max_abs_diff(&self, o: &MhatPoint) -> f64 {
        self.x.max_abs_diff(o.x).max((self.sheet - o.sheet).abs() as f64)
    }
}

/// Sorts the Gram point descending, permutes the vectors along with it and
/// records the orientation of the permuted frame.
pub fn sheet_label(v: &[Vector3<f64>; 3]) -> MhatPoint {
    let g = gram_map(v).to_array();
    let mut perm = [0usize, 1, 2];
    perm.sort_by(|&a, &b| g[b].total_cmp(&g[a]));
    let x = GramPoint::new(g[perm[0]], g[perm[1]], g[perm[2]]);
    if on_boundary_m8(x, SHEET_TOL) {
        return MhatPoint { x, sheet: 1 };
    }
    let m = Matrix3::from_columns(&[v[perm[0]], v[perm[1]], v[perm[2]]]);
    let sheet = if m.determinant() < 0.0 { -1 } else { 1 };
    MhatPoint { x, sheet }
}
