//! The slice-motion invariant `ω(g) = rk(E − g) − rk(E − Ad g)`.

use nalgebra::{DMatrix, Matrix3};

use super::point::{act, GroupElement, RepCase, RepPoint};
use super::spec::RepSpec;

const RANK_TOL: f64 = 1e-8;

/// Model of the irreducible of real dimension `n`.
fn irreducible_case(n: usize) -> RepCase {
    if n % 4 == 0 {
        RepCase::PolyC(n / 2)
    } else {
        RepCase::PolyR(n)
    }
}

/// Matrix of `g` in orthonormal coordinates of the nontrivial summands.
///
/// Rotations are lifted to SU(2) first; on summands of dimension `4m` the
/// result then depends on the lift.
pub fn action_matrix(g: &GroupElement, spec: &RepSpec) -> DMatrix<f64> {
    let q = GroupElement::Su2(g.quaternion());
    let n = spec.nontrivial_dim();
    let mut out = DMatrix::zeros(n, n);
    let mut offset = 0;
    for &d in spec.dims() {
        let case = irreducible_case(d);
        for j in 0..d {
            let mut e = vec![0.0; d];
            e[j] = 1.0;
            let p = RepPoint::from_coords(case, &e).expect("basis vector");
            let col = act(&q, &p).expect("SU(2) acts on every model").coords();
            for (i, v) in col.into_iter().enumerate() {
                out[(offset + i, offset + j)] = v;
            }
        }
        offset += d;
    }
    out
}

pub fn rank(m: &DMatrix<f64>, tol: f64) -> usize {
    if m.is_empty() {
        return 0;
    }
    m.clone().svd(false, false).singular_values.iter().filter(|s| **s > tol).count()
}

pub fn omega(g: &GroupElement, spec: &RepSpec) -> usize {
    let a = action_matrix(g, spec);
    let e = DMatrix::identity(a.nrows(), a.ncols());
    let r = g.rotation();
    let ad = DMatrix::from_iterator(3, 3, (Matrix3::identity() - r.matrix()).iter().copied());
    rank(&(e - a), RANK_TOL) - rank(&ad, RANK_TOL)
}
