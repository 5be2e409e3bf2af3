//! Brute-force orbit matching over the group.

use rand::{Rng, SeedableRng};
use nalgebra::{Matrix3, Vector3};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{su2_to_so3, UnitQuaternion};
use crate::error::{Error, Result};
use crate::reps::{act, GroupElement, RepCase, RepPoint};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleBudget {
    /// Haar samples per restart.
    pub coarse_samples: usize,
    /// Pattern-search iterations per restart.
    pub refine_iters: usize,
    pub tol_match: f64,
    pub restarts: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self { coarse_samples: 32, refine_iters: 100, tol_match: 1e-5, restarts: 64 }
    }
}

impl OracleBudget {
    pub fn validate(&self) -> Result<()> {
        let positive = self.coarse_samples > 0 && self.refine_iters > 0 && self.restarts > 0 && self.tol_match > 0.0;
        if positive {
            Ok(())
        } else {
            Err(Error::OutOfRange { name: "budget", value: 0.0 })
        }
    }
}

/// Rotation-only cases report witnesses in SO(3).
fn wrap(case: RepCase, q: UnitQuaternion) -> GroupElement {
    match case {
        RepCase::Mat3 | RepCase::FiveThree => GroupElement::So3(su2_to_so3(q)),
        _ => GroupElement::Su2(q),
    }
}

fn residual(q: UnitQuaternion, p: &RepPoint, target: &[f64]) -> f64 {
    let gp = act(&GroupElement::Su2(q), p).expect("SU(2) acts on every model");
    gp.coords().iter().zip(target).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt()
}

/// Levenberg–Marquardt on `S³` for `r(g) = g·p − q`, with steps
/// `g ↦ exp(δ) g` and Jacobian columns `ξᵢ · (g·p)`. Only improving steps are
/// taken, so the residual never increases.
pub(crate) fn refine(p: &RepPoint, target: &[f64], start: UnitQuaternion, iters: usize, floor: f64) -> (UnitQuaternion, f64) {
    let eval = |g: UnitQuaternion| {
        let gp = act(&GroupElement::Su2(g), p).expect("SU(2) acts on every model");
        let r: Vec<f64> = gp.coords().iter().zip(target).map(|(a, b)| a - b).collect();
        let n = r.iter().map(|x| x * x).sum::<f64>().sqrt();
        (gp, r, n)
    };
    let (mut g, (mut gp, mut r, mut best)) = (start, eval(start));
    let mut mu: f64 = 1e-3;
    for _ in 0..iters {
        if best <= floor {
            break;
        }
        let cols: Vec<Vec<f64>> = (0..3)
            .map(|i| {
                let mut xi = [0.0; 3];
                xi[i] = 1.0;
                gp.infinitesimal(xi).coords()
            })
            .collect();
        let mut jtj = Matrix3::<f64>::zeros();
        let mut jtr = Vector3::<f64>::zeros();
        for a in 0..3 {
            jtr[a] = cols[a].iter().zip(&r).map(|(x, y)| x * y).sum();
            for b in 0..3 {
                jtj[(a, b)] = cols[a].iter().zip(&cols[b]).map(|(x, y)| x * y).sum();
            }
        }
        let scale = jtj.trace().max(1e-300);
        let mut improved = false;
        while mu < 1e8 {
            let m = jtj + Matrix3::identity() * (mu * scale);
            let Some(delta) = m.lu().solve(&(-jtr)) else { break };
            let cand = UnitQuaternion::exp([delta[0], delta[1], delta[2]]) * g;
            let (cgp, cr, cn) = eval(cand);
            if cn < best {
                (g, gp, r, best, improved) = (cand, cgp, cr, cn, true);
                mu = (mu * 0.3).max(1e-12);
                break;
            }
            mu *= 4.0;
        }
        if !improved {
            break;
        }
    }
    (g, best)
}

/// `min_g ‖g·p − q‖` by multi-start sampling and local refinement.
///
/// Each restart draws its own seed from `rng`, so adding restarts or refine
/// iterations never makes the reported distance larger. The identity is
/// always among the candidates and the returned distance is recomputed from
/// the witness.
pub fn orbit_distance<R: Rng + ?Sized>(
    p: &RepPoint,
    q: &RepPoint,
    budget: &OracleBudget,
    rng: &mut R,
) -> Result<(f64, GroupElement)> {
    if p.case() != q.case() {
        return Err(Error::TypeMismatch { element: p.case().name(), case: q.case().name() });
    }
    budget.validate()?;
    let target = q.coords();
    let f = |g: UnitQuaternion| residual(g, p, &target);
    let floor = budget.tol_match * 1e-4;
    let (mut best_g, mut best) = (UnitQuaternion::IDENTITY, f(UnitQuaternion::IDENTITY));
    let seeds: Vec<u64> = (0..budget.restarts).map(|_| rng.next_u64()).collect();
    for seed in seeds {
        if best <= floor {
            break;
        }
        let mut stream = ChaCha8Rng::seed_from_u64(seed);
        let (mut g0, mut v0) = (UnitQuaternion::IDENTITY, f64::INFINITY);
        for _ in 0..budget.coarse_samples {
            let g = UnitQuaternion::haar(&mut stream);
            let v = f(g);
            if v < v0 {
                (g0, v0) = (g, v);
            }
        }
        let (g, v) = refine(p, &target, g0, budget.refine_iters, floor);
        if v < best {
            (best_g, best) = (g, v);
        }
    }
    let witness = wrap(p.case(), best_g);
    let checked = act(&witness, p)?.distance(q)?;
    Ok((checked, witness))
}

pub fn same_orbit<R: Rng + ?Sized>(p: &RepPoint, q: &RepPoint, budget: &OracleBudget, rng: &mut R) -> Result<bool> {
    Ok(orbit_distance(p, q, budget, rng)?.0 <= budget.tol_match)
}
