//! The named verification suites, one or more per checked property, and the
//! registry behind `verify all`.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::time::Instant;

use nalgebra::Vector3;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use super::search::{orbit_distance, OracleBudget};
use super::stabilizer::stabilizer_dim;
use super::suite::{
    gaussian, invariance_suite, relative_deviation, report_from, run_samples, separation_suite, Outcome, SuiteSpec,
    VerifyReport,
};
use crate::algebra::{from_spectrum, eig_sym3, sample_loop, winding_number, BinaryForm, Quaternion, Rotation3, Sym3, UnitQuaternion};
use crate::classify::{table1_enumerate, theorem_gate, KnownResult};
use crate::error::{Error, Result};
use crate::geometry::{
    boundary_product_m7, delta, f_predicate_7, gram_map, gram_matrix, gram_section, in_d, in_m7, m7_margin, m7_point,
    GramPoint,
};
use crate::invariants::{
    chart_53_point, inv_8, invariant, section_333, section_43, section_44, solve_unique_t, theta_values, QuotientCoord, C2,
};
use crate::reps::{act, lemma31_witnesses, real_form, GroupElement, RepCase, RepPoint, RepSpec};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BatteryConfig {
    pub seed: u64,
    /// Overrides the sample count of every sampled suite.
    pub samples: Option<usize>,
    pub budget: OracleBudget,
}

impl Default for BatteryConfig {
    fn default() -> Self {
        Self { seed: 1, samples: None, budget: OracleBudget::default() }
    }
}

impl BatteryConfig {
    fn n(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }

    /// Distinct seeds per suite so that suites do not share random streams.
    fn seed_for(&self, name: &str) -> u64 {
        name.bytes().fold(self.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15), |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
    }

    fn spec<'a>(&self, name: &'a str, criterion: u8, default: usize, tolerance: f64) -> SuiteSpec<'a> {
        SuiteSpec { name, criterion: Some(criterion), samples: self.n(default), seed: self.seed_for(name), tolerance, allowed_failures: 0 }
    }
}

pub struct Suite {
    pub name: &'static str,
    pub criterion: u8,
    pub run: fn(&BatteryConfig) -> Vec<VerifyReport>,
}

pub fn registry() -> Vec<Suite> {
    vec![
        Suite { name: "table1", criterion: 1, run: table1 },
        Suite { name: "gates", criterion: 2, run: gates },
        Suite { name: "inv44", criterion: 3, run: |c| vec![invariance(c, "inv44", RepCase::QuatPair, &components)] },
        Suite { name: "inv43", criterion: 3, run: |c| vec![invariance(c, "inv43", RepCase::QuatVec, &components)] },
        Suite { name: "inv333", criterion: 3, run: |c| vec![invariance(c, "inv333", RepCase::Mat3, &components)] },
        Suite { name: "m7", criterion: 3, run: |c| vec![invariance(c, "m7", RepCase::PolyR(7), &m7_components)] },
        Suite { name: "inv8base", criterion: 3, run: |c| vec![invariance(c, "inv8base", RepCase::PolyC(4), &inv8_base)] },
        Suite { name: "chart53", criterion: 3, run: |c| vec![invariance(c, "chart53", RepCase::FiveThree, &components)] },
        Suite { name: "sections", criterion: 4, run: sections },
        Suite { name: "unique_t", criterion: 4, run: |c| vec![unique_t(c)] },
        Suite { name: "sep44", criterion: 5, run: |c| separation(c, "sep44", RepCase::QuatPair) },
        Suite { name: "sep43", criterion: 5, run: |c| separation(c, "sep43", RepCase::QuatVec) },
        Suite { name: "sep333", criterion: 5, run: |c| separation(c, "sep333", RepCase::Mat3) },
        Suite { name: "theta", criterion: 6, run: theta },
        Suite { name: "winding", criterion: 7, run: |c| vec![winding(c)] },
        Suite { name: "lemma31", criterion: 8, run: |c| vec![lemma31(c)] },
        Suite { name: "region", criterion: 9, run: region },
        Suite { name: "fset", criterion: 10, run: fset },
        Suite { name: "chart53_e2e", criterion: 11, run: chart53_end_to_end },
    ]
}

pub fn suite_names() -> Vec<&'static str> {
    registry().iter().map(|s| s.name).collect()
}

/// Runs one named suite, or every suite for `"all"`.
pub fn run_suite(name: &str, cfg: &BatteryConfig) -> Result<Vec<VerifyReport>> {
    let reg = registry();
    if name == "all" {
        return Ok(reg.iter().flat_map(|s| (s.run)(cfg)).collect());
    }
    let s = reg.iter().find(|s| s.name == name).ok_or_else(|| Error::UnknownCase(name.to_string()))?;
    Ok((s.run)(cfg))
}

fn gauss(rng: &mut ChaCha8Rng) -> f64 {
    StandardNormal.sample(rng)
}

fn components(p: &RepPoint) -> Result<Vec<f64>> {
    invariant(p).map(|c| c.components())
}

fn m7_components(p: &RepPoint) -> Result<Vec<f64>> {
    m7_point(p).map(|x| x.to_array().to_vec())
}

fn inv8_base(p: &RepPoint) -> Result<Vec<f64>> {
    match inv_8(p)? {
        QuotientCoord::ThetaTriple { base, .. } => Ok(vec![base.x.x1, base.x.x2, base.x.x3, base.sheet as f64]),
        _ => unreachable!("inv_8 returns a theta triple"),
    }
}

fn invariance(cfg: &BatteryConfig, name: &'static str, case: RepCase, map: &(dyn Fn(&RepPoint) -> Result<Vec<f64>> + Sync)) -> VerifyReport {
    invariance_suite(&cfg.spec(name, 3, 10_000, 1e-8), &gaussian(case), map)
}

fn exact(cfg: &BatteryConfig, name: &str, criterion: u8, checks: &[bool], start: Instant) -> VerifyReport {
    let outcomes: Vec<Outcome> = checks.iter().map(|ok| Outcome::check(*ok)).collect();
    let spec = SuiteSpec { name, criterion: Some(criterion), samples: checks.len(), seed: cfg.seed, tolerance: 0.0, allowed_failures: 0 };
    report_from(&spec, &outcomes, start)
}

fn table1(cfg: &BatteryConfig) -> Vec<VerifyReport> {
    let start = Instant::now();
    let expected: BTreeSet<Vec<usize>> =
        [vec![4, 4], vec![4, 3], vec![3, 3, 3], vec![5, 4], vec![7], vec![8], vec![9], vec![5, 3], vec![5, 5]]
            .into_iter()
            .collect();
    let got = table1_enumerate(9);
    let got_set: BTreeSet<Vec<usize>> = got.iter().cloned().collect();
    let mut checks: Vec<bool> = expected.iter().map(|e| got_set.contains(e)).collect();
    checks.push(got.len() == expected.len() && got_set == expected);
    checks.push(table1_enumerate(30) == got);
    vec![exact(cfg, "table1", 1, &checks, start)]
}

fn gates(cfg: &BatteryConfig) -> Vec<VerifyReport> {
    let start = Instant::now();
    let mut checks = Vec::new();
    for dims in table1_enumerate(9) {
        let v = theorem_gate(&RepSpec::from_dims(&dims).expect("valid"), true);
        checks.push((v.q == 3 || v.q == 4) && v.manifold_possible && v.table1_member);
    }
    for d in [3, 4] {
        checks.push(!theorem_gate(&RepSpec::from_dims(&[d]).expect("valid"), true).manifold_possible);
    }
    let v = theorem_gate(&RepSpec::from_dims(&[5, 4]).expect("valid"), true);
    checks.push(v.known_result == KnownResult::NotSmooth);
    vec![exact(cfg, "gates", 2, &checks, start)]
}

fn random_quaternion(rng: &mut ChaCha8Rng) -> Quaternion {
    Quaternion::new(gauss(rng), gauss(rng), gauss(rng), gauss(rng))
}

fn random_traceless(rng: &mut ChaCha8Rng) -> Sym3 {
    Sym3::new(gauss(rng), gauss(rng), gauss(rng), gauss(rng), gauss(rng), gauss(rng)).traceless_part()
}

fn section_point(case: RepCase, rng: &mut ChaCha8Rng) -> (QuotientCoord, RepPoint) {
    match case {
        RepCase::QuatPair => {
            let (d, lambda) = (gauss(rng), random_quaternion(rng));
            let (z1, z2) = section_44(d, lambda);
            (QuotientCoord::RH { d, lambda }, RepPoint::quat_pair(z1, z2))
        }
        RepCase::QuatVec => {
            let (d, lambda0) = (gauss(rng), Quaternion::imaginary([gauss(rng), gauss(rng), gauss(rng)]));
            let (z, z0) = section_43(d, lambda0);
            (QuotientCoord::RH0 { d, lambda0 }, RepPoint::quat_vec(z, z0).expect("imaginary"))
        }
        RepCase::Mat3 => {
            let (s, det) = (random_traceless(rng), gauss(rng));
            (QuotientCoord::SymDet { s, det }, RepPoint::Mat3(section_333(&s, det)))
        }
        _ => unreachable!("sections exist for the quaternionic and matrix cases"),
    }
}

fn sections(cfg: &BatteryConfig) -> Vec<VerifyReport> {
    [("section44", RepCase::QuatPair), ("section43", RepCase::QuatVec), ("section333", RepCase::Mat3)]
        .into_iter()
        .map(|(name, case)| {
            run_samples(&cfg.spec(name, 4, 10_000, 1e-9), |rng, _| {
                let (c, p) = section_point(case, rng);
                match invariant(&p) {
                    Ok(back) => Outcome::within(relative_deviation(&c.components(), &back.components()), 1e-9),
                    Err(_) => Outcome::failure(),
                }
            })
        })
        .collect()
}

/// Residual check plus a dense scan confirming a single crossing.
fn unique_t(cfg: &BatteryConfig) -> VerifyReport {
    const SCAN: usize = 1_000_000;
    let spec = SuiteSpec { allowed_failures: 0, ..cfg.spec("unique_t", 4, 100, 1e-12) };
    run_samples(&spec, |rng, i| {
        let k = 1 + i % 6;
        let d: Vec<f64> = (0..k).map(|_| rng.random_range(-2.0..2.0)).collect();
        let target = if i % 10 == 0 { 0.0 } else { rng.random_range(0.0..5.0) };
        let Ok(t) = solve_unique_t(&d, target) else { return Outcome::failure() };
        let prod = |x: f64| d.iter().map(|di| x + di).product::<f64>();
        let residual = (prod(t) - target).abs() / target.max(1.0);
        let lo = -d.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = lo + 2.0 * (t - lo) + 1.0;
        let step = (hi - lo) / SCAN as f64;
        let mut crossings = Vec::new();
        let mut prev = prod(lo) - target;
        for j in 1..=SCAN {
            let x = lo + j as f64 * step;
            let cur = prod(x) - target;
            if (prev < 0.0 && cur >= 0.0) || (prev > 0.0 && cur <= 0.0) {
                crossings.push(x);
            }
            prev = cur;
        }
        let scan_ok = if target == 0.0 {
            t == lo
        } else {
            crossings.len() == 1 && (crossings[0] - t).abs() <= 2.0 * step
        };
        Outcome { deviation: residual, failed: !(residual <= 1e-12) || !scan_ok }
    })
}

fn separation(cfg: &BatteryConfig, name: &'static str, case: RepCase) -> Vec<VerifyReport> {
    let spec = cfg.spec(name, 5, 500, cfg.budget.tol_match);
    let section = move |rng: &mut ChaCha8Rng| section_point(case, rng).1;
    separation_suite(&spec, &section, &gaussian(case), &components, &cfg.budget, 1e-3).into()
}

fn unit_c2(rng: &mut ChaCha8Rng) -> C2 {
    let v = [Complex64::new(gauss(rng), gauss(rng)), Complex64::new(gauss(rng), gauss(rng))];
    let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
    [v[0] / n, v[1] / n]
}

fn phase(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::from_polar(1.0, rng.random_range(0.0..2.0 * PI))
}

fn theta(cfg: &BatteryConfig) -> Vec<VerifyReport> {
    let law = run_samples(&cfg.spec("theta/law", 6, 10_000, 1e-9), |rng, _| {
        let v = [unit_c2(rng), unit_c2(rng), unit_c2(rng)];
        let l = [phase(rng), phase(rng), phase(rng)];
        let w: Vec<C2> = v.iter().zip(&l).map(|(x, li)| [x[0] * li, x[1] * li]).collect();
        let (a, b) = (theta_values(v[0], v[1], v[2]), theta_values(w[0], w[1], w[2]));
        let lam = l[0] * l[1] * l[2];
        let dev = (b.theta1 - lam.powi(2) * a.theta1).norm().max((b.theta2 - lam.powi(4) * a.theta2).norm());
        Outcome::within(dev, 1e-9)
    });
    let h = run_samples(&cfg.spec("theta/h_invariance", 6, 10_000, 1e-9), |rng, _| {
        let v = [unit_c2(rng), unit_c2(rng), unit_c2(rng)];
        let key = |x: &[C2; 3]| {
            let t = theta_values(x[0], x[1], x[2]);
            (t.theta1.norm(), t.theta2.norm(), t.theta1 * t.theta1 * t.theta2.conj())
        };
        let base = key(&v);
        let perm = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]][rng.random_range(0..6)];
        let g = UnitQuaternion::haar(rng).su2_matrix();
        let (l1, l2) = (phase(rng), phase(rng));
        let l = [l1, l2, (l1 * l2).conj()];
        let w = [0, 1, 2].map(|i| {
            let x = v[perm[i]];
            let gx = [g[0][0] * x[0] + g[0][1] * x[1], g[1][0] * x[0] + g[1][1] * x[1]];
            [gx[0] * l[i], gx[1] * l[i]]
        });
        let other = key(&w);
        let dev = (base.0 - other.0).abs().max((base.1 - other.1).abs()).max((base.2 - other.2).norm());
        Outcome::within(dev, 1e-9)
    });
    let closed = run_samples(&cfg.spec("theta/closed_forms", 6, 10_000, 1e-10), |rng, _| {
        let e1 = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
        let (v1, v2) = (unit_c2(rng), unit_c2(rng));
        let t = theta_values(v1, v2, e1);
        let first = (t.theta1_prime - (v1[0] * v2[1] + v2[0] * v1[1])).norm();
        // a₁b₂ + a₂b₁ = 0 forces v₂ ∝ (a₁, −b₁) up to the free first entry
        let a2 = Complex64::new(gauss(rng), gauss(rng));
        let u = [a2, -a2 * v1[1] / v1[0]];
        let n = (u[0].norm_sqr() + u[1].norm_sqr()).sqrt();
        let u = [u[0] / n, u[1] / n];
        let s = theta_values(v1, u, e1);
        let want = -4.0 * (v1[0] * u[0]) * (v1[1] * u[1]).powi(3);
        let second = (s.theta2 - want).norm() / want.norm().max(1.0);
        Outcome::within(first.max(second).max(s.theta1_prime.norm()), 1e-10)
    });
    vec![law, h, closed]
}

/// The loop `t ↦ (v₁, v₂, v₃(β₀, t))` with `v₁,₂ = (a, ±b)`.
pub fn winding_loop(a: f64, b: f64, beta0: f64, t: f64) -> [C2; 3] {
    let c = [Complex64::new(a, 0.0), Complex64::new(b, 0.0)];
    let d = [Complex64::new(a, 0.0), Complex64::new(-b, 0.0)];
    let v3 = [Complex64::new(beta0.cos(), 0.0), Complex64::from_polar(beta0.sin(), 2.0 * PI * t)];
    [c, d, v3]
}

/// The largest `β₀` on a halving ladder keeping `θ₃` away from zero along the loop.
pub fn winding_beta0(a: f64, b: f64, n: usize) -> Option<f64> {
    let at_zero = {
        let [v1, v2, v3] = winding_loop(a, b, 0.0, 0.0);
        theta_values(v1, v2, v3).theta3.norm()
    };
    let mut beta = 0.5;
    for _ in 0..20 {
        let min = (0..n)
            .map(|k| {
                let [v1, v2, v3] = winding_loop(a, b, beta, k as f64 / n as f64);
                theta_values(v1, v2, v3).theta3.norm()
            })
            .fold(f64::INFINITY, f64::min);
        if min > 0.5 * at_zero {
            return Some(beta);
        }
        beta *= 0.5;
    }
    None
}

fn winding(cfg: &BatteryConfig) -> VerifyReport {
    let start = Instant::now();
    const N: usize = 2000;
    let (a, b) = (0.8, 0.6);
    let Some(beta0) = winding_beta0(a, b, N) else { return exact(cfg, "winding", 7, &[false], start) };
    let values = |t: f64| {
        let [v1, v2, v3] = winding_loop(a, b, beta0, t);
        theta_values(v1, v2, v3)
    };
    let first = winding_number(&sample_loop(N, |t| values(t).theta1_prime));
    let alpha = winding_number(&sample_loop(N, |t| {
        let th = values(t);
        th.theta1 * th.theta1 * th.theta2.conj()
    }));
    let third = winding_number(&sample_loop(N, |t| values(t).theta3));
    exact(cfg, "winding", 7, &[first == Ok(1), alpha == Ok(2), third == Ok(0)], start)
}

fn lemma31(cfg: &BatteryConfig) -> VerifyReport {
    let start = Instant::now();
    let mut outcomes = Vec::new();
    for m in 2..=4 {
        let Ok(w) = lemma31_witnesses(m) else {
            outcomes.push(Outcome::failure());
            continue;
        };
        outcomes.push(Outcome::check(stabilizer_dim(&w.torus_vector) == Ok(1)));
        outcomes.push(Outcome::check(stabilizer_dim(&w.finite_vector) == Ok(0)));
        let moved = act(&GroupElement::Su2(w.finite_element), &w.finite_vector).and_then(|q| q.distance(&w.finite_vector));
        outcomes.push(match moved {
            Ok(d) => Outcome::within(d, 1e-10),
            Err(_) => Outcome::failure(),
        });
    }
    let spec = SuiteSpec { name: "lemma31", criterion: Some(8), samples: outcomes.len(), seed: cfg.seed, tolerance: 1e-10, allowed_failures: 0 };
    report_from(&spec, &outcomes, start)
}

fn cube_point(rng: &mut ChaCha8Rng) -> GramPoint {
    GramPoint::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

fn region(cfg: &BatteryConfig) -> Vec<VerifyReport> {
    let det = run_samples(&cfg.spec("region/delta", 9, 10_000, 1e-12), |rng, _| {
        let x = cube_point(rng);
        Outcome::within((delta(x) - gram_matrix(x).determinant()).abs(), 1e-12)
    });
    let section = run_samples(&cfg.spec("region/gram_section", 9, 1000, 1e-8), |rng, _| {
        let x = loop {
            let x = cube_point(rng);
            if in_d(x, 0.0) {
                break x;
            }
        };
        match gram_section(x) {
            Ok(v) => Outcome::within(gram_map(&v).max_abs_diff(x), 1e-8),
            Err(_) => Outcome::failure(),
        }
    });
    let face = run_samples(&cfg.spec("region/face", 9, 1000, 1e-9), |rng, _| {
        let i = rng.random_range(0..3);
        let sign = if rng.random::<bool>() { 1.0 } else { -1.0 };
        let (u, w) = (rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        let mut x = [0.0; 3];
        x[i] = sign;
        x[(i + 1) % 3] = u;
        x[(i + 2) % 3] = w;
        let p = GramPoint::from_array(x);
        // symbolic identity on the face
        let ident = (delta(p) + (u - sign * w).powi(2)).abs();
        // membership forces the two free coordinates to agree up to the sign
        let forced = !in_m7(p, 1e-12) || (u - sign * w).abs() <= 1e-6;
        // and the agreeing points of the chamber face are members
        let on_face = GramPoint::new(1.0, u.abs(), u.abs());
        let member = in_m7(on_face, 1e-12);
        Outcome { deviation: ident, failed: !(ident <= 1e-9) || !forced || !member }
    });
    vec![det, section, face]
}

fn random_real7_in(positions: &[usize], rng: &mut ChaCha8Rng) -> RepPoint {
    let mut f = BinaryForm::zero(6);
    for &i in positions {
        f.coeffs[i] = Complex64::new(gauss(rng), gauss(rng));
    }
    RepPoint::PolyR(real_form::project(&f))
}

fn fset(cfg: &BatteryConfig) -> Vec<VerifyReport> {
    let budget = cfg.budget;
    let member = |name: &'static str, positions: &'static [usize]| {
        run_samples(&cfg.spec(name, 10, 100, budget.tol_match), move |rng, _| {
            let f = random_real7_in(positions, rng);
            let g = GroupElement::Su2(UnitQuaternion::haar(rng));
            let Ok(f) = act(&g, &f) else { return Outcome::failure() };
            let Ok(x) = m7_point(&f) else { return Outcome::failure() };
            let on_boundary = boundary_product_m7(x).abs() <= 1e-6 && f_predicate_7(&f) == Ok(true);
            match orbit_distance(&f, &f.scale(-1.0), &budget, rng) {
                Ok((d, _)) => Outcome { deviation: d, failed: !on_boundary || d > budget.tol_match },
                Err(_) => Outcome::failure(),
            }
        })
    };
    let w1 = member("fset/w1", &[0, 2, 4, 6]);
    let w2 = member("fset/w2", &[1, 5]);
    let spec = SuiteSpec { allowed_failures: 5, ..cfg.spec("fset/generic", 10, 100, 1e-4) };
    let generic = run_samples(&spec, |rng, _| {
        let coords: Vec<f64> = (0..7).map(|_| gauss(rng)).collect();
        let f = RepPoint::PolyR(real_form::from_coords(&coords));
        match m7_point(&f) {
            Ok(x) => Outcome { deviation: 0.0, failed: !(m7_margin(x) >= 1e-4) },
            Err(_) => Outcome::failure(),
        }
    });
    vec![w1, w2, generic]
}

/// A traceless matrix whose top two or bottom two eigenvalues are `gap` apart.
fn near_degenerate(rng: &mut ChaCha8Rng, gap: f64) -> Sym3 {
    let (l, frame) = eig_sym3(&random_traceless(rng));
    let top = l[0].abs().max(0.5);
    let spectrum = if rng.random::<bool>() { [top, top - gap, -2.0 * top + gap] } else { [2.0 * top - gap, -top + gap, -top] };
    from_spectrum(spectrum, &frame)
}

fn five_three_point(rng: &mut ChaCha8Rng, i: usize) -> RepPoint {
    let a = match i % 4 {
        0 => random_traceless(rng),
        k => near_degenerate(rng, [1e-1, 1e-2, 1e-3][k - 1]),
    };
    let v = Vector3::new(gauss(rng), gauss(rng), gauss(rng));
    RepPoint::five_three(a, v).expect("traceless")
}

fn chart53_end_to_end(cfg: &BatteryConfig) -> Vec<VerifyReport> {
    let invariance = run_samples(&cfg.spec("chart53_e2e/invariance", 11, 1000, 1e-7), |rng, i| {
        let p = five_three_point(rng, i);
        let g = GroupElement::So3(Rotation3::haar(rng));
        let Ok(q) = act(&g, &p) else { return Outcome::failure() };
        match (chart_53_point(&p), chart_53_point(&q)) {
            (Ok(a), Ok(b)) => Outcome::within(relative_deviation(&a.components(), &b.components()), 1e-7),
            _ => Outcome::failure(),
        }
    });
    let start = Instant::now();
    let spec = cfg.spec("chart53_e2e/separation", 11, 200, 1e-6);
    let wanted = spec.samples;
    let budget = cfg.budget;
    // independent pairs and pairs (A, v), (A, −v) alternate; undistinguished pairs are skipped
    let candidates: Vec<Option<Outcome>> = (0..3 * wanted)
        .into_par_iter()
        .map(|i| {
            let mut rng = super::suite::sample_rng(spec.seed, i);
            let p = five_three_point(&mut rng, i);
            let q = if i % 2 == 0 {
                five_three_point(&mut rng, i + 1)
            } else {
                let RepPoint::FiveThree { a, v } = &p else { unreachable!() };
                RepPoint::five_three(*a, -v).expect("traceless")
            };
            let Ok((d, _)) = orbit_distance(&p, &q, &budget, &mut rng) else { return Some(Outcome::failure()) };
            if d < 1e-2 {
                return None;
            }
            Some(match (chart_53_point(&p), chart_53_point(&q)) {
                (Ok(a), Ok(b)) => {
                    let gap = a.distance(&b).unwrap_or(0.0);
                    Outcome { deviation: gap, failed: !(gap >= 1e-6) }
                }
                _ => Outcome::failure(),
            })
        })
        .collect();
    let mut outcomes: Vec<Outcome> = candidates.into_iter().flatten().take(wanted).collect();
    if outcomes.len() < wanted {
        outcomes.push(Outcome::failure());
    }
    let mut report = report_from(&spec, &outcomes, start);
    // the deviation of interest is the smallest gap
    report.max_deviation = outcomes.iter().map(|o| o.deviation).fold(f64::INFINITY, f64::min);
    vec![invariance, report]
}

