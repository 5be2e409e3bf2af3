//! The Monte Carlo harness: seeded, parallel over samples, one report per run.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::search::{orbit_distance, OracleBudget};
use crate::algebra::UnitQuaternion;
use crate::error::Result;
use crate::reps::{act, GroupElement, RepCase, RepPoint};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub criterion: Option<u8>,
    pub samples: usize,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub failures: usize,
    pub allowed_failures: usize,
    pub seed: u64,
    /// The only field that differs between runs with the same seed.
    pub wall_time_s: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures <= self.allowed_failures
    }

    /// Copy with the timing zeroed, for reproducibility comparisons.
    pub fn without_timing(&self) -> VerifyReport {
        VerifyReport { wall_time_s: 0.0, ..self.clone() }
    }
}

/// Result of one sample: a deviation and whether it counts as a failure.
#[derive(Clone, Copy, Debug)]
pub struct Outcome {
    pub deviation: f64,
    pub failed: bool,
}

impl Outcome {
    pub fn within(deviation: f64, tol: f64) -> Self {
        // NaN never passes
        Outcome { deviation, failed: !(deviation <= tol) }
    }

    pub fn check(ok: bool) -> Self {
        Outcome { deviation: if ok { 0.0 } else { 1.0 }, failed: !ok }
    }

    pub fn failure() -> Self {
        Outcome { deviation: f64::INFINITY, failed: true }
    }
}

/// An independent stream for sample `i` of a run keyed by `seed`.
pub fn sample_rng(seed: u64, i: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i as u64);
    rng
}

pub struct SuiteSpec<'a> {
    pub name: &'a str,
    pub criterion: Option<u8>,
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub allowed_failures: usize,
}

/// Runs `f` on every sample index in parallel and aggregates.
pub fn run_samples<F>(spec: &SuiteSpec, f: F) -> VerifyReport
where
    F: Fn(&mut ChaCha8Rng, usize) -> Outcome + Sync,
{
    let start = Instant::now();
    let outcomes: Vec<Outcome> = (0..spec.samples)
        .into_par_iter()
        .map(|i| f(&mut sample_rng(spec.seed, i), i))
        .collect();
    report_from(spec, &outcomes, start)
}

pub fn report_from(spec: &SuiteSpec, outcomes: &[Outcome], start: Instant) -> VerifyReport {
    VerifyReport {
        suite: spec.name.to_string(),
        criterion: spec.criterion,
        samples: outcomes.len(),
        max_deviation: outcomes.iter().map(|o| o.deviation).fold(0.0, |a: f64, b| if b.is_nan() { b } else { a.max(b) }),
        tolerance: spec.tolerance,
        failures: outcomes.iter().filter(|o| o.failed).count(),
        allowed_failures: spec.allowed_failures,
        seed: spec.seed,
        wall_time_s: start.elapsed().as_secs_f64(),
    }
}

/// `max|a − b| / max(1, max|a|)`.
pub fn relative_deviation(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let scale = a.iter().fold(1.0f64, |m, x| m.max(x.abs()));
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max) / scale
}

pub type PointMap<'a> = dyn Fn(&RepPoint) -> Result<Vec<f64>> + Sync + 'a;
pub type Sampler<'a> = dyn Fn(&mut ChaCha8Rng) -> RepPoint + Sync + 'a;

/// Deviation of `map` between `p` and `g·p` for random `p` and Haar `g`.
pub fn invariance_suite(spec: &SuiteSpec, sampler: &Sampler, map: &PointMap) -> VerifyReport {
    run_samples(spec, |rng, _| {
        let p = sampler(rng);
        let g = GroupElement::Su2(UnitQuaternion::haar(rng));
        let gp = match act(&g, &p) {
            Ok(x) => x,
            Err(_) => return Outcome::failure(),
        };
        match (map(&p), map(&gp)) {
            (Ok(a), Ok(b)) => Outcome::within(relative_deviation(&a, &b), spec.tolerance),
            _ => Outcome::failure(),
        }
    })
}

/// Two halves: translates of a common section point must be matched by the
/// oracle, and independent points whose images differ by at least `gap` must
/// not be.
pub fn separation_suite(
    spec: &SuiteSpec,
    section: &Sampler,
    sampler: &Sampler,
    map: &PointMap,
    budget: &OracleBudget,
    gap: f64,
) -> [VerifyReport; 2] {
    let matched_name = format!("{}/matched", spec.name);
    let matched = SuiteSpec { name: &matched_name, tolerance: budget.tol_match, ..*spec };
    let same = run_samples(&matched, |rng, _| {
        let p0 = section(rng);
        let g1 = GroupElement::Su2(UnitQuaternion::haar(rng));
        let g2 = GroupElement::Su2(UnitQuaternion::haar(rng));
        let (Ok(p1), Ok(p2)) = (act(&g1, &p0), act(&g2, &p0)) else { return Outcome::failure() };
        match orbit_distance(&p1, &p2, budget, rng) {
            Ok((d, _)) => Outcome::within(d, budget.tol_match),
            Err(_) => Outcome::failure(),
        }
    });
    let distinct_name = format!("{}/distinct", spec.name);
    let distinct = SuiteSpec { name: &distinct_name, seed: spec.seed ^ 0x5eed, tolerance: gap, ..*spec };
    let apart = run_samples(&distinct, |rng, _| {
        let (p, q) = (sampler(rng), sampler(rng));
        let (Ok(a), Ok(b)) = (map(&p), map(&q)) else { return Outcome::failure() };
        let dist = a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
        if dist < gap {
            return Outcome { deviation: 0.0, failed: false };
        }
        match orbit_distance(&p, &q, budget, rng) {
            Ok((d, _)) => Outcome::check(d > budget.tol_match),
            Err(_) => Outcome::failure(),
        }
    });
    [same, apart]
}

/// Gaussian points of the given model.
pub fn gaussian(case: RepCase) -> impl Fn(&mut ChaCha8Rng) -> RepPoint + Sync {
    move |rng| case.random_point(rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::invariant;

    fn spec(name: &str, samples: usize) -> SuiteSpec<'_> {
        SuiteSpec { name, criterion: None, samples, seed: 3, tolerance: 1e-8, allowed_failures: 0 }
    }

    #[test]
    fn deterministic_and_passing() {
        let map = |p: &RepPoint| invariant(p).map(|c| c.components());
        let s = gaussian(RepCase::QuatPair);
        let a = invariance_suite(&spec("inv44", 500), &s, &map);
        let b = invariance_suite(&spec("inv44", 500), &s, &map);
        assert!(a.passed() && a.failures == 0);
        assert_eq!(a.without_timing(), b.without_timing());
    }

    #[test]
    fn a_non_invariant_map_fails() {
        let map = |p: &RepPoint| Ok(p.coords());
        let a = invariance_suite(&spec("coords", 100), &gaussian(RepCase::Mat3), &map);
        assert!(!a.passed());
        assert!(a.failures <= a.samples);
    }

    #[test]
    fn separation_on_quaternion_pairs() {
        let map = |p: &RepPoint| invariant(p).map(|c| c.components());
        let s = gaussian(RepCase::QuatPair);
        let [m, d] = separation_suite(&spec("sep44", 50), &s, &s, &map, &OracleBudget::default(), 1e-3);
        assert!(m.passed(), "{m:?}");
        assert!(d.passed(), "{d:?}");
    }
}
