//! Acceptance criteria 1–12, one PASS/FAIL line each.
//!
//! Every criterion runs its registered battery suites, checks that each
//! report carries at least the stated sample count at no looser than the
//! stated tolerance, checks the stated runtime and adds a direct check that
//! does not go through the battery.

use std::f64::consts::PI;
use std::time::Instant;

use num_complex::Complex64;
use orbitspace::algebra::{BinaryForm, UnitQuaternion};
use orbitspace::classify::{table1_enumerate, theorem_gate, KnownResult};
use orbitspace::invariants::theta_values;
use orbitspace::oracle::battery::{winding_beta0, winding_loop};
use orbitspace::oracle::{registry, run_suite, stabilizer_dim, BatteryConfig, VerifyReport};
use orbitspace::reps::{act, GroupElement, RepPoint, RepSpec};

/// Stated sample count and threshold for one suite report.
///
/// Deviation bounds and pair-selection gaps get stricter as they shrink.
/// Required margins get stricter as they grow and are marked `floor`.
struct Demand {
    suite: &'static str,
    samples: usize,
    tolerance: f64,
    floor: bool,
}

const fn demand(suite: &'static str, samples: usize, tolerance: f64) -> Demand {
    Demand { suite, samples, tolerance, floor: false }
}

const fn margin(suite: &'static str, samples: usize, tolerance: f64) -> Demand {
    Demand { suite, samples, tolerance, floor: true }
}

struct Criterion {
    number: u8,
    title: &'static str,
    seconds: f64,
    demands: &'static [Demand],
    direct: fn() -> Result<(), String>,
}

const CRITERIA: &[Criterion] = &[
    Criterion { number: 1, title: "table 1 reproduction", seconds: 1.0, demands: &[], direct: table1_rows },
    Criterion { number: 2, title: "gate consistency", seconds: 1.0, demands: &[], direct: gate_rows },
    Criterion {
        number: 3,
        title: "invariance suites",
        seconds: 60.0,
        demands: &[
            demand("inv44", 10_000, 1e-8),
            demand("inv43", 10_000, 1e-8),
            demand("inv333", 10_000, 1e-8),
            demand("m7", 10_000, 1e-8),
            demand("inv8base", 10_000, 1e-8),
            demand("chart53", 10_000, 1e-8),
        ],
        direct: || Ok(()),
    },
    Criterion {
        number: 4,
        title: "section round trips",
        seconds: 30.0,
        demands: &[
            demand("section44", 10_000, 1e-9),
            demand("section43", 10_000, 1e-9),
            demand("section333", 10_000, 1e-9),
            demand("unique_t", 100, 1e-12),
        ],
        direct: || Ok(()),
    },
    Criterion {
        number: 5,
        title: "separation suites",
        seconds: 120.0,
        demands: &[
            demand("sep44/matched", 500, 1e-5),
            demand("sep44/distinct", 500, 1e-3),
            demand("sep43/matched", 500, 1e-5),
            demand("sep43/distinct", 500, 1e-3),
            demand("sep333/matched", 500, 1e-5),
            demand("sep333/distinct", 500, 1e-3),
        ],
        direct: || Ok(()),
    },
    Criterion {
        number: 6,
        title: "theta-system laws",
        seconds: 30.0,
        demands: &[
            demand("theta/law", 10_000, 1e-9),
            demand("theta/h_invariance", 10_000, 1e-9),
            demand("theta/closed_forms", 1, 1e-10),
        ],
        direct: || Ok(()),
    },
    Criterion { number: 7, title: "winding reproduction", seconds: 5.0, demands: &[demand("winding", 3, 0.0)], direct: winding_direct },
    Criterion { number: 8, title: "stabilizer witnesses", seconds: 10.0, demands: &[demand("lemma31", 9, 1e-10)], direct: lemma31_direct },
    Criterion {
        number: 9,
        title: "region geometry",
        seconds: 30.0,
        demands: &[
            demand("region/delta", 10_000, 1e-12),
            demand("region/gram_section", 1000, 1e-8),
            demand("region/face", 1000, 1e-9),
        ],
        direct: || Ok(()),
    },
    Criterion {
        number: 10,
        title: "F-set coherence",
        seconds: 120.0,
        demands: &[demand("fset/w1", 100, 1e-5), demand("fset/w2", 100, 1e-5), margin("fset/generic", 100, 1e-4)],
        direct: fset_allowance,
    },
    Criterion {
        number: 11,
        title: "5+3 end-to-end",
        seconds: 120.0,
        demands: &[demand("chart53_e2e/invariance", 1000, 1e-7), margin("chart53_e2e/separation", 200, 1e-6)],
        direct: || Ok(()),
    },
];

fn table1_rows() -> Result<(), String> {
    let mut got = table1_enumerate(9);
    let mut want = vec![vec![4, 4], vec![4, 3], vec![3, 3, 3], vec![5, 4], vec![7], vec![8], vec![9], vec![5, 3], vec![5, 5]];
    got.sort();
    want.sort();
    (got == want).then_some(()).ok_or(format!("enumerated {got:?}"))
}

fn gate_rows() -> Result<(), String> {
    for dims in table1_enumerate(9) {
        let v = theorem_gate(&RepSpec::from_dims(&dims).unwrap(), true);
        if !(v.q == 3 || v.q == 4) || !v.manifold_possible {
            return Err(format!("{dims:?}: q = {}, manifold_possible = {}", v.q, v.manifold_possible));
        }
    }
    for dims in [[3], [4]] {
        if theorem_gate(&RepSpec::from_dims(&dims).unwrap(), true).manifold_possible {
            return Err(format!("{dims:?} passes the manifold gate"));
        }
    }
    let v = theorem_gate(&RepSpec::from_dims(&[5, 4]).unwrap(), true);
    (v.known_result == KnownResult::NotSmooth).then_some(()).ok_or(format!("(5,4): {:?}", v.known_result))
}

/// Winding by accumulated principal arguments on a grid ten times finer.
fn winding_direct() -> Result<(), String> {
    let (a, b) = (0.8, 0.6);
    let beta0 = winding_beta0(a, b, 2000).ok_or("no admissible beta0")?;
    let wind = |f: &dyn Fn(f64) -> Complex64| {
        let n = 20_000;
        let total: f64 = (0..n).map(|k| (f((k + 1) as f64 / n as f64) / f(k as f64 / n as f64)).arg()).sum();
        (total / (2.0 * PI)).round() as i64
    };
    let at = |t: f64| {
        let [v1, v2, v3] = winding_loop(a, b, beta0, t);
        theta_values(v1, v2, v3)
    };
    let first = wind(&|t| at(t).theta1_prime);
    let alpha = wind(&|t| {
        let th = at(t);
        th.theta1 * th.theta1 * th.theta2.conj()
    });
    if (first, alpha) == (1, 2) {
        Ok(())
    } else {
        Err(format!("windings {first} and {alpha}"))
    }
}

fn monomial_sum(degree: usize, terms: &[(usize, f64)]) -> RepPoint {
    let mut c = vec![Complex64::new(0.0, 0.0); degree + 1];
    for &(k, v) in terms {
        c[k] = Complex64::new(v, 0.0);
    }
    RepPoint::poly_r(BinaryForm::new(c)).expect("real form")
}

fn lemma31_direct() -> Result<(), String> {
    for m in 2..=4usize {
        let n = 2 * m;
        let torus = monomial_sum(n, &[(m, 1.0)]);
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let finite = monomial_sum(n, &[(0, 1.0), (n, sign)]);
        let dims = (stabilizer_dim(&torus).map_err(|e| e.to_string())?, stabilizer_dim(&finite).map_err(|e| e.to_string())?);
        if dims != (1, 0) {
            return Err(format!("m = {m}: stabilizer dims {dims:?}"));
        }
        let g = GroupElement::Su2(UnitQuaternion::torus(PI / m as f64));
        let moved = act(&g, &finite).and_then(|q| q.distance(&finite)).map_err(|e| e.to_string())?;
        if moved > 1e-10 {
            return Err(format!("m = {m}: generator moves the form by {moved:e}"));
        }
    }
    Ok(())
}

/// The generic half may miss at most 5 of 100.
fn fset_allowance() -> Result<(), String> {
    let reports = run_suite("fset", &BatteryConfig::default()).map_err(|e| e.to_string())?;
    let generic = reports.iter().find(|r| r.suite == "fset/generic").ok_or("no generic report")?;
    (generic.allowed_failures <= 5).then_some(()).ok_or(format!("allows {} misses", generic.allowed_failures))
}

fn check(c: &Criterion, reports: &[VerifyReport], seconds: f64) -> Result<String, String> {
    for d in c.demands {
        let r = reports.iter().find(|r| r.suite == d.suite).ok_or(format!("missing report {}", d.suite))?;
        if r.samples < d.samples {
            return Err(format!("{}: {} samples, need {}", d.suite, r.samples, d.samples));
        }
        let looser = if d.floor { r.tolerance < d.tolerance } else { r.tolerance > d.tolerance };
        if looser {
            return Err(format!("{}: threshold {:e} looser than {:e}", d.suite, r.tolerance, d.tolerance));
        }
    }
    if let Some(r) = reports.iter().find(|r| !r.passed()) {
        return Err(format!("{}: {} of {} failed, max deviation {:e}", r.suite, r.failures, r.samples, r.max_deviation));
    }
    (c.direct)()?;
    if seconds > c.seconds {
        return Err(format!("took {seconds:.2}s, bound {:.0}s", c.seconds));
    }
    let worst = reports.iter().map(|r| r.max_deviation).fold(0.0, f64::max);
    Ok(format!("{} reports, worst deviation {worst:.2e}, {seconds:.2}s", reports.len()))
}

fn main() {
    let cfg = BatteryConfig::default();
    let suites = registry();
    let mut all_reports = Vec::new();
    let mut ok = true;
    let mut total = 0.0;
    for c in CRITERIA {
        let start = Instant::now();
        let reports: Vec<VerifyReport> = suites.iter().filter(|s| s.criterion == c.number).flat_map(|s| (s.run)(&cfg)).collect();
        let seconds = start.elapsed().as_secs_f64();
        total += seconds;
        let verdict = check(c, &reports, seconds);
        ok &= verdict.is_ok();
        match verdict {
            Ok(msg) => println!("criterion {:2} PASS  {}: {msg}", c.number, c.title),
            Err(msg) => println!("criterion {:2} FAIL  {}: {msg}", c.number, c.title),
        }
        all_reports.extend(reports);
    }

    // Criterion 12: the whole battery under ten minutes and reproducible under a fixed seed.
    let strip = |r: &VerifyReport| serde_json::to_string(&r.without_timing()).unwrap();
    let rerun: Vec<VerifyReport> = ["inv8base", "sep333", "fset", "chart53_e2e"]
        .iter()
        .flat_map(|name| run_suite(name, &cfg).unwrap())
        .collect();
    let deterministic = rerun.iter().all(|r| all_reports.iter().any(|s| s.suite == r.suite && strip(s) == strip(r)));
    let fast = total < 600.0;
    ok &= deterministic && fast;
    println!(
        "criterion 12 {}  full battery: {total:.2}s of 600s, rerun of {} reports {}",
        if deterministic && fast { "PASS" } else { "FAIL" },
        rerun.len(),
        if deterministic { "identical" } else { "differs" }
    );

    if !ok {
        std::process::exit(1);
    }
}
