use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use orbitspace::classify::{table1_enumerate, theorem_gate};
use orbitspace::geometry::{f_predicate_7, in_d, in_m7, in_m8, m7_point, on_boundary_m7, on_boundary_m8, GramPoint};
use orbitspace::invariants::invariant;
use orbitspace::oracle::{orbit_distance, run_suite, suite_names, BatteryConfig, OracleBudget};
use orbitspace::reps::RepSpec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

mod output;
mod parse;

use output::{coord, envelope, group_element};

#[derive(Parser, Debug)]
#[command(name = "orbitspace", version, about = "Orbit spaces of small su(2) representations")]
struct Cli {
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Sample count for verification suites (each suite's own default if absent).
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Orbit-match tolerance.
    #[arg(long, global = true, default_value_t = 1e-5)]
    tol: f64,
    #[arg(long, global = true)]
    budget_coarse: Option<usize>,
    #[arg(long, global = true)]
    budget_restarts: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension gates for irreducible summands of the given dimensions.
    Classify {
        #[arg(required = true)]
        dims: Vec<usize>,
        #[arg(long)]
        connected: bool,
    },
    /// Quotient coordinate of a point: case 44, 43, 333, 8, 7 or 53.
    Invariant { case: String, point: String },
    /// Oracle distance between the orbits of two points.
    OrbitEq { case: String, p: String, q: String },
    /// Run a verification suite, or `all`.
    Verify { suite: String },
    /// The dimension types passing every gate.
    Table1 {
        #[arg(long, default_value_t = 9)]
        max_dim: usize,
    },
    /// CSV grid over [−1,1]³ flagging a region and its boundary.
    Region {
        which: Region,
        #[arg(long, default_value_t = 11)]
        resolution: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Region {
    M7,
    M8,
    #[value(name = "D", alias = "d")]
    D,
}

struct Config {
    seed: u64,
    samples: Option<usize>,
    budget: OracleBudget,
    output_path: Option<String>,
}

enum Failure {
    /// Exit code 1.
    Verification(String),
    /// Exit code 2.
    Usage(String),
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn config(cli: &Cli) -> Result<Config, Failure> {
    let mut budget = OracleBudget { tol_match: cli.tol, ..OracleBudget::default() };
    if let Some(c) = cli.budget_coarse {
        budget.coarse_samples = c;
    }
    if let Some(r) = cli.budget_restarts {
        budget.restarts = r;
    }
    budget.validate().map_err(|_| Failure::Usage("budget values and --tol must be positive".into()))?;
    if cli.samples == Some(0) {
        return Err(Failure::Usage("--samples must be at least 1".into()));
    }
    Ok(Config { seed: cli.seed, samples: cli.samples, budget, output_path: cli.out.clone() })
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn classify(dims: &[usize], connected: bool) -> Result<String, Failure> {
    let spec = RepSpec::from_dims(dims).map_err(usage)?;
    let v = theorem_gate(&spec, connected);
    let body = json!({
        "dims": spec.dims(),
        "connected": connected,
        "q": v.q,
        "manifold_possible": v.manifold_possible,
        "smooth_possible": v.smooth_possible,
        "table1_member": v.table1_member,
        "known_result": v.known_result,
        "theorem": v.known_result.theorem(),
    });
    Ok(json_text(&envelope("classify", body)))
}

fn invariant_cmd(case: &str, point: &str) -> Result<String, Failure> {
    let p = parse::point(case, point).map_err(Failure::Usage)?;
    let body = if case == "7" {
        let x = m7_point(&p).map_err(usage)?;
        json!({ "case": case, "m7_point": x.to_array(), "in_f": f_predicate_7(&p).map_err(usage)? })
    } else {
        json!({ "case": case, "coord": coord(&invariant(&p).map_err(usage)?) })
    };
    Ok(json_text(&envelope("invariant", body)))
}

fn orbit_eq(cfg: &Config, case: &str, p: &str, q: &str) -> Result<String, Failure> {
    let p = parse::point(case, p).map_err(Failure::Usage)?;
    let q = parse::point(case, q).map_err(Failure::Usage)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (d, g) = orbit_distance(&p, &q, &cfg.budget, &mut rng).map_err(usage)?;
    let body = json!({
        "case": case,
        "distance": d,
        "same_orbit": d <= cfg.budget.tol_match,
        "tol_match": cfg.budget.tol_match,
        "witness": group_element(&g),
        "seed": cfg.seed,
    });
    Ok(json_text(&envelope("orbit-eq", body)))
}

fn verify(cfg: &Config, suite: &str) -> Result<String, Failure> {
    if suite != "all" && !suite_names().contains(&suite) {
        return Err(Failure::Usage(format!("unknown suite {suite:?}; expected all or one of {}", suite_names().join(", "))));
    }
    let battery = BatteryConfig { seed: cfg.seed, samples: cfg.samples, budget: cfg.budget };
    let reports = run_suite(suite, &battery).map_err(usage)?;
    for r in &reports {
        eprintln!("{} {} failures {}/{} ({:.2}s)", if r.passed() { "PASS" } else { "FAIL" }, r.suite, r.failures, r.samples, r.wall_time_s);
    }
    let passed = reports.iter().all(|r| r.passed());
    let body = json!({ "suite": suite, "passed": passed, "reports": reports });
    let text = json_text(&envelope("verify", body));
    if passed {
        Ok(text)
    } else {
        emit(cfg, &text).map_err(usage)?;
        Err(Failure::Verification(format!("suite {suite} failed")))
    }
}

fn table1(max_dim: usize) -> Result<String, Failure> {
    if max_dim < 9 {
        return Err(Failure::Usage("--max-dim must be at least 9".into()));
    }
    Ok(json_text(&envelope("table1", json!({ "rows": table1_enumerate(max_dim) }))))
}

/// Boundary products are compared against this.
const REGION_TOL: f64 = 1e-9;

fn region(which: Region, resolution: usize) -> Result<String, Failure> {
    if resolution < 2 {
        return Err(Failure::Usage("--resolution must be at least 2".into()));
    }
    let mut out = String::from("x1,x2,x3,in_region,on_boundary\n");
    let last = (resolution - 1) as f64;
    let coord = |i: usize| (2.0 * i as f64 - last) / last;
    for a in 0..resolution {
        for b in 0..resolution {
            for c in 0..resolution {
                let x = GramPoint::new(coord(a), coord(b), coord(c));
                let (inside, boundary) = match which {
                    Region::M7 => (in_m7(x, REGION_TOL), on_boundary_m7(x, REGION_TOL)),
                    Region::M8 => (in_m8(x, REGION_TOL), on_boundary_m8(x, REGION_TOL)),
                    Region::D => {
                        let delta = orbitspace::geometry::delta(x);
                        (in_d(x, REGION_TOL), delta.abs() <= REGION_TOL)
                    }
                };
                out.push_str(&format!("{},{},{},{},{}\n", x.x1, x.x2, x.x3, inside as u8, (inside && boundary) as u8));
            }
        }
    }
    Ok(out)
}

fn emit(cfg: &Config, text: &str) -> std::io::Result<()> {
    match &cfg.output_path {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cfg = config(&cli)?;
    let text = match &cli.command {
        Command::Classify { dims, connected } => classify(dims, *connected)?,
        Command::Invariant { case, point } => invariant_cmd(case, point)?,
        Command::OrbitEq { case, p, q } => orbit_eq(&cfg, case, p, q)?,
        Command::Verify { suite } => verify(&cfg, suite)?,
        Command::Table1 { max_dim } => table1(*max_dim)?,
        Command::Region { which, resolution } => region(*which, *resolution)?,
    };
    emit(&cfg, &text).map_err(usage)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
