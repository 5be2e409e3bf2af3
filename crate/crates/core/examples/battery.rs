//! Runs the verification battery and prints one line per report.
//!
//! `cargo run --release --example battery -- [suite ...]`

use orbitspace::oracle::{run_suite, suite_names, BatteryConfig};

fn main() {
    let cfg = BatteryConfig::default();
    let only: Vec<String> = std::env::args().skip(1).collect();
    for name in suite_names().into_iter().filter(|n| only.is_empty() || only.iter().any(|o| o == n)) {
        for r in run_suite(name, &cfg).expect("registered suite") {
            println!(
                "{:28} {} failures {}/{} max deviation {:.3e} tolerance {:.0e} {:.2}s",
                r.suite,
                if r.passed() { "PASS" } else { "FAIL" },
                r.failures,
                r.samples,
                r.max_deviation,
                r.tolerance,
                r.wall_time_s
            );
        }
    }
}
