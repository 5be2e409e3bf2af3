//! Ground truth by search: orbit distances, stabilisers and the verification
//! harness used against every invariant map.

pub mod search;
pub mod stabilizer;

pub use search::{orbit_distance, same_orbit, OracleBudget};
pub use stabilizer::{stabilizer_dim, stabilizer_probe, STAB_TOL};
pub mod battery;
pub mod suite;

pub use battery::{registry, run_suite, suite_names, BatteryConfig, Suite};
pub use suite::{invariance_suite, separation_suite, VerifyReport};
