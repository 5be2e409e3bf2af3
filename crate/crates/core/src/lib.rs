//! Orbit spaces of linear representations of SU(2) and SO(3).
//!
//! The crate provides concrete models of the small real representations whose
//! quotients are known explicitly, the invariant maps that realise those
//! quotients, canonical forms on the chamber-like regions that parametrise
//! them, the combinatorial gates that restrict which representations can have
//! a manifold quotient, and a brute-force orbit oracle used to check all of the
//! above numerically.
//!
//! Module map:
//!
//! - [`algebra`]: quaternions, rotations, small symmetric eigenproblems,
//!   binary-form factorisation and winding numbers.
//! - [`reps`]: representation models, the group action, `q(V)` and `ω(g)`.
//! - [`invariants`]: orbit-separating maps, their sections and the θ-system.
//! - [`geometry`]: Gram regions, Weyl chambers, sheet labels, the degree-7
//!   F-set and the 5⊕3 canonical form.
//! - [`oracle`]: orbit distance search, stabilizers and verification suites.
//! - [`classify`]: weight multisets and the classification gates.

pub mod algebra;
pub mod classify;
pub mod error;
pub mod geometry;
pub mod invariants;
pub mod oracle;
pub mod reps;

pub use error::{Error, Result};

/// Default tolerance for "equal within tolerance" comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;
