//! Representation models, the group action on them, and the scalar
//! invariants `q(V)`, `ω(g)` and kernel dimensions.

pub mod omega;
pub mod point;
pub mod real_form;
pub mod spec;
pub mod sphere;

pub use omega::{action_matrix, omega, rank};
pub use point::{act, GroupElement, RepCase, RepPoint};
pub use spec::{is_valid_dim, kernel_dim, q_of, RepSpec};
pub use sphere::{hopf, lemma31_witnesses, roots_to_sphere, Lemma31Witnesses};
