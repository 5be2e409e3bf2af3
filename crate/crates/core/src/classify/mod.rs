//! Weight multisets and the dimension gates on manifold quotients.

pub mod gates;
pub mod weights;

pub use gates::{in_table1, table1_enumerate, theorem_gate, GateVerdict, KnownResult};
pub use weights::{indecomposable_components, is_q_stable, nonzero_count, Decomposition, WeightMultiset};
