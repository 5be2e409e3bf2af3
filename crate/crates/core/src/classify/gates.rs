//! Necessary conditions for a manifold quotient and the cases settled exactly.

use serde::{Deserialize, Serialize};

use crate::reps::{is_valid_dim, q_of, RepSpec};

/// What is known about `V/G` for the given dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KnownResult {
    /// Diffeomorphic to a vector space.
    #[serde(rename = "VectorSpace_Thm1_4")]
    VectorSpace,
    /// A topological manifold that is not smooth.
    #[serde(rename = "NotSmooth_Thm1_5")]
    NotSmooth,
    #[serde(rename = "R4_Thm1_6")]
    R4,
    #[serde(rename = "R5_Thm1_7")]
    R5Octic,
    #[serde(rename = "R5_Thm1_8")]
    R5FiveThree,
    /// Passes every gate, no theorem decides it.
    Unresolved,
    ExcludedByGates,
}

impl KnownResult {
    /// Name of the theorem the verdict rests on.
    pub fn theorem(self) -> Option<&'static str> {
        match self {
            KnownResult::VectorSpace => Some("1.4"),
            KnownResult::NotSmooth => Some("1.5"),
            KnownResult::R4 => Some("1.6"),
            KnownResult::R5Octic => Some("1.7"),
            KnownResult::R5FiveThree => Some("1.8"),
            KnownResult::Unresolved => None,
            KnownResult::ExcludedByGates => Some("1.1-1.3"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateVerdict {
    pub q: usize,
    pub manifold_possible: bool,
    pub smooth_possible: bool,
    pub table1_member: bool,
    pub known_result: KnownResult,
}

/// Membership in the list of types with `q = 3`, or `q = 4` and every
/// `⌊nᵢ/2⌋` even.
pub fn in_table1(dims: &[usize]) -> bool {
    if dims.iter().any(|n| !is_valid_dim(*n)) {
        return false;
    }
    let q: usize = dims.iter().map(|n| n / 2).sum();
    q == 3 || (q == 4 && dims.iter().all(|n| (n / 2) % 2 == 0))
}

pub fn theorem_gate(spec: &RepSpec, connected: bool) -> GateVerdict {
    let q = q_of(spec);
    let manifold_possible = q > 2;
    let some_odd = spec.floors().iter().any(|f| f % 2 == 1);
    let smooth_possible = manifold_possible && q <= 4 && (!connected || !some_odd || q == 3);
    let dims = spec.dims();
    let known_result = if !smooth_possible {
        KnownResult::ExcludedByGates
    } else {
        match (dims, connected) {
            ([4, 4] | [4, 3] | [3, 3, 3], _) => KnownResult::VectorSpace,
            ([5, 4], true) => KnownResult::NotSmooth,
            ([7], true) => KnownResult::R4,
            ([8], true) => KnownResult::R5Octic,
            ([5, 3], true) => KnownResult::R5FiveThree,
            _ => KnownResult::Unresolved,
        }
    };
    GateVerdict { q, manifold_possible, smooth_possible, table1_member: in_table1(dims), known_result }
}

/// All multisets of irreducible dimensions `≤ max_dim` passing the
/// smoothness gates for connected groups, largest dimension first.
pub fn table1_enumerate(max_dim: usize) -> Vec<Vec<usize>> {
    let dims: Vec<usize> = (3..=max_dim).filter(|n| is_valid_dim(*n)).collect();
    let mut out = Vec::new();
    // every summand contributes at least 1 to q, so four summands at most
    fn extend(dims: &[usize], start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let q: usize = current.iter().map(|n| n / 2).sum();
        if q > 4 {
            return;
        }
        if !current.is_empty() && in_table1(current) {
            out.push(current.clone());
        }
        for i in start..dims.len() {
            current.push(dims[i]);
            extend(dims, i, current, out);
            current.pop();
        }
    }
    let desc: Vec<usize> = dims.into_iter().rev().collect();
    extend(&desc, 0, &mut Vec::new(), &mut out);
    out
}
