//! Dimension data of a representation and the scalars derived from it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A real representation given by the dimensions of its nontrivial
/// irreducible summands and the multiplicity of the trivial one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepSpec {
    dims: Vec<usize>,
    trivial_mult: usize,
}

/// Irreducible real representations of SU(2) have dimension `4m` or `2m + 1`.
pub fn is_valid_dim(n: usize) -> bool {
    n >= 3 && (n % 4 == 0 || n % 2 == 1)
}

impl RepSpec {
    pub fn new(mut dims: Vec<usize>, trivial_mult: usize) -> Result<Self> {
        if let Some(&bad) = dims.iter().find(|&&n| !is_valid_dim(n)) {
            return Err(Error::InvalidDimension(bad));
        }
        dims.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { dims, trivial_mult })
    }

    pub fn from_dims(dims: &[usize]) -> Result<Self> {
        Self::new(dims.to_vec(), 0)
    }

    /// Nontrivial dimensions, largest first.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn trivial_mult(&self) -> usize {
        self.trivial_mult
    }

    pub fn nontrivial_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn total_dim(&self) -> usize {
        self.nontrivial_dim() + self.trivial_mult
    }

    /// `⌊n_i / 2⌋` for each nontrivial summand.
    pub fn floors(&self) -> Vec<usize> {
        self.dims.iter().map(|n| n / 2).collect()
    }
}

/// `q(V) = Σ ⌊n_i / 2⌋`.
pub fn q_of(spec: &RepSpec) -> usize {
    spec.floors().iter().sum()
}

/// Dimension of the kernel of a nonzero algebra element on the nontrivial
/// part, `Σ n_i − 2 q(V)`: one for every odd summand.
pub fn kernel_dim(spec: &RepSpec) -> usize {
    spec.nontrivial_dim() - 2 * q_of(spec)
}
