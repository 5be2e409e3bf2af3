//! Weight multisets: nonzero counts, q-stability and indecomposable blocks.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reps::rank;

const ZERO_TOL: f64 = 1e-12;
const RANK_TOL: f64 = 1e-9;
const MAX_NONZERO: usize = 20;

/// A multiset of vectors in `ℝᵈ` stored as distinct entries with multiplicities.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightMultiset {
    dim: usize,
    entries: Vec<(Vec<f64>, usize)>,
}

impl WeightMultiset {
    pub fn new(dim: usize, entries: Vec<(Vec<f64>, usize)>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension(0));
        }
        if entries.iter().any(|(v, _)| v.len() != dim) {
            return Err(Error::DimensionMismatch);
        }
        if let Some((_, m)) = entries.iter().find(|(_, m)| *m == 0) {
            return Err(Error::OutOfRange { name: "multiplicity", value: *m as f64 });
        }
        Ok(Self { dim, entries })
    }

    /// Every vector with multiplicity one.
    pub fn from_vectors(dim: usize, vectors: Vec<Vec<f64>>) -> Result<Self> {
        Self::new(dim, vectors.into_iter().map(|v| (v, 1)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(Vec<f64>, usize)] {
        &self.entries
    }

    /// Members listed with repetition.
    pub fn expanded(&self) -> Vec<Vec<f64>> {
        self.entries.iter().flat_map(|(v, m)| std::iter::repeat_n(v.clone(), *m)).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn is_zero(v: &[f64]) -> bool {
    v.iter().map(|c| c * c).sum::<f64>().sqrt() <= ZERO_TOL
}

fn span_rank(dim: usize, vectors: &[&Vec<f64>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank(&DMatrix::from_fn(dim, vectors.len(), |i, j| vectors[j][i]), RANK_TOL)
}

/// `‖P‖`: members of norm above `1e−12`, counted with multiplicity.
pub fn nonzero_count(p: &WeightMultiset) -> usize {
    p.entries.iter().filter(|(v, _)| !is_zero(v)).map(|(_, m)| m).sum()
}

/// Whether removing any `q` or fewer members leaves the span unchanged.
pub fn is_q_stable(p: &WeightMultiset, q: usize) -> bool {
    let members: Vec<Vec<f64>> = p.expanded().into_iter().filter(|v| !is_zero(v)).collect();
    let n = members.len();
    let full = span_rank(p.dim, &members.iter().collect::<Vec<_>>());
    let q = q.min(n);
    // removing more members only shrinks the span, so subsets of size exactly q suffice
    let mut removed = vec![false; n];
    fn visit(start: usize, left: usize, removed: &mut [bool], check: &dyn Fn(&[bool]) -> bool) -> bool {
        if left == 0 {
            return check(removed);
        }
        for i in start..removed.len() {
            removed[i] = true;
            let ok = visit(i + 1, left - 1, removed, check);
            removed[i] = false;
            if !ok {
                return false;
            }
        }
        true
    }
    let check = |removed: &[bool]| {
        let rest: Vec<&Vec<f64>> = members.iter().zip(removed).filter(|(_, r)| !**r).map(|(v, _)| v).collect();
        span_rank(p.dim, &rest) == full
    };
    visit(0, q, &mut removed, &check)
}

/// The nonzero part split into its finest span-independent blocks.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Decomposition {
    pub blocks: Vec<WeightMultiset>,
    pub zeros: usize,
}

/// Blocks are the connected components of the linear matroid: two members
/// are in one block iff some fundamental circuit of a greedy basis links them.
pub fn indecomposable_components(p: &WeightMultiset) -> Result<Decomposition> {
    let all = p.expanded();
    let zeros = all.iter().filter(|v| is_zero(v)).count();
    let members: Vec<Vec<f64>> = all.into_iter().filter(|v| !is_zero(v)).collect();
    if members.len() > MAX_NONZERO {
        return Err(Error::InputTooLarge(members.len()));
    }
    let n = members.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while parent[r] != r {
            r = parent[r];
        }
        parent[i] = r;
        r
    }
    let mut basis: Vec<usize> = Vec::new();
    for i in 0..n {
        let mut cand: Vec<&Vec<f64>> = basis.iter().map(|&b| &members[b]).collect();
        cand.push(&members[i]);
        if span_rank(p.dim, &cand) > basis.len() {
            basis.push(i);
            continue;
        }
        // the fundamental circuit: basis members whose removal breaks the dependency
        for (k, &b) in basis.iter().enumerate() {
            let mut others: Vec<&Vec<f64>> =
                basis.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, &c)| &members[c]).collect();
            others.push(&members[i]);
            if span_rank(p.dim, &others) == basis.len() {
                let (ri, rb) = (find(&mut parent, i), find(&mut parent, b));
                parent[ri] = rb;
            }
        }
    }
    let mut groups: Vec<(usize, Vec<Vec<f64>>)> = Vec::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        match groups.iter_mut().find(|(root, _)| *root == r) {
            Some((_, g)) => g.push(members[i].clone()),
            None => groups.push((r, vec![members[i].clone()])),
        }
    }
    let blocks = groups.into_iter().map(|(_, g)| collect_multiset(p.dim, g)).collect();
    Ok(Decomposition { blocks, zeros })
}

fn collect_multiset(dim: usize, vectors: Vec<Vec<f64>>) -> WeightMultiset {
    let mut entries: Vec<(Vec<f64>, usize)> = Vec::new();
    for v in vectors {
        match entries.iter_mut().find(|(w, _)| *w == v) {
            Some((_, m)) => *m += 1,
            None => entries.push((v, 1)),
        }
    }
    WeightMultiset { dim, entries }
}
