use orbitspace::classify::{indecomposable_components, is_q_stable, nonzero_count, WeightMultiset};
use orbitspace::reps::rank;
use nalgebra::DMatrix;
use proptest::prelude::*;

/// Integer weight vectors in dimension `d ≤ 4`, up to eight of them.
fn multiset() -> impl Strategy<Value = WeightMultiset> {
    (1usize..=4).prop_flat_map(|d| {
        prop::collection::vec(prop::collection::vec(-2i32..=2, d), 1..=8)
            .prop_map(move |vs| WeightMultiset::from_vectors(d, vs.into_iter().map(|v| v.into_iter().map(f64::from).collect()).collect()).unwrap())
    })
}

fn span_rank(d: usize, vs: &[&Vec<f64>]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    rank(&DMatrix::from_fn(d, vs.len(), |i, j| vs[j][i]), 1e-9)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn stability_is_monotone(p in multiset(), q in 1usize..=5) {
        if is_q_stable(&p, q) {
            prop_assert!(is_q_stable(&p, q - 1));
        }
    }

    #[test]
    fn collinear_two_stability_is_a_count(multiples in prop::collection::vec(-3i32..=3, 1..=8), d in 1usize..=3) {
        let base: Vec<f64> = (0..d).map(|i| (i + 1) as f64).collect();
        let vs = multiples.iter().map(|&m| base.iter().map(|b| b * m as f64).collect()).collect();
        let p = WeightMultiset::from_vectors(d, vs).unwrap();
        let n = nonzero_count(&p);
        prop_assert_eq!(is_q_stable(&p, 2), n != 1 && n != 2);
    }

    /// Every rank-additive split of the nonzero members is a union of blocks.
    #[test]
    fn decomposition_is_the_finest_split(p in multiset()) {
        let d = p.dim();
        let decomposition = indecomposable_components(&p).unwrap();
        let members: Vec<Vec<f64>> = p.expanded().into_iter().filter(|v| v.iter().any(|c| *c != 0.0)).collect();
        prop_assert_eq!(decomposition.zeros, p.len() - members.len());
        let block_of = |v: &Vec<f64>| decomposition.blocks.iter().position(|b| b.expanded().contains(v)).unwrap();
        let labels: Vec<usize> = members.iter().map(block_of).collect();
        let sizes: usize = decomposition.blocks.iter().map(|b| b.len()).sum();
        prop_assert_eq!(sizes, members.len());
        let full = span_rank(d, &members.iter().collect::<Vec<_>>());
        let blocks_ranks: usize = decomposition.blocks.iter().map(|b| span_rank(d, &b.expanded().iter().collect::<Vec<_>>())).sum();
        prop_assert_eq!(blocks_ranks, full);
        for mask in 1u32..(1 << members.len()) - 1 {
            let (a, b): (Vec<usize>, Vec<usize>) = (0..members.len()).partition(|i| mask & (1 << i) != 0);
            let ra = span_rank(d, &a.iter().map(|&i| &members[i]).collect::<Vec<_>>());
            let rb = span_rank(d, &b.iter().map(|&i| &members[i]).collect::<Vec<_>>());
            if ra + rb == full {
                for i in &a {
                    prop_assert!(b.iter().all(|j| labels[*j] != labels[*i]), "split {mask:b} cuts a block");
                }
            }
        }
    }
}
