//! Roundtrip, surjectivity and counting properties of the staircase construction.

use std::collections::{BTreeSet, HashSet};

use partition_magnitudes::bijection::{assemble, disassemble, table, PartitionPair};
use partition_magnitudes::counting::{convolution_a, p_exact_magnitudes, triangular, Count};
use partition_magnitudes::oracle::{count_two_kinds, enumerate, two_kind_partitions};
use partition_magnitudes::Partition;
use proptest::prelude::*;

fn all_pairs(n: usize) -> Vec<PartitionPair> {
    let mut pairs = Vec::new();
    for m in 0..=n {
        for alpha in enumerate(m, None) {
            for beta in enumerate(n - m, None) {
                pairs.push(PartitionPair::new(m, &alpha, &beta).unwrap());
            }
        }
    }
    pairs
}

fn targets(k: usize, n: usize) -> Vec<Partition> {
    enumerate(n + triangular(k), None)
        .filter(|x| x.distinct_count() == k)
        .collect()
}

#[test]
fn roundtrip_all_pairs() {
    for n in 0..=10 {
        let pairs = all_pairs(n);
        for k in n..=n + 3 {
            for pair in &pairs {
                let row = assemble(k, pair).unwrap();
                assert_eq!(row.assembled.weight(), n + triangular(k));
                assert_eq!(row.assembled.distinct_count(), k);
                assert_eq!(row.assembled.distinct_values(), row.c_values);
                assert!(row.c_values.windows(2).all(|w| w[0] < w[1]));
                let fixed = k - pair.s();
                assert!(pair.alpha_parts().iter().all(|&a| a <= fixed));
                assert_eq!(&disassemble(k, &row.assembled).unwrap(), pair);
            }
        }
    }
}

#[test]
fn image_is_every_target() {
    for n in 0..=8 {
        for k in [n, n + 1] {
            let image: BTreeSet<Partition> = all_pairs(n)
                .iter()
                .map(|pair| assemble(k, pair).unwrap().assembled)
                .collect();
            let expected: BTreeSet<Partition> = targets(k, n).into_iter().collect();
            assert_eq!(image, expected, "k = {k}, n = {n}");
        }
    }
}

/// On every valid input the excesses `d_j - j` are zero and then positive
/// non-decreasing, and only zero-excess values repeat. `disassemble` relies
/// on this shape.
#[test]
fn targets_have_staircase_shape() {
    for n in 0..=8 {
        for k in n..=n + 2 {
            for target in targets(k, n) {
                let values = target.distinct_values();
                let excess: Vec<usize> = values.iter().zip(1..).map(|(&d, j)| d - j).collect();
                let zeros = excess.iter().take_while(|&&e| e == 0).count();
                assert!(excess[zeros..].iter().all(|&e| e > 0), "{target}");
                assert!(excess.windows(2).all(|w| w[0] <= w[1]), "{target}");
                for (&d, &e) in values.iter().zip(&excess) {
                    if target.multiplicity(d) > 1 {
                        assert_eq!(e, 0, "{target}");
                    }
                }
                disassemble(k, &target).unwrap();
            }
        }
    }
}

#[test]
fn k4_targets_roundtrip_to_unique_pairs() {
    let mut seen = HashSet::new();
    for weight in 10..=14 {
        for target in enumerate(weight, None).filter(|x| x.distinct_count() == 4) {
            let pair = disassemble(4, &target).unwrap();
            assert_eq!(assemble(4, &pair).unwrap().assembled, target);
            assert!(seen.insert(pair));
        }
    }
    let expected: u64 = (0..=4).map(count_two_kinds).sum();
    assert_eq!(seen.len() as u64, expected);
}

#[test]
fn table_sizes() {
    for k in 0..=12 {
        for n in 0..=k {
            let rows = table(k, n).unwrap();
            assert_eq!(
                Count::from(rows.len()),
                convolution_a(n),
                "k = {k}, n = {n}"
            );
            assert_eq!(
                Count::from(rows.len()),
                p_exact_magnitudes(k, n + triangular(k)),
                "k = {k}, n = {n}"
            );
        }
    }
    let rows = table(4, 3).unwrap();
    assert_eq!(rows.len(), 10);
    assert!(rows
        .iter()
        .all(|r| r.assembled.weight() == 13 && r.assembled.distinct_count() == 4));
    assert_eq!(targets(4, 3).len(), 10);
}

#[test]
fn table_rows_are_ordered_by_m() {
    let rows = table(6, 5).unwrap();
    assert!(rows.windows(2).all(|w| w[0].m() <= w[1].m()));
}

#[test]
fn two_kinds_correspondence() {
    for n in 0..=15 {
        let mapped: HashSet<_> = all_pairs(n)
            .iter()
            .map(PartitionPair::to_two_kinds)
            .collect();
        let direct: HashSet<_> = two_kind_partitions(n).collect();
        assert_eq!(mapped.len(), all_pairs(n).len());
        assert_eq!(mapped, direct, "n = {n}");
    }
}

fn arb_partition(max_weight: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1..=max_weight.max(1), 0..=max_weight).prop_filter_map(
        "weight bound",
        move |parts| {
            let p = Partition::new(parts).ok()?;
            (p.weight() <= max_weight).then_some(p)
        },
    )
}

proptest! {
    #[test]
    fn random_pairs_roundtrip(
        alpha in arb_partition(12),
        beta in arb_partition(12),
        extra in 0usize..6,
    ) {
        let pair = PartitionPair::new(alpha.weight(), &alpha, &beta).unwrap();
        let k = pair.n() + extra;
        let row = assemble(k, &pair).unwrap();
        prop_assert_eq!(row.assembled.weight(), pair.n() + triangular(k));
        prop_assert_eq!(row.assembled.distinct_count(), k);
        prop_assert_eq!(disassemble(k, &row.assembled).unwrap(), pair);
    }

    #[test]
    fn assemble_rejects_below_hypothesis(alpha in arb_partition(8), beta in arb_partition(8)) {
        let pair = PartitionPair::new(alpha.weight(), &alpha, &beta).unwrap();
        prop_assume!(pair.n() > 0);
        prop_assert!(assemble(pair.n() - 1, &pair).is_err());
    }
}
