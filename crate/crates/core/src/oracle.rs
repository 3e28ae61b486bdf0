//! Brute-force enumeration of partitions.
//!
//! This module is the ground truth the closed-form counts are checked
//! against, so it must never call into them. Counting here is done by
//! walking every partition, which is practical up to about `n = 40`
//! (`p(40) = 37338`).

use crate::partition::Partition;

/// Largest weight the test suites enumerate exhaustively.
pub const ORACLE_CEILING: usize = 40;

/// All partitions of a weight, in reverse-lexicographic order.
///
/// Partitions are compared as non-increasing part sequences, so for `n = 4`
/// the order is `4`, `3+1`, `2+2`, `2+1+1`, `1+1+1+1`. With a part bound
/// `b`, the first partition is the greedy `b+b+...+r`.
#[derive(Debug, Clone)]
pub struct PartitionStream {
    weight: usize,
    max_part: Option<usize>,
    current: Option<Vec<usize>>,
}

impl PartitionStream {
    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn max_part(&self) -> Option<usize> {
        self.max_part
    }
}

/// Streams every partition of `n`, optionally restricted to parts `<= max_part`.
pub fn enumerate(n: usize, max_part: Option<usize>) -> PartitionStream {
    let bound = max_part.unwrap_or(n).min(n);
    let current = if n == 0 {
        Some(Vec::new())
    } else if bound == 0 {
        None
    } else {
        Some(greedy_fill(n, bound))
    };
    PartitionStream {
        weight: n,
        max_part,
        current,
    }
}

fn greedy_fill(mut rest: usize, cap: usize) -> Vec<usize> {
    let mut parts = Vec::with_capacity(rest.div_ceil(cap));
    while rest > 0 {
        let part = cap.min(rest);
        parts.push(part);
        rest -= part;
    }
    parts
}

impl Iterator for PartitionStream {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let mut state = self.current.take()?;
        let out = Partition::from_sorted_unchecked(state.clone());

        // Strip trailing ones, shrink the last part above one, and refill
        // greedily with parts no larger than the shrunk value.
        let mut freed = 0;
        while state.last() == Some(&1) {
            state.pop();
            freed += 1;
        }
        if let Some(last) = state.pop() {
            let shrunk = last - 1;
            state.push(shrunk);
            state.extend(greedy_fill(freed + 1, shrunk));
            self.current = Some(state);
        }
        Some(out)
    }
}

impl std::iter::FusedIterator for PartitionStream {}

/// A partition into parts of two kinds: ordinary parts and marked parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoKindPartition {
    pub plain: Partition,
    pub marked: Partition,
}

impl TwoKindPartition {
    pub fn weight(&self) -> usize {
        self.plain.weight() + self.marked.weight()
    }
}

/// Every two-kind partition of `n`: for each `m` in `0..=n`, every plain
/// partition of `m` paired with every marked partition of `n - m`.
pub fn two_kind_partitions(n: usize) -> impl Iterator<Item = TwoKindPartition> {
    (0..=n).flat_map(move |m| {
        enumerate(m, None).flat_map(move |plain| {
            enumerate(n - m, None).map(move |marked| TwoKindPartition {
                plain: plain.clone(),
                marked,
            })
        })
    })
}

/// Counts partitions of `n` whose parts take exactly `k` different values.
pub fn count_exact_magnitudes(n: usize, k: usize) -> u64 {
    enumerate(n, None)
        .filter(|p| p.distinct_count() == k)
        .count() as u64
}

/// `histogram[k]` = number of partitions of `n` with exactly `k` distinct
/// part values, for `k` in `0..=n`. One pass over the enumeration.
pub fn magnitude_histogram(n: usize) -> Vec<u64> {
    let mut histogram = vec![0u64; n + 1];
    for p in enumerate(n, None) {
        histogram[p.distinct_count()] += 1;
    }
    histogram
}

/// Counts partitions of `n` into exactly `k` pairwise distinct parts.
pub fn count_exact_distinct_parts(n: usize, k: usize) -> u64 {
    enumerate(n, None)
        .filter(|p| p.len() == k && p.has_distinct_parts())
        .count() as u64
}

/// Counts partitions of `n` into distinct parts.
pub fn count_distinct_parts(n: usize) -> u64 {
    enumerate(n, None)
        .filter(Partition::has_distinct_parts)
        .count() as u64
}

/// Counts partitions of `n` with every part at most `max_part`.
pub fn count_bounded(n: usize, max_part: usize) -> u64 {
    enumerate(n, Some(max_part)).count() as u64
}

pub fn count_partitions(n: usize) -> u64 {
    enumerate(n, None).count() as u64
}

/// Counts two-kind partitions of `n` by walking every pair.
pub fn count_two_kinds(n: usize) -> u64 {
    two_kind_partitions(n).count() as u64
}
