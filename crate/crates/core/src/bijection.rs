//! The staircase construction: pairs of partitions `(alpha ⊢ m, beta ⊢ n - m)`
//! map to partitions of `n + T(k)` whose parts take exactly `k` different
//! values, for any `k >= n`.
//!
//! With `beta = b_1 <= ... <= b_s` the construction lifts the staircase
//! `1 + 2 + ... + k` to
//!
//! ```text
//! c_j = j                    for 1 <= j <= k - s
//! c_j = j + b_{j - (k - s)}  for k - s < j <= k
//! ```
//!
//! and adds the parts of `alpha`, each of which is at most `k - s` and so
//! repeats one of the unshifted `c_j`. The inverse reads the excesses
//! `e_j = d_j - j` of the distinct values `d_1 < ... < d_k`: the positive
//! excesses are `beta`, and the surplus copies of each value are `alpha`.

use thiserror::Error;

use crate::counting::triangular;
use crate::oracle::{enumerate, TwoKindPartition};
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("construction needs k >= n, got k = {k}, n = {n}")]
    HypothesisViolated { k: usize, n: usize },
    #[error("alpha has weight {alpha_weight} but m = {m}")]
    InconsistentPair { m: usize, alpha_weight: usize },
    #[error("expected exactly {expected} distinct part values, found {found}")]
    WrongMagnitudeCount { expected: usize, found: usize },
    #[error("weight {weight} is outside [{min}, {max}] for k = {k}")]
    WeightOutOfRange {
        k: usize,
        weight: usize,
        min: usize,
        max: usize,
    },
    #[error("partition {0} is not in the image of the construction")]
    NotInImage(String),
}

/// A pair `(alpha ⊢ m, beta ⊢ n - m)`. Parts are kept non-decreasing,
/// `a_1 <= ... <= a_r` and `b_1 <= ... <= b_s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionPair {
    m: usize,
    n: usize,
    alpha: Vec<usize>,
    beta: Vec<usize>,
}

impl PartitionPair {
    /// Pairs `alpha` (which must weigh `m`) with `beta`; `n` is the total weight.
    pub fn new(m: usize, alpha: &Partition, beta: &Partition) -> Result<Self, BijectionError> {
        let alpha_weight = alpha.weight();
        if alpha_weight != m {
            return Err(BijectionError::InconsistentPair { m, alpha_weight });
        }
        Ok(Self {
            m,
            n: m + beta.weight(),
            alpha: alpha.ascending(),
            beta: beta.ascending(),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.alpha.len()
    }

    pub fn s(&self) -> usize {
        self.beta.len()
    }

    /// `a_1 <= ... <= a_r`.
    pub fn alpha_parts(&self) -> &[usize] {
        &self.alpha
    }

    /// `b_1 <= ... <= b_s`.
    pub fn beta_parts(&self) -> &[usize] {
        &self.beta
    }

    pub fn alpha(&self) -> Partition {
        Partition::from_sorted_unchecked(self.alpha.iter().rev().copied().collect())
    }

    pub fn beta(&self) -> Partition {
        Partition::from_sorted_unchecked(self.beta.iter().rev().copied().collect())
    }

    /// Reads the pair as a partition into two kinds, with `beta` marked.
    pub fn to_two_kinds(&self) -> TwoKindPartition {
        TwoKindPartition {
            plain: self.alpha(),
            marked: self.beta(),
        }
    }
}

/// One application of the construction, with the columns of a display table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionRow {
    pub k: usize,
    pub pair: PartitionPair,
    /// Strictly increasing `c_1 < ... < c_k`.
    pub c_values: Vec<usize>,
    /// Parts of `alpha` together with every `c_j`.
    pub assembled: Partition,
}

impl BijectionRow {
    pub fn m(&self) -> usize {
        self.pair.m()
    }

    pub fn r(&self) -> usize {
        self.pair.r()
    }

    pub fn s(&self) -> usize {
        self.pair.s()
    }
}

/// Builds the partition of `n + T(k)` with exactly `k` distinct values.
pub fn assemble(k: usize, pair: &PartitionPair) -> Result<BijectionRow, BijectionError> {
    if k < pair.n {
        return Err(BijectionError::HypothesisViolated { k, n: pair.n });
    }
    let s = pair.s();
    let fixed = k - s;
    let c_values: Vec<usize> = (1..=k)
        .map(|j| {
            if j <= fixed {
                j
            } else {
                j + pair.beta[j - fixed - 1]
            }
        })
        .collect();
    debug_assert!(pair.alpha.iter().all(|&a| a <= fixed));

    let mut parts = pair.alpha.clone();
    parts.extend_from_slice(&c_values);
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(BijectionRow {
        k,
        pair: pair.clone(),
        c_values,
        assembled: Partition::from_sorted_unchecked(parts),
    })
}

/// Recovers the pair that [`assemble`] maps onto `part`.
pub fn disassemble(k: usize, part: &Partition) -> Result<PartitionPair, BijectionError> {
    let values = part.distinct_values();
    if values.len() != k {
        return Err(BijectionError::WrongMagnitudeCount {
            expected: k,
            found: values.len(),
        });
    }
    let weight = part.weight();
    let min = triangular(k);
    let max = min + k;
    if !(min..=max).contains(&weight) {
        return Err(BijectionError::WeightOutOfRange {
            k,
            weight,
            min,
            max,
        });
    }

    let excess: Vec<usize> = values.iter().zip(1..).map(|(&d, j)| d - j).collect();
    let s = excess.iter().filter(|&&e| e > 0).count();
    let fixed = k - s;
    let shaped =
        excess[..fixed].iter().all(|&e| e == 0) && excess[fixed..].windows(2).all(|w| w[0] <= w[1]);
    if !shaped {
        return Err(BijectionError::NotInImage(part.to_string()));
    }
    let beta = excess[fixed..].to_vec();

    let mut alpha = Vec::new();
    for &d in &values {
        let extra = part.multiplicity(d) - 1;
        if extra > 0 && d > fixed {
            return Err(BijectionError::NotInImage(part.to_string()));
        }
        alpha.extend(std::iter::repeat_n(d, extra));
    }

    let m = alpha.iter().sum();
    Ok(PartitionPair {
        m,
        n: weight - min,
        alpha,
        beta,
    })
}

/// Every row of the construction for `(k, n)`: `m` ascending, then `beta`
/// and then `alpha` in enumeration order. Row count is `A_n`.
pub fn table(k: usize, n: usize) -> Result<Vec<BijectionRow>, BijectionError> {
    if k < n {
        return Err(BijectionError::HypothesisViolated { k, n });
    }
    let mut rows = Vec::new();
    for m in 0..=n {
        for beta in enumerate(n - m, None) {
            for alpha in enumerate(m, None) {
                let pair = PartitionPair::new(m, &alpha, &beta)?;
                rows.push(assemble(k, &pair)?);
            }
        }
    }
    Ok(rows)
}
