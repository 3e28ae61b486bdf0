//! The canonical integer partition type.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partition parts must be positive, found a zero part")]
    ZeroPart,
}

/// A finite multiset of positive integers, stored non-increasing.
///
/// The empty partition is the unique partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts given in any order.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Caller guarantees `parts` is non-increasing and zero-free.
    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Self { parts }
    }

    /// Parts in non-increasing order.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Parts in non-decreasing order.
    pub fn ascending(&self) -> Vec<usize> {
        self.parts.iter().rev().copied().collect()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The distinct part values in increasing order.
    pub fn distinct_values(&self) -> Vec<usize> {
        let mut values = self.ascending();
        values.dedup();
        values
    }

    /// Number of different magnitudes among the parts.
    pub fn distinct_count(&self) -> usize {
        self.parts.windows(2).filter(|w| w[0] != w[1]).count() + usize::from(!self.is_empty())
    }

    /// True when no part is repeated.
    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn multiplicity(&self, value: usize) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    /// `+`-joined ascending parts, `0` for the empty partition.
    pub fn ascending_display(&self) -> String {
        join_plus(&self.ascending())
    }
}

pub(crate) fn join_plus(parts: &[usize]) -> String {
    if parts.is_empty() {
        return "0".to_owned();
    }
    parts
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join("+")
}

impl fmt::Display for Partition {
    /// Non-increasing `+`-joined parts; the empty partition prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_plus(&self.parts))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Self::new(parts)
    }
}
