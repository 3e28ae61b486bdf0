//! Partition counts by number of distinct part values.
//!
//! The number of partitions of `n + k(k+1)/2` whose parts take exactly `k`
//! different values equals `sum_{m=0}^{n} p(m) p(n - m)` whenever `k >= n`.
//! This crate computes every count involved exactly, builds the explicit
//! correspondence behind the identity, and checks each identity over finite
//! ranges against exhaustive enumeration.
//!
//! - [`counting`]: closed forms and recurrences over a shared count cache.
//! - [`oracle`]: brute-force enumeration, independent of [`counting`].
//! - [`bijection`]: the staircase construction and its inverse.
//! - [`verify`]: range checks producing [`verify::IdentityReport`]s.
//! - [`cli`]: the `partmag` command-line driver.

pub mod bijection;
pub mod cli;
pub mod counting;
pub mod golden;
pub mod oracle;
pub mod partition;
pub mod verify;

pub use bijection::{assemble, disassemble, table, BijectionError, BijectionRow, PartitionPair};
pub use counting::{
    a_coeff, convolution_a, p, p_bounded, p_exact_magnitudes, q_distinct, q_exact, triangular,
    Count, CountCache, SignedCount,
};
pub use partition::{Partition, PartitionError};
pub use verify::{Identity, IdentityReport};
