//! Exact counting functions for integer partitions.
//!
//! Everything here is driven by one recurrence on bounded-part counts,
//!
//! ```text
//! p_k(n) = p_{k-1}(n) + p_k(n - k),    p_k(0) = 1,    p_0(n) = 0 for n > 0,
//! ```
//!
//! held in a [`CountCache`]. The remaining functions are built on top of it:
//! distinct-part counts `q(k, n) = p_k(n - T(k))` with `T(k) = k(k+1)/2`, the
//! signed coefficients `a(k, m) = sum_{j >= k} (-1)^(j-k) C(j, k) q(j, m)`, and
//! the count of partitions with exactly `k` different part values,
//! `p(k, n) = sum_{m = T(k)}^{n} a(k, m) p(n - m)`.
//!
//! Counts are arbitrary precision. The module-level functions share a
//! thread-local cache; use a [`CountCache`] directly to control its lifetime.

use std::cell::RefCell;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Count type for nonnegative results.
pub type Count = BigUint;
/// Count type for results that may be negative.
pub type SignedCount = BigInt;

/// The triangular number `k(k+1)/2`, the weight of the staircase `k + ... + 1`.
pub const fn triangular(k: usize) -> usize {
    k * (k + 1) / 2
}

/// Largest `j` with `triangular(j) <= m`: the most distinct parts a partition
/// of `m` can have.
pub fn max_distinct_parts(m: usize) -> usize {
    let mut j = 0;
    while triangular(j + 1) <= m {
        j += 1;
    }
    j
}

/// Exact binomial coefficient, computed multiplicatively.
pub fn binomial(n: usize, k: usize) -> Count {
    if k > n {
        return Count::zero();
    }
    let k = k.min(n - k);
    let mut acc = Count::one();
    for i in 1..=k {
        // acc * (n - k + i) is divisible by i at every step.
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// Memoized bounded-part counts `p_k(n)`.
///
/// `rows[k][n]` holds `p_k(n)` for `k < rows.len()` and `n < width`; every
/// row has the same width. Unrestricted counts `p(n) = p_n(n)` live in a
/// separate column computed by sweeping the same recurrence in place over
/// `k = 1..=n`, so `p(n)` costs O(n) memory instead of an n-by-n table.
#[derive(Debug, Clone)]
pub struct CountCache {
    rows: Vec<Vec<Count>>,
    width: usize,
    unrestricted: Vec<Count>,
}

impl Default for CountCache {
    fn default() -> Self {
        Self::new()
    }
}

impl CountCache {
    pub fn new() -> Self {
        Self {
            rows: vec![vec![Count::one()]],
            width: 1,
            unrestricted: vec![Count::one()],
        }
    }

    /// Number of partitions of `n` with no part greater than `k`.
    pub fn p_bounded(&mut self, k: usize, n: usize) -> Count {
        if k >= n {
            return self.p(n);
        }
        self.ensure_table(k, n);
        self.rows[k][n].clone()
    }

    /// Number of partitions of `n`.
    pub fn p(&mut self, n: usize) -> Count {
        self.ensure_unrestricted(n);
        self.unrestricted[n].clone()
    }

    /// Number of partitions of `n` into exactly `k` distinct parts.
    pub fn q_exact(&mut self, k: usize, n: usize) -> Count {
        match n.checked_sub(triangular(k)) {
            Some(rest) => self.p_bounded(k, rest),
            None => Count::zero(),
        }
    }

    /// Number of partitions of `n` into distinct parts.
    pub fn q_distinct(&mut self, n: usize) -> Count {
        (0..=max_distinct_parts(n))
            .map(|k| self.q_exact(k, n))
            .sum()
    }

    /// The alternating coefficient `a(k, m)`.
    ///
    /// The sum over `j >= k` stops at `max_distinct_parts(m)`: beyond it
    /// `q(j, m)` is zero because `m < triangular(j)`.
    pub fn a_coeff(&mut self, k: usize, m: usize) -> SignedCount {
        let top = max_distinct_parts(m);
        let mut total = SignedCount::zero();
        for j in k..=top {
            let term = SignedCount::from(binomial(j, k) * self.q_exact(j, m));
            if (j - k).is_multiple_of(2) {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    /// Number of partitions of `n` having exactly `k` different part values,
    /// evaluated as `sum_{m = T(k)}^{n} a(k, m) p(n - m)`.
    pub fn p_exact_magnitudes(&mut self, k: usize, n: usize) -> Count {
        let start = triangular(k);
        if n < start {
            return Count::zero();
        }
        let mut total = SignedCount::zero();
        for m in start..=n {
            let a = self.a_coeff(k, m);
            if !a.is_zero() {
                total += a * SignedCount::from(self.p(n - m));
            }
        }
        total
            .to_biguint()
            .expect("partition count evaluated to a negative number")
    }

    /// The self-convolution `A_n = sum_{m=0}^{n} p(m) p(n - m)`.
    pub fn convolution_a(&mut self, n: usize) -> Count {
        self.ensure_unrestricted(n);
        let p = &self.unrestricted;
        (0..=n).map(|m| &p[m] * &p[n - m]).sum()
    }

    fn ensure_table(&mut self, k: usize, n: usize) {
        if n >= self.width {
            let new_width = (n + 1).max(2 * self.width);
            for row in 0..self.rows.len() {
                for col in self.width..new_width {
                    let value = self.cell_from_recurrence(row, col);
                    self.rows[row].push(value);
                }
            }
            self.width = new_width;
        }
        while self.rows.len() <= k {
            let row = self.rows.len();
            self.rows.push(Vec::with_capacity(self.width));
            for col in 0..self.width {
                let value = self.cell_from_recurrence(row, col);
                self.rows[row].push(value);
            }
        }
    }

    // Requires row - 1 filled through `col` and row filled below `col`.
    fn cell_from_recurrence(&self, row: usize, col: usize) -> Count {
        if col == 0 {
            return Count::one();
        }
        if row == 0 {
            return Count::zero();
        }
        let mut value = self.rows[row - 1][col].clone();
        if col >= row {
            value += &self.rows[row][col - row];
        }
        value
    }

    fn ensure_unrestricted(&mut self, n: usize) {
        let have = self.unrestricted.len();
        if n < have {
            return;
        }
        let len = (n + 1).max(2 * have);
        let mut column = vec![Count::zero(); len];
        column[0] = Count::one();
        // After pass `part`, column[j] = p_part(j).
        for part in 1..len {
            for j in part..len {
                let (lo, hi) = column.split_at_mut(j);
                hi[0] += &lo[j - part];
            }
        }
        self.unrestricted = column;
    }
}

thread_local! {
    static CACHE: RefCell<CountCache> = RefCell::new(CountCache::new());
}

fn with_cache<T>(f: impl FnOnce(&mut CountCache) -> T) -> T {
    CACHE.with(|cache| f(&mut cache.borrow_mut()))
}

/// See [`CountCache::p_bounded`].
pub fn p_bounded(k: usize, n: usize) -> Count {
    with_cache(|c| c.p_bounded(k, n))
}

/// See [`CountCache::p`].
pub fn p(n: usize) -> Count {
    with_cache(|c| c.p(n))
}

/// See [`CountCache::q_exact`].
pub fn q_exact(k: usize, n: usize) -> Count {
    with_cache(|c| c.q_exact(k, n))
}

/// See [`CountCache::q_distinct`].
pub fn q_distinct(n: usize) -> Count {
    with_cache(|c| c.q_distinct(n))
}

/// See [`CountCache::a_coeff`].
pub fn a_coeff(k: usize, m: usize) -> SignedCount {
    with_cache(|c| c.a_coeff(k, m))
}

/// See [`CountCache::p_exact_magnitudes`].
pub fn p_exact_magnitudes(k: usize, n: usize) -> Count {
    with_cache(|c| c.p_exact_magnitudes(k, n))
}

/// See [`CountCache::convolution_a`].
pub fn convolution_a(n: usize) -> Count {
    with_cache(|c| c.convolution_a(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    #[test]
    fn triangular_values() {
        assert_eq!(triangular(0), 0);
        assert_eq!(triangular(3), 6);
        assert_eq!(triangular(7), 28);
    }

    #[test]
    fn max_distinct_parts_is_computed_bound() {
        assert_eq!(max_distinct_parts(0), 0);
        assert_eq!(max_distinct_parts(2), 1);
        assert_eq!(max_distinct_parts(3), 2);
        assert_eq!(max_distinct_parts(9), 3);
        assert_eq!(max_distinct_parts(10), 4);
        for m in 0..500 {
            let j = max_distinct_parts(m);
            assert!(triangular(j) <= m && triangular(j + 1) > m);
        }
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![c(1)];
        for n in 0..40 {
            for (k, expected) in row.iter().enumerate() {
                assert_eq!(&binomial(n, k), expected, "C({n},{k})");
            }
            assert!(binomial(n, n + 1).is_zero());
            let mut next = vec![c(1); n + 2];
            for k in 1..=n {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
        }
    }

    #[test]
    fn p_bounded_examples() {
        assert_eq!(p_bounded(1, 7), c(1));
        assert_eq!(p_bounded(2, 5), c(3));
        assert_eq!(p_bounded(4, 4), c(5));
    }

    #[test]
    fn p_examples() {
        assert_eq!(p(4), c(5));
        assert_eq!(p(0), c(1));
        assert_eq!(p(10), c(42));
        assert_eq!(p(100), c(190_569_292));
    }

    #[test]
    fn p_exceeds_64_bits() {
        // p(500), A000041.
        let expected: Count = "2300165032574323995027".parse().unwrap();
        assert_eq!(p(500), expected);
        assert!(p(500) > Count::from(u64::MAX));
    }

    #[test]
    fn p_agrees_with_table_diagonal() {
        let mut cache = CountCache::new();
        for n in 0..60 {
            let via_column = cache.p(n);
            let via_table = if n == 0 {
                Count::one()
            } else {
                cache.p_bounded(n - 1, n) + Count::one()
            };
            assert_eq!(via_column, via_table, "n = {n}");
        }
    }

    #[test]
    fn cache_boundary_and_recurrence() {
        let mut cache = CountCache::new();
        for k in 0..30 {
            assert_eq!(cache.p_bounded(k, 0), c(1));
        }
        for n in 1..30 {
            assert!(cache.p_bounded(0, n).is_zero());
        }
        for k in 1..30 {
            for n in k..60 {
                let lhs = cache.p_bounded(k, n);
                let rhs = cache.p_bounded(k - 1, n) + cache.p_bounded(k, n - k);
                assert_eq!(lhs, rhs, "k = {k}, n = {n}");
            }
        }
    }

    #[test]
    fn cache_growth_is_order_independent() {
        let mut forward = CountCache::new();
        let mut backward = CountCache::new();
        let cells: Vec<(usize, usize)> =
            (0..25).flat_map(|k| (0..50).map(move |n| (k, n))).collect();
        let a: Vec<_> = cells
            .iter()
            .map(|&(k, n)| forward.p_bounded(k, n))
            .collect();
        let mut b: Vec<_> = cells
            .iter()
            .rev()
            .map(|&(k, n)| backward.p_bounded(k, n))
            .collect();
        b.reverse();
        assert_eq!(a, b);
    }

    #[test]
    fn p_bounded_monotone_and_stabilizes() {
        for n in 0..40 {
            let mut prev = Count::zero();
            for k in 0..=n + 3 {
                let cur = p_bounded(k, n);
                assert!(cur >= prev, "k = {k}, n = {n}");
                if k >= n {
                    assert_eq!(cur, p(n));
                }
                prev = cur;
            }
        }
    }

    #[test]
    fn q_exact_examples() {
        assert_eq!(q_exact(3, 8), c(2));
        assert_eq!(q_exact(0, 0), c(1));
        assert_eq!(q_exact(2, 5), c(2));
        assert!(q_exact(0, 5).is_zero());
        assert!(q_exact(4, 9).is_zero());
    }

    #[test]
    fn q_distinct_examples() {
        assert_eq!(q_distinct(0), c(1));
        assert_eq!(q_distinct(8), c(6));
        assert_eq!(q_distinct(3), c(2));
        // A000009.
        let expected = [1u64, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27];
        for (n, &v) in expected.iter().enumerate() {
            assert_eq!(q_distinct(n), c(v), "n = {n}");
        }
    }

    #[test]
    fn a_coeff_examples() {
        assert_eq!(a_coeff(0, 0), SignedCount::from(1));
        assert_eq!(a_coeff(3, 9), SignedCount::from(q_exact(3, 9)));
        assert_eq!(a_coeff(3, 9), SignedCount::from(3));
        assert_eq!(a_coeff(3, 10), SignedCount::from(0));
        assert_eq!(a_coeff(0, 1), SignedCount::from(-1));
        assert!(a_coeff(4, 9).is_zero());
    }

    #[test]
    fn a_coeff_zero_column_is_euler_product() {
        // a(0, m) is the coefficient of x^m in prod_{i>=1} (1 - x^i).
        let len = 60;
        let mut poly = vec![0i64; len];
        poly[0] = 1;
        for i in 1..len {
            for j in (i..len).rev() {
                poly[j] -= poly[j - i];
            }
        }
        for (m, &coeff) in poly.iter().enumerate() {
            assert_eq!(a_coeff(0, m), SignedCount::from(coeff), "m = {m}");
        }
    }

    #[test]
    fn p_exact_magnitudes_examples() {
        assert_eq!(p_exact_magnitudes(3, 8), c(5));
        assert!(p_exact_magnitudes(4, 9).is_zero());
        assert_eq!(p_exact_magnitudes(3, 9), c(10));
    }

    #[test]
    fn p_exact_magnitudes_boundaries() {
        assert_eq!(p_exact_magnitudes(0, 0), c(1));
        for n in 1..30 {
            assert!(p_exact_magnitudes(0, n).is_zero(), "p(0,{n})");
        }
        for k in 1..10 {
            assert!(p_exact_magnitudes(k, 0).is_zero(), "p({k},0)");
        }
    }

    #[test]
    fn magnitudes_sum_to_p() {
        for n in 0..=25 {
            let total: Count = (0..=n).map(|k| p_exact_magnitudes(k, n)).sum();
            assert_eq!(total, p(n), "n = {n}");
            let distinct: Count = (0..=n).map(|k| q_exact(k, n)).sum();
            assert_eq!(distinct, q_distinct(n), "n = {n}");
        }
    }

    #[test]
    fn q_bounded_by_p_exact() {
        for k in 0..=8 {
            for n in 0..=40 {
                assert!(
                    q_exact(k, n) <= p_exact_magnitudes(k, n),
                    "k = {k}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn q_shift_regime() {
        for n in 0..=20 {
            for k in n..=n + 5 {
                assert_eq!(q_exact(k, n + triangular(k)), p(n), "k = {k}, n = {n}");
            }
        }
    }

    #[test]
    fn convolution_examples() {
        assert_eq!(convolution_a(0), c(1));
        assert_eq!(convolution_a(3), c(10));
        assert_eq!(convolution_a(5), c(36));
    }

    #[test]
    fn thread_local_caches_agree() {
        let handles: Vec<_> = (0..4)
            .map(|t| {
                std::thread::spawn(move || {
                    (0..30)
                        .map(|n| p_exact_magnitudes(t % 3 + 1, n + 10))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert_eq!(results[0], results[3]);
        let mut fresh = CountCache::new();
        let direct: Vec<_> = (0..30)
            .map(|n| fresh.p_exact_magnitudes(2, n + 10))
            .collect();
        assert_eq!(results[1], direct);
    }
}
