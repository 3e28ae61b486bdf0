//! Finite-range verification of the partition identities.
//!
//! Each check walks its parameter range in a fixed order and stops at the
//! first case where the two sides differ. Both sides are always computed by
//! different routes: a closed form against the enumeration oracle, or two
//! unrelated closed forms. Every report uses a fresh [`CountCache`], so
//! identical inputs produce identical reports.

use std::fmt;

use crate::counting::{max_distinct_parts, triangular, Count, CountCache, SignedCount};
use crate::oracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `p(k, n + T(k)) = A_n` for `k >= n`.
    Main,
    /// `p(k, n) = sum_m a(k, m) p(n - m)` against enumeration.
    MercaCorollary,
    /// `q(k, n + T(k)) = p(n)` for `k >= n`.
    QShift,
    /// `sum_k p(n - T(k)) = sum_m q(m) q(n - m)`.
    Merca52,
    /// `a(k, m) = q(k, m)` for `T(k) <= m <= T(k) + k`.
    AEqualsQ,
}

impl Identity {
    pub const ALL: [Identity; 5] = [
        Identity::Main,
        Identity::MercaCorollary,
        Identity::QShift,
        Identity::Merca52,
        Identity::AEqualsQ,
    ];

    /// Short name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Identity::Main => "main",
            Identity::MercaCorollary => "merca1",
            Identity::QShift => "qshift",
            Identity::Merca52 => "merca52",
            Identity::AEqualsQ => "aq",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|id| id.name() == name)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub params: Vec<(&'static str, usize)>,
    pub lhs: SignedCount,
    pub rhs: SignedCount,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(f, "{}: lhs={} rhs={}", params.join(" "), self.lhs, self.rhs)
    }
}

/// `a(k, m)` and `q(k, m)` just past the range where they must agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryProbe {
    pub k: usize,
    pub m: usize,
    pub a: SignedCount,
    pub q: Count,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: Identity,
    /// Human-readable parameter range.
    pub range: String,
    pub cases_checked: u64,
    pub counterexample: Option<Counterexample>,
    /// Only filled by [`verify_a_equals_q_regime`]; informational.
    pub boundary_probes: Vec<BoundaryProbe>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(
                f,
                "{}: holds ({} cases, {})",
                self.identity, self.cases_checked, self.range
            ),
            Some(cx) => write!(
                f,
                "{}: FAILS after {} cases ({}) at {}",
                self.identity, self.cases_checked, self.range, cx
            ),
        }
    }
}

struct Run {
    cases: u64,
    counterexample: Option<Counterexample>,
}

impl Run {
    fn new() -> Self {
        Self {
            cases: 0,
            counterexample: None,
        }
    }

    /// Records one case; returns false once the sides disagree.
    fn check(
        &mut self,
        params: &[(&'static str, usize)],
        lhs: impl Into<SignedCount>,
        rhs: impl Into<SignedCount>,
    ) -> bool {
        self.cases += 1;
        let (lhs, rhs) = (lhs.into(), rhs.into());
        if lhs == rhs {
            return true;
        }
        self.counterexample = Some(Counterexample {
            params: params.to_vec(),
            lhs,
            rhs,
        });
        false
    }

    fn finish(self, identity: Identity, range: String) -> IdentityReport {
        IdentityReport {
            identity,
            range,
            cases_checked: self.cases,
            counterexample: self.counterexample,
            boundary_probes: Vec::new(),
        }
    }
}

/// Checks `p(k, n + T(k)) = A_n` for all `0 <= n <= k <= k_max`.
pub fn verify_main(k_max: usize) -> IdentityReport {
    verify_main_with_slack(k_max, 0)
}

/// Like [`verify_main`] but lets `n` run up to `k + slack`. Any positive
/// slack leaves the hypothesis `k >= n` and is expected to fail.
pub fn verify_main_with_slack(k_max: usize, slack: usize) -> IdentityReport {
    let mut cache = CountCache::new();
    let mut run = Run::new();
    'outer: for k in 0..=k_max {
        for n in 0..=k + slack {
            let lhs = cache.p_exact_magnitudes(k, n + triangular(k));
            let rhs = cache.convolution_a(n);
            if !run.check(&[("k", k), ("n", n)], lhs, rhs) {
                break 'outer;
            }
        }
    }
    let range = if slack == 0 {
        format!("0 <= n <= k <= {k_max}")
    } else {
        format!("0 <= n <= k + {slack}, k <= {k_max}")
    };
    run.finish(Identity::Main, range)
}

/// Checks the `a(k, m)` expansion of `p(k, n)` against enumeration counts for
/// all `k <= k_max`, `n <= n_max`, in `(n, k)` order. Enumeration cost grows
/// like `p(n_max)`; keep `n_max` near [`oracle::ORACLE_CEILING`].
pub fn verify_merca_corollary(k_max: usize, n_max: usize) -> IdentityReport {
    let mut cache = CountCache::new();
    let mut run = Run::new();
    'outer: for n in 0..=n_max {
        let histogram = oracle::magnitude_histogram(n);
        for k in 0..=k_max {
            let lhs = cache.p_exact_magnitudes(k, n);
            let rhs = histogram.get(k).copied().unwrap_or(0);
            if !run.check(&[("k", k), ("n", n)], lhs, rhs) {
                break 'outer;
            }
        }
    }
    run.finish(
        Identity::MercaCorollary,
        format!("k <= {k_max}, n <= {n_max}"),
    )
}

/// Checks `q(k, n + T(k)) = p(n)` for all `0 <= n <= k <= k_max`.
pub fn verify_q_shift(k_max: usize) -> IdentityReport {
    let mut cache = CountCache::new();
    let mut run = Run::new();
    'outer: for k in 0..=k_max {
        for n in 0..=k {
            let lhs = cache.q_exact(k, n + triangular(k));
            let rhs = cache.p(n);
            if !run.check(&[("k", k), ("n", n)], lhs, rhs) {
                break 'outer;
            }
        }
    }
    run.finish(Identity::QShift, format!("0 <= n <= k <= {k_max}"))
}

/// Checks `sum_{T(k) <= n} p(n - T(k)) = sum_m q(m) q(n - m)` for `n <= n_max`.
pub fn verify_merca_52(n_max: usize) -> IdentityReport {
    let mut cache = CountCache::new();
    let mut run = Run::new();
    for n in 0..=n_max {
        let lhs: Count = (0..=max_distinct_parts(n))
            .map(|k| cache.p(n - triangular(k)))
            .sum();
        let distinct: Vec<Count> = (0..=n).map(|m| cache.q_distinct(m)).collect();
        let rhs: Count = (0..=n).map(|m| &distinct[m] * &distinct[n - m]).sum();
        if !run.check(&[("n", n)], lhs, rhs) {
            break;
        }
    }
    run.finish(Identity::Merca52, format!("n <= {n_max}"))
}

/// Checks `a(k, m) = q(k, m)` for `k <= k_max` and `T(k) <= m <= T(k) + k`,
/// then records both values at `m = T(k) + k + 1` without asserting anything
/// about them.
pub fn verify_a_equals_q_regime(k_max: usize) -> IdentityReport {
    let mut cache = CountCache::new();
    let mut run = Run::new();
    'outer: for k in 0..=k_max {
        let start = triangular(k);
        for m in start..=start + k {
            let lhs = cache.a_coeff(k, m);
            let rhs = cache.q_exact(k, m);
            if !run.check(&[("k", k), ("m", m)], lhs, rhs) {
                break 'outer;
            }
        }
    }
    let boundary_probes = (0..=k_max)
        .map(|k| {
            let m = triangular(k) + k + 1;
            BoundaryProbe {
                k,
                m,
                a: cache.a_coeff(k, m),
                q: cache.q_exact(k, m),
            }
        })
        .collect();
    let mut report = run.finish(
        Identity::AEqualsQ,
        format!("k <= {k_max}, T(k) <= m <= T(k) + k"),
    );
    report.boundary_probes = boundary_probes;
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn main_small_ranges() {
        let r = verify_main(0);
        assert!(r.holds());
        assert_eq!(r.cases_checked, 1);
        let r = verify_main(3);
        assert!(r.holds());
        assert_eq!(r.cases_checked, 10);
    }

    #[test]
    fn main_fails_outside_hypothesis() {
        let r = verify_main_with_slack(3, 1);
        assert!(!r.holds());
        let cx = r.counterexample.unwrap();
        // p(0, 1) = 0 but A_1 = 2.
        assert_eq!(cx.params, vec![("k", 0), ("n", 1)]);
        assert_eq!(cx.lhs, SignedCount::from(0));
        assert_eq!(cx.rhs, SignedCount::from(2));
        assert_eq!(r.cases_checked, 2);
    }

    #[test]
    fn corollary_small() {
        assert!(verify_merca_corollary(3, 8).holds());
        let r = verify_merca_corollary(0, 0);
        assert!(r.holds());
        assert_eq!(r.cases_checked, 1);
    }

    #[test]
    fn q_shift_counts() {
        let r = verify_q_shift(15);
        assert!(r.holds());
        assert_eq!(r.cases_checked, 136);
    }

    #[test]
    fn merca_52_small() {
        let r = verify_merca_52(3);
        assert!(r.holds());
        assert_eq!(r.cases_checked, 4);
    }

    #[test]
    fn regime_and_probes() {
        let r = verify_a_equals_q_regime(3);
        assert!(r.holds());
        let probe = r.boundary_probes.iter().find(|p| p.k == 3).unwrap();
        assert_eq!(probe.m, 10);
        assert_eq!(probe.a, SignedCount::from(0));
        assert_eq!(probe.q, Count::from(4u32));
    }

    #[test]
    fn identity_names_roundtrip() {
        for id in Identity::ALL {
            assert_eq!(Identity::from_name(id.name()), Some(id));
        }
        assert_eq!(Identity::from_name("nope"), None);
    }

    #[test]
    fn display_formats() {
        assert_eq!(
            verify_main(3).to_string(),
            "main: holds (10 cases, 0 <= n <= k <= 3)"
        );
        let failing = verify_main_with_slack(1, 1).to_string();
        assert_eq!(
            failing,
            "main: FAILS after 2 cases (0 <= n <= k + 1, k <= 1) at k=0 n=1: lhs=0 rhs=2"
        );
    }
}
