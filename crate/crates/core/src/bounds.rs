//! Upper bounds on ξ_k(n), ε_k(n), ℶ_k(n) and the multilinear word count,
//! as exact rationals, and a harness that checks them against exact counts.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::counting::{beth_exact, xi_brute, xi_shapes};
use crate::error::{Error, Result};
use crate::guard::Guards;
use crate::num::{binomial, factorial, power, Count, Exact};
use crate::poset::epsilon_exact;

fn require_positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(Error::OutOfRange(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

/// `k^(2n) / ((k-1)!)²`.
pub fn xi_bound(n: usize, k: usize) -> Result<Exact> {
    require_positive("k", k)?;
    let f = factorial(k - 1);
    Exact::ratio(&power(k, 2 * n), &(&f * &f))
}

/// `min{ k^(2n) / (k!)², (n-k+1)^(2n) / ((n-k)!)² }`, defined for `1 <= k <= n`.
pub fn epsilon_bound(n: usize, k: usize) -> Result<Exact> {
    require_positive("k", k)?;
    if k > n {
        return Err(Error::OutOfRange(format!("k = {k} exceeds n = {n}")));
    }
    let fk = factorial(k);
    let by_rows = Exact::ratio(&power(k, 2 * n), &(&fk * &fk))?;
    let fc = factorial(n - k);
    let by_columns = Exact::ratio(&power(n - k + 1, 2 * n), &(&fc * &fc))?;
    Ok(by_rows.min(by_columns))
}

/// `k^n / (k-1)!`.
pub fn beth_bound(n: usize, k: usize) -> Result<Exact> {
    require_positive("k", k)?;
    Exact::ratio(&power(k, n), &factorial(k - 1))
}

fn check_word_length(l: usize, n: usize) -> Result<()> {
    require_positive("n", n)?;
    if n > l {
        return Err(Error::OutOfRange(format!("word length {n} exceeds alphabet size {l}")));
    }
    Ok(())
}

/// `l! k^(2n) / (n! (l-n)! ((k-1)!)²)`.
pub fn multilinear_bound(l: usize, n: usize, k: usize) -> Result<Exact> {
    check_word_length(l, n)?;
    let per_letter_set = xi_bound(n, k)?;
    Ok(Exact::from(binomial(l, n)) * per_letter_set)
}

/// Words of `n` distinct letters over an `l`-letter alphabet with no
/// decreasing run of `k + 1` letters: `C(l, n) ξ_k(n)`.
pub fn multilinear_exact(l: usize, n: usize, k: usize) -> Result<Count> {
    check_word_length(l, n)?;
    Ok(binomial(l, n) * xi_shapes(n, k)?)
}

/// Which count a report row compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Statistic {
    Xi,
    Epsilon,
    Beth,
    Multilinear,
}

impl Statistic {
    pub const ALL: [Statistic; 4] = [
        Statistic::Xi,
        Statistic::Epsilon,
        Statistic::Beth,
        Statistic::Multilinear,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Xi => "xi",
            Statistic::Epsilon => "epsilon",
            Statistic::Beth => "beth",
            Statistic::Multilinear => "multilinear",
        }
    }
}

/// Which `k` values to tabulate for each `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KPolicy {
    /// Every `1 <= k <= n`.
    #[default]
    All,
    /// Only this `k`, for the `n` with `k <= n`.
    Only(usize),
}

impl KPolicy {
    fn values(self, n: usize) -> Vec<usize> {
        match self {
            KPolicy::All => (1..=n).collect(),
            KPolicy::Only(k) if k >= 1 && k <= n => alloc::vec![k],
            KPolicy::Only(_) => Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsRow {
    pub statistic: Statistic,
    /// Alphabet size, for multilinear rows only.
    pub alphabet: Option<usize>,
    pub n: usize,
    pub k: usize,
    pub exact: Count,
    pub bound: Exact,
    /// `exact / bound`.
    pub ratio: Exact,
    pub pass: bool,
    /// How the exact value was obtained.
    pub method: &'static str,
    /// For ε rows, the count with largest antichain at most `k`.
    pub exact_at_most: Option<Count>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub rows: Vec<BoundsRow>,
    pub all_pass: bool,
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub n_max: usize,
    pub k_policy: KPolicy,
    pub statistics: Vec<Statistic>,
    pub guards: Guards,
}

impl VerifyConfig {
    /// All four statistics, every `k`, default guards.
    pub fn new(n_max: usize) -> Self {
        VerifyConfig {
            n_max,
            k_policy: KPolicy::All,
            statistics: Statistic::ALL.to_vec(),
            guards: Guards::default(),
        }
    }
}

fn row(
    statistic: Statistic,
    alphabet: Option<usize>,
    n: usize,
    k: usize,
    exact: Count,
    bound: Exact,
    method: &'static str,
) -> BoundsRow {
    let ratio = &Exact::from(&exact) / &bound;
    let pass = exact <= bound;
    BoundsRow {
        statistic,
        alphabet,
        n,
        k,
        exact,
        bound,
        ratio,
        pass,
        method,
        exact_at_most: None,
    }
}

/// Tabulates exact counts against their bounds for every in-range `(n, k)`.
///
/// ξ uses the exhaustive sweep while `n` is within the brute-force guard and
/// the shape sum beyond it; ε has only the exhaustive census, so an `n_max`
/// past its guard is an error.
pub fn verify(config: &VerifyConfig) -> Result<BoundsReport> {
    let mut rows = Vec::new();
    let mut statistics = config.statistics.clone();
    statistics.sort_unstable();
    statistics.dedup();
    for statistic in statistics {
        match statistic {
            Statistic::Xi => {
                for n in 1..=config.n_max {
                    for k in config.k_policy.values(n) {
                        let (exact, method) = if n <= config.guards.brute_force {
                            (xi_brute(n, k, &config.guards)?, "brute")
                        } else {
                            (xi_shapes(n, k)?, "shapes")
                        };
                        rows.push(row(statistic, None, n, k, exact, xi_bound(n, k)?, method));
                    }
                }
            }
            Statistic::Epsilon => {
                for n in 1..=config.n_max {
                    let census: BTreeMap<usize, Count> = epsilon_exact(n, &config.guards)?;
                    for k in config.k_policy.values(n) {
                        let exact = census.get(&k).cloned().unwrap_or_default();
                        let at_most = census.range(..=k).map(|(_, c)| c).sum();
                        let mut r = row(statistic, None, n, k, exact, epsilon_bound(n, k)?, "census");
                        r.exact_at_most = Some(at_most);
                        rows.push(r);
                    }
                }
            }
            Statistic::Beth => {
                for n in 1..=config.n_max {
                    for k in config.k_policy.values(n) {
                        rows.push(row(statistic, None, n, k, beth_exact(n, k)?, beth_bound(n, k)?, "shapes"));
                    }
                }
            }
            Statistic::Multilinear => {
                for l in 1..=config.n_max {
                    for n in 1..=l {
                        for k in config.k_policy.values(n) {
                            rows.push(row(
                                statistic,
                                Some(l),
                                n,
                                k,
                                multilinear_exact(l, n, k)?,
                                multilinear_bound(l, n, k)?,
                                "shapes",
                            ));
                        }
                    }
                }
            }
        }
    }
    let all_pass = rows.iter().all(|r| r.pass);
    Ok(BoundsReport { rows, all_pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> Exact {
        Exact::new(BigInt::from(n), BigInt::from(d)).unwrap()
    }

    #[test]
    fn xi_bound_examples() {
        assert_eq!(xi_bound(4, 2).unwrap(), q(256, 1));
        assert_eq!(xi_bound(7, 1).unwrap(), q(1, 1));
        assert_eq!(xi_bound(3, 3).unwrap(), q(729, 4));
        assert!(xi_bound(3, 0).is_err());
    }

    #[test]
    fn epsilon_bound_examples() {
        assert_eq!(epsilon_bound(3, 2).unwrap(), q(16, 1));
        assert_eq!(epsilon_bound(3, 1).unwrap(), q(1, 1));
        for n in 1..=8 {
            assert_eq!(epsilon_bound(n, n).unwrap(), q(1, 1));
        }
        assert!(matches!(epsilon_bound(3, 4), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn beth_bound_examples() {
        assert_eq!(beth_bound(4, 2).unwrap(), q(16, 1));
        assert_eq!(beth_bound(5, 1).unwrap(), q(1, 1));
        assert_eq!(beth_bound(3, 3).unwrap(), q(27, 2));
    }

    #[test]
    fn multilinear_examples() {
        assert_eq!(multilinear_exact(4, 2, 1).unwrap(), Count::from(6u64));
        assert_eq!(multilinear_bound(4, 2, 1).unwrap(), q(6, 1));
        for l in 1..=6 {
            for k in 1..=3 {
                assert_eq!(multilinear_exact(l, 1, k).unwrap(), Count::from(l));
            }
        }
        assert!(matches!(multilinear_exact(2, 3, 1), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn report_rows() {
        let report = verify(&VerifyConfig::new(4)).unwrap();
        assert!(report.all_pass);
        let xi = report
            .rows
            .iter()
            .find(|r| r.statistic == Statistic::Xi && r.n == 4 && r.k == 2)
            .unwrap();
        assert_eq!(xi.exact, Count::from(14u64));
        assert_eq!(xi.bound, q(256, 1));
        assert_eq!(xi.ratio, q(7, 128));
        let eps = report
            .rows
            .iter()
            .find(|r| r.statistic == Statistic::Epsilon && r.n == 3 && r.k == 2)
            .unwrap();
        assert_eq!(eps.exact, Count::from(3u64));
        assert_eq!(eps.bound, q(16, 1));
        assert_eq!(eps.exact_at_most, Some(Count::from(4u64)));
        for r in &report.rows {
            assert!(r.bound.is_positive());
            assert!(r.ratio.is_positive() && r.ratio <= Exact::one());
        }
    }

    #[test]
    fn policy_and_guards() {
        let mut config = VerifyConfig::new(8);
        config.statistics = alloc::vec![Statistic::Epsilon];
        assert!(matches!(verify(&config), Err(Error::GuardExceeded { .. })));

        let mut config = VerifyConfig::new(12);
        config.k_policy = KPolicy::Only(3);
        config.statistics = alloc::vec![Statistic::Xi, Statistic::Beth];
        let report = verify(&config).unwrap();
        assert!(report.rows.iter().all(|r| r.k == 3 && r.n >= 3));
        assert_eq!(report.rows.len(), 2 * 10);
        assert!(report.rows.iter().any(|r| r.method == "shapes" && r.statistic == Statistic::Xi));
    }

    #[test]
    fn a_failing_row_is_reported() {
        let r = row(Statistic::Xi, None, 2, 1, Count::from(3u64), q(1, 1), "test");
        assert!(!r.pass);
        assert_eq!(r.ratio, q(3, 1));
    }
}
