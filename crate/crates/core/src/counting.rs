//! Exact values of ξ_k(n), ℶ_k(n) and the distribution of the longest
//! decreasing subsequence, each by more than one route.
//!
//! ξ_k(n) counts permutations of `1..=n` whose longest decreasing
//! subsequence has length at most `k`; ℶ_k(n) counts standard tableaux of
//! order `n` with at most `k` rows. By the Schensted correspondence
//! ξ_k(n) = Σ (f^λ)² and ℶ_k(n) = Σ f^λ over shapes λ ⊢ n with at most `k`
//! rows, where f^λ is the hook-length count.

use alloc::collections::BTreeMap;
use alloc::string::ToString;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::guard::{self, Guards};
use crate::num::{binomial, factorial, Count, Exact};
use crate::partition::partitions;
use crate::permutation::Permutations;
use crate::stats::{lds_length, syt_count_hook};

/// ξ_k(n) by sweeping all of `S_n`.
pub fn xi_brute(n: usize, k: usize, guards: &Guards) -> Result<Count> {
    guard::check("xi_brute", n, guards.brute_force)?;
    let histogram = lds_histogram(n);
    Ok(histogram.range(..=k).map(|(_, c)| c).sum())
}

/// ξ_k(n) as a sum of squared hook-length counts over shapes with at most `k` rows.
pub fn xi_shapes(n: usize, k: usize) -> Result<Count> {
    if k >= n {
        return Ok(factorial(n));
    }
    if k == 0 {
        return Ok(Count::zero());
    }
    let mut total = Count::zero();
    for lambda in partitions(n, k) {
        let f = syt_count_hook(&lambda)?;
        total += &f * &f;
    }
    Ok(total)
}

/// ξ_3(n) from its closed form
/// `2 Σ_j C(2j, j) C(n, j)² (3j² + 2j + 1 − n − 2jn) / ((j+1)² (j+2) (n−j+1))`.
///
/// Individual terms are not integers; only the total is.
pub fn xi3_closed(n: usize) -> Result<Count> {
    let big = |x: usize| BigInt::from(x);
    let n_int = big(n);
    let mut total = Exact::zero();
    for j in 0..=n {
        let j_int = big(j);
        let numer = big(2)
            * binomial(2 * j, j).to_bigint()
            * binomial(n, j).pow(2).to_bigint()
            * (big(3) * &j_int * &j_int + big(2) * &j_int + 1 - &n_int - big(2) * &j_int * &n_int);
        let denom = big((j + 1) * (j + 1) * (j + 2) * (n - j + 1));
        total += &Exact::new(numer, denom)?;
    }
    total
        .to_count()
        .ok_or_else(|| Error::NonIntegerResult(total.to_string()))
}

/// ℶ_k(n): standard tableaux of order `n` with at most `k` rows.
pub fn beth_exact(n: usize, k: usize) -> Result<Count> {
    if n == 0 {
        return Ok(Count::one());
    }
    partitions(n, k).iter().map(syt_count_hook).sum()
}

/// `k ↦ #{π ∈ S_n : lds(π) = k}` by sweeping `S_n`.
pub fn lds_distribution_brute(n: usize, guards: &Guards) -> Result<BTreeMap<usize, Count>> {
    guard::check("lds_distribution", n, guards.brute_force)?;
    Ok(lds_histogram(n))
}

/// The same distribution as consecutive differences of [`xi_shapes`]; no guard.
pub fn lds_distribution_shapes(n: usize) -> Result<BTreeMap<usize, Count>> {
    let mut out = BTreeMap::new();
    if n == 0 {
        out.insert(0, Count::one());
        return Ok(out);
    }
    let mut previous = Count::zero();
    for k in 1..=n {
        let xi = xi_shapes(n, k)?;
        let exactly = xi
            .checked_sub(&previous)
            .ok_or_else(|| Error::Internal("ξ_k(n) decreased in k".to_string()))?;
        out.insert(k, exactly);
        previous = xi;
    }
    Ok(out)
}

fn histogram_of(perms: Permutations) -> BTreeMap<usize, u64> {
    let mut counts = BTreeMap::new();
    for pi in perms {
        *counts.entry(lds_length(pi.word())).or_insert(0u64) += 1;
    }
    counts
}

#[cfg(not(feature = "parallel"))]
fn lds_histogram(n: usize) -> BTreeMap<usize, Count> {
    histogram_of(Permutations::new(n))
        .into_iter()
        .map(|(k, c)| (k, Count::from(c)))
        .collect()
}

#[cfg(feature = "parallel")]
fn lds_histogram(n: usize) -> BTreeMap<usize, Count> {
    use rayon::prelude::*;
    let parts: alloc::vec::Vec<BTreeMap<usize, u64>> = if n == 0 {
        alloc::vec![histogram_of(Permutations::new(0))]
    } else {
        (1..=n)
            .into_par_iter()
            .map(|first| histogram_of(Permutations::starting_with(n, first)))
            .collect()
    };
    let mut out: BTreeMap<usize, Count> = BTreeMap::new();
    for part in parts {
        for (k, c) in part {
            *out.entry(k).or_default() += Count::from(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::catalan;

    fn g() -> Guards {
        Guards::default()
    }

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    #[test]
    fn brute_examples() {
        assert_eq!(xi_brute(4, 2, &g()).unwrap(), c(14));
        assert_eq!(xi_brute(4, 3, &g()).unwrap(), c(23));
        assert_eq!(xi_brute(5, 5, &g()).unwrap(), c(120));
        assert_eq!(xi_brute(5, 9, &g()).unwrap(), c(120));
        assert!(matches!(xi_brute(10, 2, &g()), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn shape_examples() {
        assert_eq!(xi_shapes(4, 2).unwrap(), c(14));
        assert_eq!(xi_shapes(1, 1).unwrap(), c(1));
        assert_eq!(xi_shapes(4, 4).unwrap(), c(24));
        assert_eq!(xi_shapes(0, 3).unwrap(), c(1));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(xi3_closed(2).unwrap(), c(2));
        assert_eq!(xi3_closed(3).unwrap(), c(6));
        assert_eq!(xi3_closed(4).unwrap(), c(23));
    }

    #[test]
    fn closed_form_terms_are_fractional() {
        // the n = 3 summands are -1/2, -3, 3, 13/2
        let n = 3usize;
        let terms: alloc::vec::Vec<Exact> = (0..=n)
            .map(|j| {
                let (ji, ni) = (j as i64, n as i64);
                let numer = 2
                    * binomial(2 * j, j).to_u64().unwrap() as i64
                    * (binomial(n, j).to_u64().unwrap() as i64).pow(2)
                    * (3 * ji * ji + 2 * ji + 1 - ni - 2 * ji * ni);
                let denom = (ji + 1) * (ji + 1) * (ji + 2) * (ni - ji + 1);
                Exact::new(numer.into(), denom.into()).unwrap()
            })
            .collect();
        let half = |x: i64| Exact::new(x.into(), 2.into()).unwrap();
        assert_eq!(terms, [half(-1), Exact::from_i64(-3), Exact::from_i64(3), half(13)]);
    }

    #[test]
    fn beth_examples() {
        assert_eq!(beth_exact(4, 2).unwrap(), c(6));
        assert_eq!(beth_exact(3, 1).unwrap(), c(1));
        assert_eq!(beth_exact(3, 3).unwrap(), c(4));
    }

    #[test]
    fn beth_full_is_involution_count() {
        // t(n) = t(n-1) + (n-1) t(n-2)
        let mut t = [1u64, 1];
        for n in 2..=14usize {
            let next = t[1] + (n as u64 - 1) * t[0];
            t = [t[1], next];
            assert_eq!(beth_exact(n, n).unwrap(), c(next), "n = {n}");
        }
    }

    #[test]
    fn distribution_examples() {
        let d = |pairs: &[(usize, u64)]| -> BTreeMap<usize, Count> {
            pairs.iter().map(|&(k, v)| (k, c(v))).collect()
        };
        assert_eq!(lds_distribution_brute(3, &g()).unwrap(), d(&[(1, 1), (2, 4), (3, 1)]));
        assert_eq!(lds_distribution_brute(1, &g()).unwrap(), d(&[(1, 1)]));
        assert_eq!(lds_distribution_shapes(4).unwrap(), d(&[(1, 1), (2, 13), (3, 9), (4, 1)]));
        for n in 1..=8 {
            let brute = lds_distribution_brute(n, &g()).unwrap();
            assert_eq!(brute, lds_distribution_shapes(n).unwrap());
            assert_eq!(brute.values().sum::<Count>(), factorial(n));
        }
    }

    #[test]
    fn brute_and_shapes_agree() {
        for n in 1..=8 {
            for k in 1..=n {
                assert_eq!(xi_brute(n, k, &g()).unwrap(), xi_shapes(n, k).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn monotone_in_k() {
        for n in 1..=20 {
            for k in 1..=n + 1 {
                let lo = xi_shapes(n, k).unwrap();
                let hi = xi_shapes(n, k + 1).unwrap();
                assert!(lo <= hi);
                assert_eq!(lo == hi, k >= n, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn catalan_and_closed_form_agree_with_shapes() {
        for n in 1..=12 {
            assert_eq!(xi_shapes(n, 2).unwrap(), catalan(n));
        }
        for n in 1..=20 {
            assert_eq!(xi3_closed(n).unwrap(), xi_shapes(n, 3).unwrap(), "n={n}");
        }
    }
}
