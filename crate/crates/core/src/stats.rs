//! Permutation and tableau statistics.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::guard::{self, Guards};
use crate::num::{binomial, exact_div, factorial, Count};
use crate::partition::Partition;
use crate::permutation::Permutation;
use crate::tableau::StandardTableau;

/// Longest strictly decreasing subsequence of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lds {
    pub length: usize,
    /// 1-indexed positions `i_1 < … < i_k` with decreasing values; the
    /// lexicographically smallest among all longest ones.
    pub witness: Vec<usize>,
}

/// Length only, by patience sorting in `O(n log n)`.
pub fn lds_length(word: &[usize]) -> usize {
    // tails[l] is the largest possible last letter of a decreasing run of length l + 1
    let mut tails: Vec<usize> = Vec::with_capacity(word.len());
    for &x in word {
        let l = tails.partition_point(|&t| t > x);
        if l == tails.len() {
            tails.push(x);
        } else {
            tails[l] = x;
        }
    }
    tails.len()
}

/// Length and witness. The witness comes from a quadratic dynamic program
/// that is checked against [`lds_length`] in debug builds.
pub fn lds(perm: &Permutation) -> Lds {
    let word = perm.word();
    let n = word.len();
    // longest[i]: longest decreasing subsequence starting at i
    let mut longest = vec![1usize; n];
    for i in (0..n).rev() {
        for j in i + 1..n {
            if word[j] < word[i] {
                longest[i] = longest[i].max(longest[j] + 1);
            }
        }
    }
    let length = longest.iter().copied().max().unwrap_or(0);
    debug_assert_eq!(length, lds_length(word));

    // greedy choice of the earliest admissible position gives the lex-smallest witness
    let mut witness = Vec::with_capacity(length);
    let mut need = length;
    let mut last: Option<usize> = None;
    for i in 0..n {
        if need == 0 {
            break;
        }
        if longest[i] == need && last.is_none_or(|l| word[i] < word[l]) {
            witness.push(i + 1);
            last = Some(i);
            need -= 1;
        }
    }
    debug_assert!(witness.windows(2).all(|w| w[0] < w[1] && perm.at(w[0]) > perm.at(w[1])));
    debug_assert_eq!(witness.len(), length);
    Lds { length, witness }
}

/// Whether the permutation has a decreasing subsequence of length `k`.
pub fn is_k_divisible(perm: &Permutation, k: usize) -> bool {
    lds_length(perm.word()) >= k
}

/// Hook length of every cell, row-major.
pub fn hook_lengths(shape: &Partition) -> Vec<usize> {
    let cols = shape.conjugate();
    let mut hooks = Vec::with_capacity(shape.weight());
    for (r, &len) in shape.parts().iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = cols.parts()[c] - r - 1;
            hooks.push(arm + leg + 1);
        }
    }
    hooks
}

/// Number of standard tableaux of the shape, `n! / ∏ hooks`.
pub fn syt_count_hook(shape: &Partition) -> Result<Count> {
    let product: Count = hook_lengths(shape).into_iter().map(Count::from).product();
    exact_div(&factorial(shape.weight()), &product).ok_or_else(|| {
        Error::Internal(format!("hook product does not divide n! for shape {shape}"))
    })
}

/// Every standard tableau of the shape, by placing `1..=n` one at a time
/// into an outer corner. Returned in sorted order.
pub fn syt_enumerate(shape: &Partition, guards: &Guards) -> Result<Vec<StandardTableau>> {
    guard::check("syt_enumerate", shape.weight(), guards.syt_enumerate)?;
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();
    place(shape.parts(), 1, &mut rows, &mut out);
    out.sort();
    Ok(out)
}

fn place(shape: &[usize], next: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<StandardTableau>) {
    if next > shape.iter().sum::<usize>() {
        out.push(StandardTableau::from_rows_unchecked(rows.clone()));
        return;
    }
    for r in 0..shape.len() {
        let len = rows[r].len();
        let fits = len < shape[r] && (r == 0 || rows[r - 1].len() > len);
        if fits {
            rows[r].push(next);
            place(shape, next + 1, rows, out);
            rows[r].pop();
        }
    }
}

/// `(2n)! / (n! (n+1)!)`.
pub fn catalan(n: usize) -> Count {
    exact_div(&binomial(2 * n, n), &Count::from(n + 1)).expect("C(2n, n) is divisible by n + 1")
}
