use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation `x_1 x_2 ... x_n`.
///
/// Positions and values are both 1-indexed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Validates that `word` contains each of `1..=word.len()` exactly once.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n || seen[x] {
                return Err(Error::NotABijection { n });
            }
            seen[x] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    pub fn reversal(n: usize) -> Self {
        Permutation {
            word: (1..=n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn into_word(self) -> Vec<usize> {
        self.word
    }

    /// `pi(i)` for a 1-indexed position.
    pub fn at(&self, position: usize) -> usize {
        self.word[position - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.word.len()];
        for (i, &x) in self.word.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation { word: inv }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Permutation {
            word: other.word.iter().map(|&i| self.word[i - 1]).collect(),
        })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Rearranges `word` into its lexicographic successor; `false` once it is the last.
pub(crate) fn next_permutation(word: &mut [usize]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let mut i = word.len() - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = word.len() - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// Lexicographic enumeration of `S_n`, or of the slice of it with a fixed first letter.
#[derive(Debug, Clone)]
pub struct Permutations {
    word: Vec<usize>,
    first: Option<usize>,
    done: bool,
}

impl Permutations {
    /// All `n!` permutations, starting from the identity. `S_0` yields the empty word once.
    pub fn new(n: usize) -> Self {
        Permutations {
            word: (1..=n).collect(),
            first: None,
            done: false,
        }
    }

    /// The `(n-1)!` permutations whose first letter is `first`.
    pub fn starting_with(n: usize, first: usize) -> Self {
        assert!((1..=n).contains(&first), "first letter out of range");
        let mut word = Vec::with_capacity(n);
        word.push(first);
        word.extend((1..=n).filter(|&x| x != first));
        Permutations {
            word,
            first: Some(first),
            done: false,
        }
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let current = Permutation {
            word: self.word.clone(),
        };
        if !next_permutation(&mut self.word) {
            self.done = true;
        } else if let Some(first) = self.first {
            self.done = self.word[0] != first;
        }
        Some(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::factorial;

    #[test]
    fn validates_words() {
        assert_eq!(Permutation::new(vec![2, 3, 1]).unwrap().len(), 3);
        assert_eq!(Permutation::new(vec![1]).unwrap().len(), 1);
        assert_eq!(
            Permutation::new(vec![1, 1, 2]),
            Err(Error::NotABijection { n: 3 })
        );
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert!(Permutation::new(vec![]).unwrap().is_empty());
    }

    #[test]
    fn accepts_exactly_the_bijections() {
        // Every word over 1..=n of length n, checked against a counting oracle.
        for n in 1..=6usize {
            let total = n.pow(n as u32);
            let mut accepted = 0u64;
            for code in 0..total {
                let mut c = code;
                let word: Vec<usize> = (0..n)
                    .map(|_| {
                        let d = c % n;
                        c /= n;
                        d + 1
                    })
                    .collect();
                let mut sorted = word.clone();
                sorted.sort_unstable();
                let is_bijection = sorted.iter().copied().eq(1..=n);
                let ok = Permutation::new(word).is_ok();
                assert_eq!(ok, is_bijection);
                accepted += u64::from(ok);
            }
            assert_eq!(factorial(n).to_u64(), Some(accepted));
        }
    }

    #[test]
    fn inverse_and_compose() {
        let p = Permutation::new(vec![2, 3, 1]).unwrap();
        assert_eq!(p.inverse().word(), &[3, 1, 2]);
        assert_eq!(p.compose(&p.inverse()).unwrap(), Permutation::identity(3));
        assert_eq!(p.at(1), 2);
    }

    #[test]
    fn enumerates_symmetric_group() {
        let all: Vec<_> = Permutations::new(4).collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0], Permutation::identity(4));
        assert_eq!(all[23], Permutation::reversal(4));
        assert_eq!(Permutations::new(0).count(), 1);
        assert_eq!(Permutations::new(1).count(), 1);

        let sliced: usize = (1..=5).map(|f| Permutations::starting_with(5, f).count()).sum();
        assert_eq!(sliced, 120);
        assert!(Permutations::starting_with(5, 3).all(|p| p.at(1) == 3));
    }
}
