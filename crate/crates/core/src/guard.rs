use crate::error::{Error, Result};

/// Size limits for the exhaustive (factorial- or exponential-time) oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Largest shape weight `syt_enumerate` will backtrack over.
    pub syt_enumerate: usize,
    /// Largest poset `canonical_form` will canonicalize.
    pub canonical_form: usize,
    /// Largest `n` for the isomorphism-class census.
    pub epsilon: usize,
    /// Largest `n` for sweeps over all of `S_n`.
    pub brute_force: usize,
    /// Largest `|λ|` for squarefree Schur coefficient extraction.
    pub schur: usize,
    /// Largest `n` for the `R_k` coefficient extraction.
    pub rk: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            syt_enumerate: 12,
            canonical_form: 9,
            epsilon: 7,
            brute_force: 9,
            schur: 6,
            rk: 4,
        }
    }
}

impl Guards {
    /// Every limit set to `limit`.
    pub fn uniform(limit: usize) -> Self {
        Guards {
            syt_enumerate: limit,
            canonical_form: limit,
            epsilon: limit,
            brute_force: limit,
            schur: limit,
            rk: limit,
        }
    }
}

pub(crate) fn check(what: &'static str, requested: usize, limit: usize) -> Result<()> {
    if requested > limit {
        Err(Error::GuardExceeded {
            what,
            requested,
            limit,
        })
    } else {
        Ok(())
    }
}
