//! Exact combinatorics of permutationally ordered sets.
//!
//! Permutations, Young tableaux and two-line arrays; the Schensted and Knuth
//! correspondences; exact counts of permutations by longest decreasing
//! subsequence, of standard tableaux with bounded row count, and of
//! dimension-two posets up to isomorphism; the upper bounds on those counts;
//! and the symmetric-function and power-series identities that reproduce
//! them.
//!
//! The crate is `no_std` and needs only `alloc`. Counts are arbitrary
//! precision integers and bounds are exact rationals.

#![no_std]

extern crate alloc;

pub mod array;
pub mod bounds;
pub mod counting;
pub mod error;
pub mod genfunc;
pub mod guard;
pub mod num;
pub mod partition;
pub mod permutation;
pub mod poset;
pub mod rsk;
pub mod stats;
pub mod tableau;

pub use array::{array_to_matrix, matrix_to_array, MultiplicityMatrix, TwoLineArray};
pub use error::{Error, Result};
pub use guard::Guards;
pub use num::{binomial, factorial, Count, Exact};
pub use partition::{partitions, Partition};
pub use permutation::{Permutation, Permutations};
pub use tableau::{GeneralizedTableau, StandardTableau};
