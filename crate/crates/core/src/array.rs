//! Two-line arrays of type α(N) and their multiplicity matrices.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Pairs `(u, v)` of positive integers in weakly increasing lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TwoLineArray {
    pairs: Vec<(usize, usize)>,
}

impl TwoLineArray {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(i) = pairs.iter().position(|&(u, v)| u == 0 || v == 0) {
            return Err(Error::OutOfRange(format!(
                "pair {} has a non-positive entry",
                i + 1
            )));
        }
        if let Some(i) = pairs.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::NotLexSorted { position: i + 2 });
        }
        Ok(TwoLineArray { pairs })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub(crate) fn from_pairs_unchecked(pairs: Vec<(usize, usize)>) -> Self {
        TwoLineArray { pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn top_line(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs.iter().map(|p| p.0)
    }

    pub fn bottom_line(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs.iter().map(|p| p.1)
    }

    /// Largest `u` and largest `v`, i.e. the smallest matrix that can hold the array.
    pub fn min_dims(&self) -> (usize, usize) {
        let rows = self.top_line().max().unwrap_or(0);
        let cols = self.bottom_line().max().unwrap_or(0);
        (rows, cols)
    }
}

/// An `rows × cols` grid of nonnegative multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiplicityMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<usize>,
}

impl MultiplicityMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MultiplicityMatrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    /// Builds from nested rows, which must all have the same length.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::OutOfRange("matrix rows differ in length".into()));
        }
        Ok(MultiplicityMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Entry at a 1-indexed `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        if self.cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        self.entries.chunks(self.cols).map(<[usize]>::to_vec).collect()
    }

    /// Sum of all entries, the length of the corresponding array.
    pub fn total(&self) -> usize {
        self.entries.iter().sum()
    }
}

/// Entry `(i, j)` counts the occurrences of the pair `(i, j)` in the array.
pub fn array_to_matrix(array: &TwoLineArray, rows: usize, cols: usize) -> Result<MultiplicityMatrix> {
    let mut m = MultiplicityMatrix::zeros(rows, cols);
    for &(u, v) in array.pairs() {
        if u > rows || v > cols {
            return Err(Error::DimsTooSmall { rows, cols, u, v });
        }
        m.entries[(u - 1) * cols + (v - 1)] += 1;
    }
    Ok(m)
}

/// Expands each entry `(i, j)` into that many copies of the pair, in lex order.
pub fn matrix_to_array(matrix: &MultiplicityMatrix) -> TwoLineArray {
    let mut pairs = Vec::with_capacity(matrix.total());
    for i in 1..=matrix.rows {
        for j in 1..=matrix.cols {
            pairs.extend(core::iter::repeat_n((i, j), matrix.get(i, j)));
        }
    }
    TwoLineArray::from_pairs_unchecked(pairs)
}
