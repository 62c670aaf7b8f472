//! Young tableaux: generalized (semistandard) and standard fillings of a shape.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Positive entries, rows weakly increasing, columns strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GeneralizedTableau {
    rows: Vec<Vec<usize>>,
    shape: Partition,
}

/// A generalized tableau whose entries are exactly `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct StandardTableau(GeneralizedTableau);

fn check_generalized(rows: &[Vec<usize>]) -> Result<()> {
    for (r, row) in rows.iter().enumerate() {
        if row.is_empty() {
            return Err(Error::InvalidTableau(format!("row {} is empty", r + 1)));
        }
        if r > 0 && row.len() > rows[r - 1].len() {
            return Err(Error::InvalidTableau(format!(
                "row {} is longer than the row above",
                r + 1
            )));
        }
        if let Some(c) = row.iter().position(|&x| x == 0) {
            return Err(Error::InvalidTableau(format!(
                "entry ({}, {}) is not positive",
                r + 1,
                c + 1
            )));
        }
        if let Some(c) = row.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::InvalidTableau(format!(
                "row {} decreases at column {}",
                r + 1,
                c + 2
            )));
        }
        if r > 0 {
            if let Some(c) = row.iter().zip(&rows[r - 1]).position(|(b, a)| a >= b) {
                return Err(Error::InvalidTableau(format!(
                    "column {} does not increase at row {}",
                    c + 1,
                    r + 1
                )));
            }
        }
    }
    Ok(())
}

impl GeneralizedTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        check_generalized(&rows)?;
        Ok(Self::from_rows_unchecked(rows))
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        let shape = Partition::from_row_lengths(rows.iter().map(Vec::len).collect());
        GeneralizedTableau { rows, shape }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<usize>> {
        self.rows
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.shape.weight()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Entry at a 1-indexed `(row, column)` cell.
    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?).copied()
    }

    /// All entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// Re-checks every invariant; used after mutation in tests.
    pub fn validate(&self) -> Result<()> {
        check_generalized(&self.rows)
    }
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        GeneralizedTableau::new(rows)?.try_into()
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        StandardTableau(GeneralizedTableau::from_rows_unchecked(rows))
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        self.0.rows()
    }

    pub fn shape(&self) -> &Partition {
        self.0.shape()
    }

    /// The order `n`: number of cells, also the largest entry.
    pub fn size(&self) -> usize {
        self.0.size()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.0.get(row, col)
    }

    pub fn as_generalized(&self) -> &GeneralizedTableau {
        &self.0
    }

    pub fn into_generalized(self) -> GeneralizedTableau {
        self.0
    }

    pub fn validate(&self) -> Result<()> {
        self.0.validate()?;
        check_standard(&self.0)
    }
}

fn check_standard(t: &GeneralizedTableau) -> Result<()> {
    let n = t.size();
    let mut seen = vec![false; n + 1];
    for x in t.entries() {
        if x > n || seen[x] {
            return Err(Error::InvalidTableau(format!(
                "entries are not exactly 1..{n}"
            )));
        }
        seen[x] = true;
    }
    Ok(())
}

impl TryFrom<GeneralizedTableau> for StandardTableau {
    type Error = Error;

    fn try_from(t: GeneralizedTableau) -> Result<Self> {
        check_standard(&t)?;
        Ok(StandardTableau(t))
    }
}

impl From<StandardTableau> for GeneralizedTableau {
    fn from(t: StandardTableau) -> Self {
        t.0
    }
}

impl fmt::Display for GeneralizedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            for (c, x) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}
