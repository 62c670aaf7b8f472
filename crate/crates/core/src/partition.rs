use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts; the shape of a Young diagram.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    weight: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("part {} is zero", i + 1)));
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {} and {} increase",
                i + 1,
                i + 2
            )));
        }
        let weight = parts.iter().sum();
        Ok(Partition { parts, weight })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts, i.e. the number of cells.
    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Number of parts (rows of the diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition {
            parts,
            weight: self.weight,
        }
    }

    pub(crate) fn from_row_lengths(parts: Vec<usize>) -> Self {
        let weight = parts.iter().sum();
        Partition { parts, weight }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All partitions of `n` with at most `max_parts` parts, in reverse-lexicographic order.
///
/// Returns nothing for `n == 0` or `max_parts == 0`.
pub fn partitions(n: usize, max_parts: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if n == 0 || max_parts == 0 {
        return out;
    }
    let mut current = Vec::with_capacity(max_parts.min(n));
    extend(n, n, max_parts, &mut current, &mut out);
    out
}

fn extend(
    remaining: usize,
    largest: usize,
    slots: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::from_row_lengths(current.clone()));
        return;
    }
    if slots == 0 {
        return;
    }
    for part in (1..=largest.min(remaining)).rev() {
        // the remaining slots must be able to absorb what is left
        if part * slots < remaining {
            break;
        }
        current.push(part);
        extend(remaining - part, part, slots - 1, current, out);
        current.pop();
    }
}
