//! Schensted row insertion and the Robinson–Schensted–Knuth correspondences.
//!
//! The same bumping rule serves both cases: `x` bumps the least entry of the
//! row that is strictly greater than `x`, otherwise it is appended. With
//! distinct letters this is the permutation case; with repeated letters equal
//! values settle to the right of each other, keeping rows weakly increasing.
//!
//! Cells are reported 1-indexed as `(row, column)`.

use alloc::vec::Vec;

use crate::array::TwoLineArray;
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::tableau::{GeneralizedTableau, StandardTableau};

/// Row-inserts `x`, returning the 0-indexed cell that was created.
fn insert_in_place(rows: &mut Vec<Vec<usize>>, mut x: usize) -> (usize, usize) {
    for (r, row) in rows.iter_mut().enumerate() {
        let slot = row.partition_point(|&y| y <= x);
        if slot == row.len() {
            row.push(x);
            return (r, slot);
        }
        x = core::mem::replace(&mut row[slot], x);
    }
    rows.push(alloc::vec![x]);
    (rows.len() - 1, 0)
}

/// Removes the last cell of row `r` and reverse-bumps it out through the
/// rows above, returning the letter that leaves the first row.
fn uninsert_in_place(rows: &mut Vec<Vec<usize>>, r: usize) -> usize {
    let mut y = rows[r].pop().expect("un-insertion from an empty row");
    if rows[r].is_empty() {
        rows.truncate(r);
    }
    for row in rows[..r].iter_mut().rev() {
        // rightmost entry strictly less than y; it exists because columns increase
        let slot = row.partition_point(|&z| z < y) - 1;
        y = core::mem::replace(&mut row[slot], y);
    }
    y
}

/// `T ← x`: inserts `x` and reports where the new cell landed.
pub fn schensted_insert(tableau: &GeneralizedTableau, x: usize) -> (GeneralizedTableau, (usize, usize)) {
    let mut rows = tableau.rows().to_vec();
    let (r, c) = insert_in_place(&mut rows, x);
    (GeneralizedTableau::from_rows_unchecked(rows), (r + 1, c + 1))
}

/// The insertion tableau `P` and recording tableau `Q` of a permutation.
pub fn rsk_forward(perm: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (i, &x) in perm.word().iter().enumerate() {
        let (r, _) = insert_in_place(&mut p, x);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(i + 1);
    }
    (
        StandardTableau::from_rows_unchecked(p),
        StandardTableau::from_rows_unchecked(q),
    )
}

/// Inverse of [`rsk_forward`]; any same-shape pair of standard tableaux is accepted.
pub fn rsk_inverse(p: &StandardTableau, q: &StandardTableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch);
    }
    let n = p.size();
    let mut p_rows = p.rows().to_vec();
    let mut q_rows = q.rows().to_vec();
    let mut word = alloc::vec![0; n];
    for i in (1..=n).rev() {
        // i is the largest entry left in Q, so it sits at the end of its row
        let r = q_rows
            .iter()
            .position(|row| row.last() == Some(&i))
            .ok_or(Error::NotARecordingTableau)?;
        q_rows[r].pop();
        if q_rows[r].is_empty() {
            q_rows.truncate(r);
        }
        word[i - 1] = uninsert_in_place(&mut p_rows, r);
    }
    Permutation::new(word)
}

/// Knuth's generalization: insert the bottom line, record the top line.
///
/// The array type guarantees lexicographic order, so this cannot fail.
pub fn knuth_forward(array: &TwoLineArray) -> (GeneralizedTableau, GeneralizedTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for &(u, v) in array.pairs() {
        let (r, _) = insert_in_place(&mut p, v);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(u);
    }
    (
        GeneralizedTableau::from_rows_unchecked(p),
        GeneralizedTableau::from_rows_unchecked(q),
    )
}

/// Inverse of [`knuth_forward`].
///
/// Among equal entries of `Q` the rightmost cell is un-created first, since
/// equal top letters were recorded left to right.
pub fn knuth_inverse(p: &GeneralizedTableau, q: &GeneralizedTableau) -> Result<TwoLineArray> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch);
    }
    let mut p_rows = p.rows().to_vec();
    let mut q_rows = q.rows().to_vec();
    let mut pairs = Vec::with_capacity(p.size());
    while !q_rows.is_empty() {
        let u = q_rows.iter().flatten().copied().max().expect("non-empty");
        // rightmost cell holding u; ties in column go to the lowest row
        let (r, c) = q_rows
            .iter()
            .enumerate()
            .filter_map(|(r, row)| row.iter().rposition(|&x| x == u).map(|c| (r, c)))
            .max_by_key(|&(r, c)| (c, r))
            .expect("u occurs in Q");
        let is_corner = c + 1 == q_rows[r].len() && q_rows.get(r + 1).is_none_or(|below| below.len() <= c);
        if !is_corner {
            return Err(Error::NotARecordingTableau);
        }
        q_rows[r].pop();
        if q_rows[r].is_empty() {
            q_rows.truncate(r);
        }
        let v = uninsert_in_place(&mut p_rows, r);
        pairs.push((u, v));
    }
    pairs.reverse();
    TwoLineArray::new(pairs).map_err(|_| Error::NotARecordingTableau)
}

/// A permutation as the array `(1, π(1)), …, (n, π(n))`.
pub fn perm_to_array(perm: &Permutation) -> TwoLineArray {
    TwoLineArray::from_pairs_unchecked(
        perm.word().iter().enumerate().map(|(i, &x)| (i + 1, x)).collect(),
    )
}
