//! Determinants over commutative rings without division.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

/// The ring operations a determinant needs. Values carry their own ambient
/// ring (truncation degree, variable count), hence `zero_like`.
pub(crate) trait Ring: Clone {
    fn zero_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

/// Laplace expansion along successive rows, memoised on the set of columns
/// already used, so `O(k 2^k)` ring multiplications instead of `k!`.
///
/// `one` is returned for the empty matrix.
pub(crate) fn cofactor_det<R: Ring>(matrix: &[Vec<R>], one: &R) -> R {
    let k = matrix.len();
    assert!(k < 64, "matrix too large for cofactor expansion");
    assert!(matrix.iter().all(|row| row.len() == k), "matrix is not square");
    let mut memo: BTreeMap<u64, R> = BTreeMap::new();
    minor(matrix, 0, 0, one, &mut memo)
}

/// Determinant of rows `row..` restricted to the columns not in `used`.
fn minor<R: Ring>(matrix: &[Vec<R>], row: usize, used: u64, one: &R, memo: &mut BTreeMap<u64, R>) -> R {
    let k = matrix.len();
    if row == k {
        return one.clone();
    }
    if let Some(v) = memo.get(&used) {
        return v.clone();
    }
    let mut acc = one.zero_like();
    let mut free_before = 0;
    for col in 0..k {
        if used & (1 << col) != 0 {
            continue;
        }
        let entry = &matrix[row][col];
        if !entry.is_zero() {
            let sub = minor(matrix, row + 1, used | (1 << col), one, memo);
            if !sub.is_zero() {
                let term = entry.mul(&sub);
                acc = if free_before % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
        }
        free_before += 1;
    }
    memo.insert(used, acc.clone());
    acc
}
