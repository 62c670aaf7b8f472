use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::det::{cofactor_det, Ring};
use crate::error::{Error, Result};
use crate::num::{factorial, Count, Exact};

/// Power series in one variable, known exactly through `x^degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Exact>,
}

impl TruncatedSeries {
    pub fn zero(degree: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Exact::zero(); degree + 1],
        }
    }

    pub fn one(degree: usize) -> Self {
        let mut s = Self::zero(degree);
        s.coeffs[0] = Exact::one();
        s
    }

    /// `c_0 + c_1 x + …`, truncated at `degree`; missing coefficients are zero
    /// and coefficients past `degree` are dropped.
    pub fn from_coeffs(coeffs: Vec<Exact>, degree: usize) -> Self {
        let mut s = Self::zero(degree);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Exact] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the truncation.
    pub fn coeff(&self, i: usize) -> Exact {
        self.coeffs.get(i).cloned().unwrap_or_else(Exact::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Exact::is_zero)
    }

    fn same_degree(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    fn sub_unchecked(&self, other: &Self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let d = self.degree();
        let mut out = Self::zero(d);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=d - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        out
    }

    /// Multiplicative inverse; exists exactly when the constant term is nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0].recip()?;
        let d = self.degree();
        let mut inv = Self::zero(d);
        inv.coeffs[0] = c0.clone();
        for m in 1..=d {
            let mut acc = Exact::zero();
            for i in 1..=m {
                acc += &(&self.coeffs[i] * &inv.coeffs[m - i]);
            }
            inv.coeffs[m] = -(&acc * &c0);
        }
        Ok(inv)
    }

    pub fn scale(&self, by: &Exact) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * by).collect(),
        }
    }
}

impl Ring for TruncatedSeries {
    fn zero_like(&self) -> Self {
        TruncatedSeries::zero(self.degree())
    }
    fn is_zero(&self) -> bool {
        TruncatedSeries::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self.add_unchecked(other)
    }
    fn sub(&self, other: &Self) -> Self {
        self.sub_unchecked(other)
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul_unchecked(other)
    }
}

pub fn series_add(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.same_degree(b)?;
    Ok(a.add_unchecked(b))
}

pub fn series_sub(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.same_degree(b)?;
    Ok(a.sub_unchecked(b))
}

pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.same_degree(b)?;
    Ok(a.mul_unchecked(b))
}

/// Largest size handled by cofactor expansion; larger matrices are eliminated.
const COFACTOR_LIMIT: usize = 6;

/// Determinant of a square matrix of series, all truncated at `degree`.
pub fn series_det(matrix: &[Vec<TruncatedSeries>], degree: usize) -> Result<TruncatedSeries> {
    let k = matrix.len();
    if matrix.iter().any(|row| row.len() != k) {
        return Err(Error::OutOfRange("matrix is not square".to_string()));
    }
    if let Some(bad) = matrix.iter().flatten().find(|s| s.degree() != degree) {
        return Err(Error::DegreeMismatch {
            left: degree,
            right: bad.degree(),
        });
    }
    if k <= COFACTOR_LIMIT {
        Ok(cofactor_det(matrix, &TruncatedSeries::one(degree)))
    } else {
        eliminate(matrix.to_vec(), degree)
    }
}

/// Gaussian elimination with unit pivots (nonzero constant term), which are
/// invertible in the truncated ring. A column without a unit is handed to
/// cofactor expansion for the remaining block.
pub(crate) fn eliminate(mut m: Vec<Vec<TruncatedSeries>>, degree: usize) -> Result<TruncatedSeries> {
    let k = m.len();
    let mut det = TruncatedSeries::one(degree);
    for col in 0..k {
        let Some(pivot_row) = (col..k).find(|&r| !m[r][col].coeffs[0].is_zero()) else {
            let rest: Vec<Vec<TruncatedSeries>> = m[col..].iter().map(|row| row[col..].to_vec()).collect();
            let tail = cofactor_det(&rest, &TruncatedSeries::one(degree));
            return Ok(det.mul_unchecked(&tail));
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = det.scale(&Exact::from_i64(-1));
        }
        let pivot = m[col][col].clone();
        let pivot_inv = pivot.inverse()?;
        det = det.mul_unchecked(&pivot);
        let (upper, lower) = m.split_at_mut(col + 1);
        let pivot_row = &upper[col];
        for row in lower {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].mul_unchecked(&pivot_inv);
            for (entry, above) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *entry = entry.sub_unchecked(&factor.mul_unchecked(above));
            }
        }
    }
    Ok(det)
}

/// `b_i = Σ_n x^(2n+i) / (n! (n+i)!)`, truncated at `degree`.
pub fn bessel_b(i: usize, degree: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(degree);
    let mut n = 0;
    while 2 * n + i <= degree {
        let denom = &factorial(n) * &factorial(n + i);
        s.coeffs[2 * n + i] = Exact::ratio(&Count::one(), &denom).expect("factorials are positive");
        n += 1;
    }
    s
}

/// `U_k = det(b_|i-j|)` for `1 <= i, j <= k`.
pub fn gessel_u(k: usize, degree: usize) -> Result<TruncatedSeries> {
    if k == 0 {
        return Err(Error::OutOfRange("U_k needs k >= 1".to_string()));
    }
    let b: Vec<TruncatedSeries> = (0..k).map(|i| bessel_b(i, degree)).collect();
    let matrix: Vec<Vec<TruncatedSeries>> = (0..k)
        .map(|i| (0..k).map(|j| b[i.abs_diff(j)].clone()).collect())
        .collect();
    series_det(&matrix, degree)
}

/// ξ_k(n) as `(n!)² [x^(2n)] U_k`.
pub fn xi_from_series(k: usize, n: usize) -> Result<Count> {
    let u = gessel_u(k, 2 * n)?;
    let f = factorial(n);
    let scaled = &u.coeff(2 * n) * &Exact::from(&f * &f);
    scaled
        .to_count()
        .ok_or_else(|| Error::NonIntegerResult(scaled.to_string()))
}

/// Coefficients as `(numerator, denominator)` pairs.
pub fn coefficient_pairs(s: &TruncatedSeries) -> Vec<(BigInt, BigInt)> {
    s.coeffs().iter().map(|c| (c.numer().clone(), c.denom().clone())).collect()
}
