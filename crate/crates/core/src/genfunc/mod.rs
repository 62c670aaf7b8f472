//! Generating functions: truncated power series for the Bessel-type
//! determinant `U_k`, whose coefficients are ξ_k(n) / (n!)², and
//! multivariate polynomials for complete homogeneous and Schur functions.

mod det;
mod poly;
mod series;

pub use poly::{complete_homogeneous, rk_coefficient, schur, syt_count_schur, MultiPoly};
pub use series::{
    bessel_b, coefficient_pairs, gessel_u, series_add, series_det, series_mul, series_sub, xi_from_series,
    TruncatedSeries,
};
