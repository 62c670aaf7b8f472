use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::det::{cofactor_det, Ring};
use crate::error::{Error, Result};
use crate::guard::{self, Guards};
use crate::num::{Count, Exact};
use crate::partition::{partitions, Partition};

/// Polynomial in `nvars` variables with exact rational coefficients.
///
/// Terms are keyed by exponent vector; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Exact>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(Exact::one(), nvars)
    }

    pub fn constant(c: Exact, nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable `x_i`, 1-indexed.
    pub fn variable(i: usize, nvars: usize) -> Result<Self> {
        if i == 0 || i > nvars {
            return Err(Error::OutOfRange(alloc::format!("variable {i} of {nvars}")));
        }
        let mut exps = vec![0; nvars];
        exps[i - 1] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(exps, Exact::one());
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Exact> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the monomial with the given exponents.
    pub fn coeff(&self, exponents: &[u32]) -> Exact {
        self.terms.get(exponents).cloned().unwrap_or_else(Exact::zero)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Exact) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn same_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::SizeMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        Ok(Ring::add(self, other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        Ok(Ring::sub(self, other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        Ok(Ring::mul(self, other))
    }

    /// Exchanges `x_i` and `x_j` (1-indexed).
    pub fn swap_variables(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (exps, c) in &self.terms {
            let mut e = exps.clone();
            e.swap(i - 1, j - 1);
            out.add_term(e, c.clone());
        }
        out
    }

    /// Re-homes the variables at positions `offset + 1 ..` of a ring with `total` variables.
    pub fn embed(&self, offset: usize, total: usize) -> Result<Self> {
        if offset + self.nvars > total {
            return Err(Error::OutOfRange("embedding does not fit".into()));
        }
        let mut out = Self::zero(total);
        for (exps, c) in &self.terms {
            let mut e = vec![0; total];
            e[offset..offset + self.nvars].copy_from_slice(exps);
            out.add_term(e, c.clone());
        }
        Ok(out)
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.nvars)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

/// `h_d`: the sum of all monomials of degree `d` in `nvars` variables.
/// `h_0 = 1` and `h_d = 0` for negative `d`.
pub fn complete_homogeneous(degree: i64, nvars: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(nvars);
    if degree < 0 {
        return out;
    }
    if nvars == 0 {
        return if degree == 0 { MultiPoly::one(0) } else { out };
    }
    let mut exps = vec![0u32; nvars];
    fill_monomials(degree as u32, 0, &mut exps, &mut out);
    out
}

fn fill_monomials(remaining: u32, var: usize, exps: &mut Vec<u32>, out: &mut MultiPoly) {
    if var + 1 == exps.len() {
        exps[var] = remaining;
        out.add_term(exps.clone(), Exact::one());
        return;
    }
    for e in (0..=remaining).rev() {
        exps[var] = e;
        fill_monomials(remaining - e, var + 1, exps, out);
    }
    exps[var] = 0;
}

/// `det(h_{λ_i + j - i})` over the given parts, which may include trailing zeros.
pub(crate) fn jacobi_trudi(parts: &[usize], nvars: usize) -> MultiPoly {
    let k = parts.len();
    let mut cache: BTreeMap<i64, MultiPoly> = BTreeMap::new();
    let matrix: Vec<Vec<MultiPoly>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let d = parts[i] as i64 + j as i64 - i as i64;
                    cache
                        .entry(d)
                        .or_insert_with(|| complete_homogeneous(d, nvars))
                        .clone()
                })
                .collect()
        })
        .collect();
    cofactor_det(&matrix, &MultiPoly::one(nvars))
}

/// Schur polynomial `s_λ(x_1, …, x_nvars)` by the Jacobi–Trudi determinant.
///
/// Vanishes when `λ` has more parts than there are variables.
pub fn schur(shape: &Partition, nvars: usize) -> MultiPoly {
    jacobi_trudi(shape.parts(), nvars)
}

/// Standard tableaux of shape `λ` counted as the coefficient of
/// `x_1 x_2 … x_n` in `s_λ(x_1, …, x_n)`.
pub fn syt_count_schur(shape: &Partition, guards: &Guards) -> Result<Count> {
    let n = shape.weight();
    guard::check("syt_count_schur", n, guards.schur)?;
    let c = schur(shape, n).coeff(&vec![1; n]);
    c.to_count()
        .ok_or_else(|| Error::NonIntegerResult(alloc::string::ToString::to_string(&c)))
}

/// Coefficient of `x_1…x_n y_1…y_n` in `Σ s_λ(x) s_λ(y)` over `λ ⊢ n` with
/// at most `k` parts; only this bidegree contributes.
pub fn rk_coefficient(k: usize, n: usize, guards: &Guards) -> Result<Count> {
    guard::check("rk_coefficient", n, guards.rk)?;
    let mut total = MultiPoly::zero(2 * n);
    for lambda in partitions(n, k) {
        let s = schur(&lambda, n);
        let product = s.embed(0, 2 * n)?.try_mul(&s.embed(n, 2 * n)?)?;
        total = total.try_add(&product)?;
    }
    let c = if n == 0 {
        Exact::one()
    } else {
        total.coeff(&vec![1; 2 * n])
    };
    c.to_count()
        .ok_or_else(|| Error::NonIntegerResult(alloc::string::ToString::to_string(&c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::xi_shapes;
    use crate::stats::syt_count_hook;

    fn shape(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn int(v: i64) -> Exact {
        Exact::from_i64(v)
    }

    #[test]
    fn homogeneous_examples() {
        let h2 = complete_homogeneous(2, 2);
        assert_eq!(h2.terms().len(), 3);
        for e in [[2, 0], [1, 1], [0, 2]] {
            assert_eq!(h2.coeff(&e), int(1));
        }
        assert_eq!(complete_homogeneous(0, 4), MultiPoly::one(4));
        let h1 = complete_homogeneous(1, 3);
        let sum = (1..=3)
            .map(|i| MultiPoly::variable(i, 3).unwrap())
            .fold(MultiPoly::zero(3), |a, b| a.try_add(&b).unwrap());
        assert_eq!(h1, sum);
        assert!(complete_homogeneous(-1, 3).is_zero());
        // C(d + V - 1, V - 1) monomials
        assert_eq!(complete_homogeneous(6, 6).terms().len(), 462);
    }

    #[test]
    fn schur_examples() {
        let s21 = schur(&shape(&[2, 1]), 3);
        assert_eq!(s21.coeff(&[1, 1, 1]), int(2));
        assert_eq!(s21.coeff(&[2, 1, 0]), int(1));
        assert_eq!(schur(&shape(&[4]), 3), complete_homogeneous(4, 3));
        let s11 = schur(&shape(&[1, 1]), 2);
        let x1x2 = MultiPoly::variable(1, 2).unwrap().try_mul(&MultiPoly::variable(2, 2).unwrap()).unwrap();
        assert_eq!(s11, x1x2);
        assert!(schur(&shape(&[1, 1, 1]), 2).is_zero());
    }

    #[test]
    fn trailing_zero_parts_change_nothing() {
        for parts in [vec![2, 1], vec![3], vec![2, 2, 1]] {
            let mut padded = parts.clone();
            padded.extend([0, 0]);
            assert_eq!(jacobi_trudi(&parts, 3), jacobi_trudi(&padded, 3));
        }
    }

    #[test]
    fn schur_is_symmetric() {
        for n in 1..=4 {
            for lambda in partitions(n, n) {
                for v in 1..=4usize {
                    let s = schur(&lambda, v);
                    for i in 1..=v {
                        for j in i + 1..=v {
                            assert_eq!(s.swap_variables(i, j), s, "{lambda} in {v} vars");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn squarefree_coefficient_counts_tableaux() {
        let g = Guards::default();
        assert_eq!(syt_count_schur(&shape(&[2, 1]), &g).unwrap(), Count::from(2u64));
        assert_eq!(syt_count_schur(&shape(&[5]), &g).unwrap(), Count::one());
        assert_eq!(syt_count_schur(&shape(&[2, 2]), &g).unwrap(), Count::from(2u64));
        for n in 1..=6 {
            for lambda in partitions(n, n) {
                assert_eq!(syt_count_schur(&lambda, &g).unwrap(), syt_count_hook(&lambda).unwrap());
            }
        }
        assert!(matches!(syt_count_schur(&shape(&[7]), &g), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn rk_examples() {
        let g = Guards::default();
        assert_eq!(rk_coefficient(2, 2, &g).unwrap(), Count::from(2u64));
        for n in 1..=4 {
            assert_eq!(rk_coefficient(1, n, &g).unwrap(), Count::one());
        }
        assert_eq!(rk_coefficient(3, 3, &g).unwrap(), Count::from(6u64));
        for n in 1..=4 {
            for k in 1..=n {
                assert_eq!(rk_coefficient(k, n, &g).unwrap(), xi_shapes(n, k).unwrap());
            }
        }
        assert!(matches!(rk_coefficient(2, 5, &g), Err(Error::GuardExceeded { .. })));
    }
}
