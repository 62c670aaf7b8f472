//! Exact integers and rationals.
//!
//! [`Count`] holds nonnegative counts of combinatorial objects and [`Exact`]
//! holds rationals in lowest terms with a positive denominator. Nothing in
//! the crate touches floating point.

use alloc::string::ToString;
use core::cmp::Ordering;
use core::fmt;
use core::iter::{Product, Sum};
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Count(BigUint);

impl Count {
    pub fn zero() -> Self {
        Count(BigUint::zero())
    }

    pub fn one() -> Self {
        Count(BigUint::one())
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn checked_sub(&self, other: &Count) -> Option<Count> {
        if self.0 >= other.0 {
            Some(Count(&self.0 - &other.0))
        } else {
            None
        }
    }

    pub fn pow(&self, exp: u32) -> Count {
        Count(Pow::pow(&self.0, exp))
    }

    /// Signed view, for mixing with [`Exact`].
    pub fn to_bigint(&self) -> BigInt {
        BigInt::from_biguint(Sign::Plus, self.0.clone())
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl From<BigUint> for Count {
    fn from(v: BigUint) -> Self {
        Count(v)
    }
}

impl From<u64> for Count {
    fn from(v: u64) -> Self {
        Count(BigUint::from(v))
    }
}

impl From<usize> for Count {
    fn from(v: usize) -> Self {
        Count(BigUint::from(v))
    }
}

impl From<u32> for Count {
    fn from(v: u32) -> Self {
        Count(BigUint::from(v))
    }
}

impl Add for Count {
    type Output = Count;
    fn add(self, rhs: Count) -> Count {
        Count(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Count> for &'a Count {
    type Output = Count;
    fn add(self, rhs: &Count) -> Count {
        Count(&self.0 + &rhs.0)
    }
}

impl AddAssign for Count {
    fn add_assign(&mut self, rhs: Count) {
        self.0 += rhs.0;
    }
}

impl AddAssign<&Count> for Count {
    fn add_assign(&mut self, rhs: &Count) {
        self.0 += &rhs.0;
    }
}

impl Mul for Count {
    type Output = Count;
    fn mul(self, rhs: Count) -> Count {
        Count(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a Count> for &'a Count {
    type Output = Count;
    fn mul(self, rhs: &Count) -> Count {
        Count(&self.0 * &rhs.0)
    }
}

impl MulAssign<&Count> for Count {
    fn mul_assign(&mut self, rhs: &Count) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Count {
    fn sum<I: Iterator<Item = Count>>(iter: I) -> Count {
        iter.fold(Count::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a Count> for Count {
    fn sum<I: Iterator<Item = &'a Count>>(iter: I) -> Count {
        iter.fold(Count::zero(), |mut a, b| {
            a += b;
            a
        })
    }
}

impl Product for Count {
    fn product<I: Iterator<Item = Count>>(iter: I) -> Count {
        iter.fold(Count::one(), |a, b| a * b)
    }
}

/// Exact rational number in lowest terms, denominator always positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exact(BigRational);

impl Exact {
    /// Fails only on a zero denominator.
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::OutOfRange("zero denominator".to_string()));
        }
        Ok(Exact(BigRational::new(numer, denom)))
    }

    pub fn ratio(numer: &Count, denom: &Count) -> Result<Self> {
        Exact::new(numer.to_bigint(), denom.to_bigint())
    }

    pub fn from_integer(v: BigInt) -> Self {
        Exact(BigRational::from_integer(v))
    }

    pub fn from_i64(v: i64) -> Self {
        Exact::from_integer(BigInt::from(v))
    }

    pub fn zero() -> Self {
        Exact(BigRational::zero())
    }

    pub fn one() -> Self {
        Exact(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::OutOfRange("reciprocal of zero".to_string()));
        }
        Ok(Exact(self.0.recip()))
    }

    /// The value as a nonnegative integer, if it is one.
    pub fn to_count(&self) -> Option<Count> {
        if !self.is_integer() || self.0.is_negative() {
            return None;
        }
        self.numer().to_biguint().map(Count)
    }

    pub fn min(self, other: Exact) -> Exact {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    /// Nearest `f64`, for display only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl From<&Count> for Exact {
    fn from(c: &Count) -> Self {
        Exact::from_integer(c.to_bigint())
    }
}

impl From<Count> for Exact {
    fn from(c: Count) -> Self {
        Exact::from(&c)
    }
}

impl From<BigRational> for Exact {
    fn from(r: BigRational) -> Self {
        Exact(r)
    }
}

impl PartialEq<Count> for Exact {
    fn eq(&self, other: &Count) -> bool {
        self.0.is_integer() && self.0.numer().to_biguint().as_ref() == Some(&other.0)
    }
}

impl PartialOrd<Count> for Exact {
    fn partial_cmp(&self, other: &Count) -> Option<Ordering> {
        self.partial_cmp(&Exact::from(other))
    }
}

impl PartialEq<Exact> for Count {
    fn eq(&self, other: &Exact) -> bool {
        other == self
    }
}

impl PartialOrd<Exact> for Count {
    fn partial_cmp(&self, other: &Exact) -> Option<Ordering> {
        Exact::from(self).partial_cmp(other)
    }
}

macro_rules! exact_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Exact {
            type Output = Exact;
            fn $method(self, rhs: Exact) -> Exact {
                Exact($trait::$method(self.0, rhs.0))
            }
        }

        impl<'a> $trait<&'a Exact> for &'a Exact {
            type Output = Exact;
            fn $method(self, rhs: &Exact) -> Exact {
                Exact($trait::$method(&self.0, &rhs.0))
            }
        }
    };
}

exact_binop!(Add, add);
exact_binop!(Sub, sub);
exact_binop!(Mul, mul);

/// Panics on division by zero, like the primitive types.
impl Div for Exact {
    type Output = Exact;
    fn div(self, rhs: Exact) -> Exact {
        Exact(self.0 / rhs.0)
    }
}

impl<'a> Div<&'a Exact> for &'a Exact {
    type Output = Exact;
    fn div(self, rhs: &Exact) -> Exact {
        Exact(&self.0 / &rhs.0)
    }
}

impl Neg for Exact {
    type Output = Exact;
    fn neg(self) -> Exact {
        Exact(-self.0)
    }
}

impl AddAssign<&Exact> for Exact {
    fn add_assign(&mut self, rhs: &Exact) {
        self.0 += &rhs.0;
    }
}

impl Sum for Exact {
    fn sum<I: Iterator<Item = Exact>>(iter: I) -> Exact {
        iter.fold(Exact::zero(), |a, b| a + b)
    }
}

/// n!
pub fn factorial(n: usize) -> Count {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= i;
    }
    Count(acc)
}

/// C(n, k), zero when k > n.
pub fn binomial(n: usize, k: usize) -> Count {
    if k > n {
        return Count::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    // acc = C(n - k + i, i) after step i; each division is exact.
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    Count(acc)
}

/// base^exp as an exact integer.
pub fn power(base: usize, exp: usize) -> Count {
    let exp = u32::try_from(exp).expect("exponent fits in u32");
    Count(Pow::pow(BigUint::from(base), exp))
}

/// Exact quotient of two counts, or `None` when the division leaves a remainder.
pub fn exact_div(numer: &Count, denom: &Count) -> Option<Count> {
    if denom.is_zero() {
        return None;
    }
    let (q, r) = numer.0.div_rem(&denom.0);
    r.is_zero().then_some(Count(q))
}
