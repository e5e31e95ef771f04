//! Truncated formal power series with exact integer coefficients.
//!
//! A [`PowerSeries`] of order `N` stores the coefficients of `x^0 ..= x^N`.
//! Binary operations on series of different orders truncate to the smaller
//! order. Every operation returns a fresh value.
//!
//! The coefficient type is generic. [`crate::Series`] (unbounded
//! [`BigUint`](num_bigint::BigUint)) is what the rest of the crate uses;
//! fixed-width types work as long as no intermediate value overflows. For the
//! corner series the largest intermediate is the `a(x)^4` numerator, which
//! stays below `u64::MAX` through degree 100 (checked in the tests here).

use std::ops::{Add, Mul};

use num_integer::Integer;
use num_traits::FromPrimitive;
use thiserror::Error;

/// Scalar types usable as series coefficients.
pub trait Coefficient: Integer + FromPrimitive + Clone + for<'a> std::ops::AddAssign<&'a Self> {}

impl<T> Coefficient for T where T: Integer + FromPrimitive + Clone + for<'a> std::ops::AddAssign<&'a T> {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("coefficient at index {index} is not divisible by the divisor")]
    NonDivisible { index: usize },
    #[error("divisor must be positive")]
    ZeroDivisor,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> PowerSeries<T> {
    /// The zero series truncated at `order`.
    pub fn zero(order: usize) -> Self {
        PowerSeries { coeffs: vec![T::zero(); order + 1] }
    }

    /// The constant series `1` truncated at `order`.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = T::one();
        s
    }

    /// Builds a series from explicit coefficients; the order is `coeffs.len() - 1`.
    ///
    /// Panics if `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a power series needs at least the constant term");
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^index`, or `None` beyond the truncation order.
    pub fn coeff(&self, index: usize) -> Option<&T> {
        self.coeffs.get(index)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Re-truncates to `order`, which must not exceed the current order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        PowerSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    /// `f(x^k)`, truncated to the order of `f`.
    ///
    /// Panics if `k == 0`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, c) in self.coeffs.iter().enumerate() {
            let target = i * k;
            if target > order {
                break;
            }
            out.coeffs[target] = c.clone();
        }
        out
    }

    /// Divides every coefficient by `d`, failing on the first index where the
    /// division is not exact.
    pub fn exact_div(&self, d: &T) -> Result<Self, SeriesError> {
        if d.is_zero() {
            return Err(SeriesError::ZeroDivisor);
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (index, c) in self.coeffs.iter().enumerate() {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(SeriesError::NonDivisible { index });
            }
            coeffs.push(q);
        }
        Ok(PowerSeries { coeffs })
    }

    /// Multiplies by `1 / (1 - x^j)` in place: a strided prefix sum.
    fn divide_by_one_minus_power(&mut self, j: usize) {
        debug_assert!(j >= 1);
        for i in j..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - j];
        }
    }

    /// Scales every coefficient by a small non-negative integer.
    pub fn scale(&self, factor: u32) -> Self {
        let f = small::<T>(factor);
        PowerSeries { coeffs: self.coeffs.iter().map(|c| c.clone() * f.clone()).collect() }
    }
}

impl<T: Coefficient> Add for &PowerSeries<T> {
    type Output = PowerSeries<T>;

    fn add(self, rhs: Self) -> PowerSeries<T> {
        let order = self.order().min(rhs.order());
        let coeffs = self.coeffs[..=order]
            .iter()
            .zip(&rhs.coeffs[..=order])
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        PowerSeries { coeffs }
    }
}

impl<T: Coefficient> Mul for &PowerSeries<T> {
    type Output = PowerSeries<T>;

    /// Schoolbook truncated convolution.
    fn mul(self, rhs: Self) -> PowerSeries<T> {
        let order = self.order().min(rhs.order());
        let mut out = PowerSeries::zero(order);
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] += &(a.clone() * b.clone());
            }
        }
        out
    }
}

/// `a(x) = prod_{j>=1} 1/(1-x^j)`: the coefficient of `x^k` is the number of
/// integer partitions of `k`. Each factor with `j <= order` is applied as a
/// strided prefix sum; larger factors do not affect the truncation.
pub fn partition_series<T: Coefficient>(order: usize) -> PowerSeries<T> {
    let mut s = PowerSeries::one(order);
    for j in 1..=order {
        s.divide_by_one_minus_power(j);
    }
    s
}

/// `s(x) = 1 + sum_{k>=1} x^{k^2} prod_{j=1}^{k} 1/(1-x^{2j})`, counting
/// corner deletions that are symmetric about the corner diagonal (a Durfee
/// square of side `k` plus a Ferrers diagram and its mirror image).
pub fn symmetric_corner_series<T: Coefficient>(order: usize) -> PowerSeries<T> {
    let mut total = PowerSeries::one(order);
    let mut product = PowerSeries::one(order);
    let mut k = 1usize;
    while k * k <= order {
        product.divide_by_one_minus_power(2 * k);
        let shift = k * k;
        for i in shift..=order {
            let (lo, hi) = (&product.coeffs[i - shift], &mut total.coeffs[i]);
            *hi += lo;
        }
        k += 1;
    }
    total
}

/// Numerator of `r(x)`: `a(x)^4 + 3 a(x^2)^2`.
pub fn rect_corner_numerator<T: Coefficient>(order: usize) -> PowerSeries<T> {
    let a = partition_series::<T>(order);
    let a2 = a.substitute_power(2);
    let a_sq = &a * &a;
    let a2_sq = &a2 * &a2;
    &(&a_sq * &a_sq) + &a2_sq.scale(3)
}

/// Numerator of `q(x)`: `a(x)^4 + 3 a(x^2)^2 + 2 s(x)^2 a(x^2) + 2 a(x^4)`.
pub fn square_corner_numerator<T: Coefficient>(order: usize) -> PowerSeries<T> {
    let a = partition_series::<T>(order);
    let s = symmetric_corner_series::<T>(order);
    let a2 = a.substitute_power(2);
    let a4 = a.substitute_power(4);
    let s_sq = &s * &s;
    let diagonal = &(&s_sq * &a2).scale(2) + &a4.scale(2);
    &rect_corner_numerator::<T>(order) + &diagonal
}

/// `r(x) = (a(x)^4 + 3 a(x^2)^2) / 4`: orbits of four-corner deletions on a
/// non-square rectangle under its four symmetries, by number of deleted cells.
pub fn rect_corner_series<T: Coefficient>(order: usize) -> Result<PowerSeries<T>, SeriesError> {
    rect_corner_numerator::<T>(order).exact_div(&small::<T>(4))
}

/// `q(x)`: the same orbit count for a square under its eight symmetries.
pub fn square_corner_series<T: Coefficient>(order: usize) -> Result<PowerSeries<T>, SeriesError> {
    square_corner_numerator::<T>(order).exact_div(&small::<T>(8))
}

fn small<T: Coefficient>(v: u32) -> T {
    T::from_u32(v).expect("coefficient type holds small constants")
}
