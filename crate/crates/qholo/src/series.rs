//! Truncated power series with exact coefficients.
//!
//! A `TruncatedSeries` is a jet: the first `order + 1` Taylor coefficients
//! of some function in a local variable (h = q − 1 or t = u − u₀ in this
//! crate). Arithmetic discards everything beyond the stored order, and the
//! order of a result is the largest order the inputs support.

use std::fmt;
use std::ops::{Neg, Sub};

use num::{One, Zero};

/// The coefficient rings a series can range over: exact rationals and
/// Laurent polynomials both qualify.
pub trait Coeff:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = T> + Sub<Output = T>
{
}

#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> TruncatedSeries<C> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![C::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = C::one();
        s
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Builds a series from its coefficient list; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn get(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn set(&mut self, k: usize, c: C) {
        self.coeffs[k] = c;
    }

    pub fn add_to(&mut self, k: usize, c: C) {
        let cur = std::mem::replace(&mut self.coeffs[k], C::zero());
        self.coeffs[k] = cur + c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Restricts to a smaller order (a jet always truncates losslessly).
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a jet");
        TruncatedSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|k| self.coeffs[k].clone() + other.coeffs[k].clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|k| self.coeffs[k].clone() - other.coeffs[k].clone())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|v| v.clone() * c.clone()).collect(),
        }
    }

    pub fn mul_truncated(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                out.add_to(i + j, self.coeffs[i].clone() * other.coeffs[j].clone());
            }
        }
        out
    }

    /// Substitutes `g` into `self`; `g` must have zero constant term.
    pub fn compose(&self, g: &Self) -> Self {
        assert!(g.coeffs[0].is_zero(), "composition needs g(0) = 0");
        let order = self.order().min(g.order());
        let mut out = Self::constant(self.coeffs[0].clone(), order);
        let mut power = Self::one(order);
        for k in 1..=order {
            power = power.mul_truncated(&g.truncate(order));
            if !self.coeffs[k].is_zero() {
                out = out.add(&power.scale(&self.coeffs[k]));
            }
        }
        out
    }

    /// Termwise derivative. The result is one order shorter; a jet of
    /// order 0 yields the empty statement "order 0, value 0".
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        let mut coeffs = Vec::with_capacity(self.order());
        for k in 1..=self.order() {
            // k · c_k, built by repeated addition to stay ring-generic
            let mut acc = C::zero();
            for _ in 0..k {
                acc = acc + self.coeffs[k].clone();
            }
            coeffs.push(acc);
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse; needs an invertible constant term, which the
    /// caller certifies by providing `inv0` = 1/c₀.
    pub fn inverse_with(&self, inv0: C) -> Self {
        let order = self.order();
        let mut inv = Self::zero(order);
        inv.coeffs[0] = inv0.clone();
        for k in 1..=order {
            let mut acc = C::zero();
            for i in 1..=k {
                acc = acc + self.coeffs[i].clone() * inv.coeffs[k - i].clone();
            }
            inv.coeffs[k] = -(inv0.clone() * acc);
        }
        inv
    }
}

impl<C: Coeff + fmt::Display> fmt::Debug for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "jet[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{BigInt, BigRational};

    type Rat = BigRational;

    fn rat(n: i64) -> Rat {
        Rat::from(BigInt::from(n))
    }

    fn series(v: &[i64]) -> TruncatedSeries<Rat> {
        TruncatedSeries::from_coeffs(v.iter().map(|&n| rat(n)).collect())
    }

    #[test]
    fn multiplication_truncates() {
        // (1 + t)·(1 − t) = 1 − t² at order 2
        let p = series(&[1, 1, 0]);
        let m = series(&[1, -1, 0]);
        assert_eq!(p.mul_truncated(&m), series(&[1, 0, -1]));
    }

    #[test]
    fn inverse_of_one_plus_t() {
        let p = series(&[1, 1, 0, 0]);
        let inv = p.inverse_with(rat(1));
        assert_eq!(inv, series(&[1, -1, 1, -1]));
    }

    #[test]
    fn composition() {
        // f = 1 + x + x², g = 2t + t² → f(g) = 1 + 2t + 5t² (mod t³)
        let f = series(&[1, 1, 1]);
        let g = series(&[0, 2, 1]);
        assert_eq!(f.compose(&g), series(&[1, 2, 5]));
    }

    #[test]
    fn derivative_drops_an_order() {
        let f = series(&[7, 3, 5, 2]);
        assert_eq!(f.derivative(), series(&[3, 10, 6]));
    }
}
