//! Dense univariate polynomials over ℚ, used for the Chebyshev families
//! and as numerators/denominators of rational functions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::series::TruncatedSeries;

type Rat = BigRational;

/// Polynomial in one variable over ℚ, coefficients from constant term up.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UPoly {
    coeffs: Vec<Rat>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::constant(Rat::one())
    }

    pub fn var() -> Self {
        UPoly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        UPoly::from_coeffs(vec![c])
    }

    pub fn constant_int(c: i64) -> Self {
        UPoly::constant(Rat::from(BigInt::from(c)))
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_int_coeffs(v: &[i64]) -> Self {
        UPoly::from_coeffs(v.iter().map(|&n| Rat::from(BigInt::from(n))).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial returns `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        UPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from(BigInt::from(k as i64)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly { coeffs: self.coeffs.iter().map(|v| v * c).collect() }
    }

    /// Makes the leading coefficient 1.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => UPoly::zero(),
            Some(l) => self.scale(&(Rat::one() / l)),
        }
    }

    /// Quotient and remainder with `deg(r) < deg(d)`.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dl = d.coeffs.len();
        if self.coeffs.len() < dl {
            return (UPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len() - dl + 1];
        let dlead = d.leading().unwrap();
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dl - 1] / dlead;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let v = dc * &c;
                    rem[k + i] = &rem[k + i] - v;
                }
            }
            quot[k] = c;
        }
        (UPoly::from_coeffs(quot), UPoly::from_coeffs(rem))
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Taylor coefficients of `p(x0 + t)` up to the given order.
    pub fn taylor_at(&self, x0: &Rat, order: usize) -> TruncatedSeries<Rat> {
        let mut out = TruncatedSeries::zero(order);
        // (x0 + t)^i, built incrementally
        let mut pow = TruncatedSeries::one(order);
        let shift = TruncatedSeries::from_coeffs({
            let mut v = vec![Rat::zero(); order + 1];
            v[0] = x0.clone();
            if order >= 1 {
                v[1] = Rat::one();
            }
            v
        });
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                pow = pow.mul_truncated(&shift);
            }
            if !c.is_zero() {
                out = out.add(&pow.scale(c));
            }
        }
        out
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + a * b;
            }
        }
        UPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn div_rem_recovers_factors() {
        let a = UPoly::from_int_coeffs(&[-1, 0, 1]); // x² − 1
        let b = UPoly::from_int_coeffs(&[-1, 1]); // x − 1
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, UPoly::from_int_coeffs(&[1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_of_common_factor() {
        let f = UPoly::from_int_coeffs(&[-1, 0, 1]); // (x−1)(x+1)
        let g = UPoly::from_int_coeffs(&[1, 2, 1]); // (x+1)²
        assert_eq!(f.gcd(&g), UPoly::from_int_coeffs(&[1, 1]));
    }

    #[test]
    fn taylor_shift() {
        // x² at x0 = 1 → 1 + 2t + t²
        let p = UPoly::from_int_coeffs(&[0, 0, 1]);
        let s = p.taylor_at(&Rat::one(), 3);
        assert_eq!(s.coeffs()[..], [1, 2, 1, 0].map(|n| Rat::from(BigInt::from(n)))[..]);
    }
}
