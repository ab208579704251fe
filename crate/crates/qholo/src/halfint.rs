//! Half-integer exponents, stored exactly as doubled integers.
//!
//! The coefficient ring works with monomials like `q^(1/2)` and operators
//! like `Q^(-3/2)`, so every exponent in this crate lives in ½ℤ. Storing
//! the doubled value keeps all exponent arithmetic in `i64`.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num::{BigInt, BigRational};

use crate::error::CoeffError;

/// An element of ½ℤ, stored as its doubled value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const ONE: HalfInt = HalfInt(2);
    pub const HALF: HalfInt = HalfInt(1);

    /// The half-integer with the given doubled value (`from_doubled(3)` is 3/2).
    pub const fn from_doubled(doubled: i64) -> Self {
        HalfInt(doubled)
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    /// n/2 as a half-integer.
    pub const fn halves(n: i64) -> Self {
        HalfInt(n)
    }

    pub const fn doubled(self) -> i64 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn as_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    /// Product in ½ℤ; `None` when the exact product lands in ¼ℤ \ ½ℤ
    /// (both factors genuinely half-integral).
    pub fn checked_mul(self, other: HalfInt) -> Option<HalfInt> {
        let prod = self.0.checked_mul(other.0)?;
        (prod % 2 == 0).then(|| HalfInt(prod / 2))
    }

    pub fn times_int(self, n: i64) -> HalfInt {
        HalfInt(self.0 * n)
    }

    pub fn to_rational(self) -> BigRational {
        BigRational::new(BigInt::from(self.0), BigInt::from(2))
    }

    /// Parses `"3"`, `"-2"`, `"1/2"`, `"-5/2"`.
    pub fn parse(s: &str) -> Result<HalfInt, CoeffError> {
        let s = s.trim();
        let bad = || CoeffError::Parse(format!("invalid half-integer `{s}`"));
        match s.split_once('/') {
            None => s.parse::<i64>().map(HalfInt::from_int).map_err(|_| bad()),
            Some((num, den)) => {
                if den.trim() != "2" {
                    return Err(bad());
                }
                let n: i64 = num.trim().parse().map_err(|_| bad())?;
                if n % 2 == 0 {
                    return Err(bad());
                }
                Ok(HalfInt(n))
            }
        }
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        HalfInt::from_int(n)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: HalfInt) {
        self.0 += rhs.0;
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse_round_trip() {
        for doubled in -9..=9 {
            let x = HalfInt::from_doubled(doubled);
            assert_eq!(HalfInt::parse(&x.to_string()).unwrap(), x);
        }
    }

    #[test]
    fn checked_mul_rejects_quarter_powers() {
        let half = HalfInt::HALF;
        assert_eq!(half.checked_mul(half), None);
        assert_eq!(
            HalfInt::from_int(3).checked_mul(half),
            Some(HalfInt::halves(3))
        );
        assert_eq!(
            HalfInt::from_int(-2).checked_mul(HalfInt::from_int(4)),
            Some(HalfInt::from_int(-8))
        );
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(HalfInt::parse("1/3").is_err());
        assert!(HalfInt::parse("2/2").is_err());
        assert!(HalfInt::parse("x").is_err());
    }
}
