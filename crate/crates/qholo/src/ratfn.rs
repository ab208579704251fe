//! Rational functions in u over ℚ, reduced to lowest terms with a monic
//! denominator. These model the coefficient field of functions with no
//! pole at the expansion point (u = 1 by default).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigRational, One, Zero};

use crate::error::CoeffError;
use crate::series::TruncatedSeries;
use crate::upoly::UPoly;

type Rat = BigRational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFn {
    num: UPoly,
    den: UPoly,
}

impl RationalFn {
    /// Builds `num/den`, reducing to lowest terms and normalizing the
    /// denominator to be monic.
    pub fn new(num: UPoly, den: UPoly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::ZeroDenominator);
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() > Some(0) {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        } else {
            (num, den)
        };
        let lead = den.leading().cloned().expect("nonzero denominator");
        Ok(RationalFn {
            num: num.scale(&(Rat::one() / &lead)),
            den: den.scale(&(Rat::one() / &lead)),
        })
    }

    pub fn from_poly(p: UPoly) -> Self {
        RationalFn { num: p, den: UPoly::one() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(UPoly::constant(c))
    }

    pub fn var() -> Self {
        Self::from_poly(UPoly::var())
    }

    pub fn numerator(&self) -> &UPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Exact evaluation; errors when the point is a pole.
    pub fn eval(&self, x: &Rat) -> Result<Rat, CoeffError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(CoeffError::PoleAtExpansionPoint { point: x.to_string() });
        }
        Ok(self.num.eval(x) / d)
    }

    /// True when the denominator does not vanish at `x`.
    pub fn regular_at(&self, x: &Rat) -> bool {
        !self.den.eval(x).is_zero()
    }

    /// Taylor coefficients at `u = x0` up to `order`, exact.
    pub fn taylor_at(&self, x0: &Rat, order: usize) -> Result<TruncatedSeries<Rat>, CoeffError> {
        let d0 = self.den.eval(x0);
        if d0.is_zero() {
            return Err(CoeffError::PoleAtExpansionPoint { point: x0.to_string() });
        }
        let num = self.num.taylor_at(x0, order);
        let den = self.den.taylor_at(x0, order);
        Ok(num.mul_truncated(&den.inverse_with(Rat::one() / d0)))
    }

    /// Substitutes `u ↦ c·u` (used for the shift action `f(u) ↦ f(qu)` at
    /// a fixed numeric `q`).
    pub fn scale_argument(&self, c: &Rat) -> Self {
        let sub = |p: &UPoly| {
            let mut pow = Rat::one();
            UPoly::from_coeffs(
                p.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, v)| {
                        if k > 0 {
                            pow = &pow * c;
                        }
                        v * &pow
                    })
                    .collect(),
            )
        };
        RationalFn::new(sub(&self.num), sub(&self.den)).expect("nonzero denominator is preserved")
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("denominators nonzero")
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &-rhs
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("denominators nonzero")
    }
}

impl Div for &RationalFn {
    type Output = RationalFn;
    fn div(self, rhs: &RationalFn) -> RationalFn {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RationalFn::new(&self.num * &rhs.den, &self.den * &rhs.num).expect("checked nonzero")
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_zero() || self.den == UPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn rat(n: i64) -> Rat {
        Rat::from(BigInt::from(n))
    }

    #[test]
    fn geometric_series() {
        // 1/(2 − u) at u = 1: 1 + t + t²
        let f = RationalFn::new(UPoly::one(), UPoly::from_int_coeffs(&[2, -1])).unwrap();
        let s = f.taylor_at(&Rat::one(), 2).unwrap();
        assert_eq!(s.coeffs()[..], [rat(1), rat(1), rat(1)][..]);
    }

    #[test]
    fn pole_detected() {
        let f = RationalFn::new(UPoly::one(), UPoly::from_int_coeffs(&[-1, 1])).unwrap();
        assert!(matches!(
            f.taylor_at(&Rat::one(), 2),
            Err(CoeffError::PoleAtExpansionPoint { .. })
        ));
    }

    #[test]
    fn reduction_to_lowest_terms() {
        // (u² − 1)/(u − 1) = u + 1
        let f = RationalFn::new(
            UPoly::from_int_coeffs(&[-1, 0, 1]),
            UPoly::from_int_coeffs(&[-1, 1]),
        )
        .unwrap();
        assert_eq!(f.numerator(), &UPoly::from_int_coeffs(&[1, 1]));
        assert_eq!(f.denominator(), &UPoly::one());
        assert!(f.regular_at(&Rat::one()));
    }

    #[test]
    fn expansion_multiplicative() {
        let f = RationalFn::new(UPoly::from_int_coeffs(&[1, 2]), UPoly::from_int_coeffs(&[3, -1]))
            .unwrap();
        let g = RationalFn::new(UPoly::from_int_coeffs(&[0, 0, 1]), UPoly::from_int_coeffs(&[2, 1]))
            .unwrap();
        let order = 4;
        let lhs = (&f * &g).taylor_at(&Rat::one(), order).unwrap();
        let rhs = f
            .taylor_at(&Rat::one(), order)
            .unwrap()
            .mul_truncated(&g.taylor_at(&Rat::one(), order).unwrap());
        assert_eq!(lhs, rhs);
    }
}
