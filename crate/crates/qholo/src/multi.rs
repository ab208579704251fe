//! Laurent polynomials in the three symbol variables (λ, u, q), with
//! exponents in ½ℤ. These carry the commutative symbols of operators:
//! E ↦ λ, Q ↦ u, with coefficients Laurent in q.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigRational, One, Signed, Zero};

use crate::halfint::HalfInt;
use crate::laurent::{Laurent, LaurentU};

type Rat = BigRational;

/// Exponent vector in the order (λ, u, q).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Exp3 {
    pub lambda: HalfInt,
    pub u: HalfInt,
    pub q: HalfInt,
}

impl Exp3 {
    pub fn new(lambda: HalfInt, u: HalfInt, q: HalfInt) -> Self {
        Exp3 { lambda, u, q }
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiLaurent {
    terms: BTreeMap<Exp3, Rat>,
}

impl MultiLaurent {
    pub fn zero() -> Self {
        MultiLaurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::single(Exp3::new(HalfInt::ZERO, HalfInt::ZERO, HalfInt::ZERO), Rat::one())
    }

    pub fn single(e: Exp3, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        MultiLaurent { terms }
    }

    /// λ^a, u^b, q^c as monomials.
    pub fn lambda(a: HalfInt) -> Self {
        Self::single(Exp3::new(a, HalfInt::ZERO, HalfInt::ZERO), Rat::one())
    }

    pub fn u(b: HalfInt) -> Self {
        Self::single(Exp3::new(HalfInt::ZERO, b, HalfInt::ZERO), Rat::one())
    }

    pub fn q(c: HalfInt) -> Self {
        Self::single(Exp3::new(HalfInt::ZERO, HalfInt::ZERO, c), Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exp3, &Rat)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn add_term(&mut self, e: Exp3, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Plain partial derivative ∂/∂q.
    pub fn d_q(&self) -> Self {
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            if e.q.is_zero() {
                continue;
            }
            out.add_term(
                Exp3::new(e.lambda, e.u, e.q - HalfInt::ONE),
                c * e.q.to_rational(),
            );
        }
        out
    }

    /// Euler operator λ·∂/∂λ (keeps exponents unchanged).
    pub fn euler_lambda(&self) -> Self {
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            out.add_term(e, c * e.lambda.to_rational());
        }
        out
    }

    /// Evaluates λ = 1 and q = 1, leaving a Laurent polynomial in u.
    pub fn eval_lambda_q_one(&self) -> LaurentU {
        let mut out = Laurent::zero();
        for (&e, c) in &self.terms {
            out.add_term(e.u, c.clone());
        }
        out
    }

    /// Collects the terms by (λ-exponent, u-exponent), returning the
    /// coefficient of each as a Laurent polynomial in q.
    pub fn collect_q(&self) -> BTreeMap<(HalfInt, HalfInt), Laurent<'q'>> {
        let mut out: BTreeMap<(HalfInt, HalfInt), Laurent<'q'>> = BTreeMap::new();
        for (&e, c) in &self.terms {
            out.entry((e.lambda, e.u))
                .or_insert_with(Laurent::zero)
                .add_term(e.q, c.clone());
        }
        out
    }
}

impl Add for &MultiLaurent {
    type Output = MultiLaurent;
    fn add(self, rhs: &MultiLaurent) -> MultiLaurent {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &MultiLaurent {
    type Output = MultiLaurent;
    fn sub(self, rhs: &MultiLaurent) -> MultiLaurent {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &MultiLaurent {
    type Output = MultiLaurent;
    fn mul(self, rhs: &MultiLaurent) -> MultiLaurent {
        let mut out = MultiLaurent::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(
                    Exp3::new(e1.lambda + e2.lambda, e1.u + e2.u, e1.q + e2.q),
                    c1 * c2,
                );
            }
        }
        out
    }
}

impl Neg for &MultiLaurent {
    type Output = MultiLaurent;
    fn neg(self) -> MultiLaurent {
        MultiLaurent {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Zero for MultiLaurent {
    fn zero() -> Self {
        MultiLaurent::zero()
    }
    fn is_zero(&self) -> bool {
        MultiLaurent::is_zero(self)
    }
}

impl Add for MultiLaurent {
    type Output = MultiLaurent;
    fn add(self, rhs: MultiLaurent) -> MultiLaurent {
        &self + &rhs
    }
}

impl fmt::Display for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let mut wrote = false;
            if !a.is_one() {
                write!(f, "{a}")?;
                wrote = true;
            }
            for (sym, exp) in [("L", e.lambda), ("u", e.u), ("q", e.q)] {
                if exp.is_zero() {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                wrote = true;
                if exp == HalfInt::ONE {
                    write!(f, "{sym}")?;
                } else if exp.is_integer() && exp.doubled() > 0 {
                    write!(f, "{sym}^{}", exp.doubled() / 2)?;
                } else {
                    write!(f, "{sym}^({exp})")?;
                }
            }
            if !wrote {
                write!(f, "{a}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e3(l: i64, u: i64, q: i64) -> Exp3 {
        Exp3::new(HalfInt::from_int(l), HalfInt::from_int(u), HalfInt::from_int(q))
    }

    #[test]
    fn euler_operator_scales_by_lambda_exponent() {
        // λ∂λ(λ²u) = 2λ²u; λ∂λ(u) = 0
        let p = MultiLaurent::single(e3(2, 1, 0), Rat::one());
        let d = p.euler_lambda();
        assert_eq!(
            d,
            MultiLaurent::single(e3(2, 1, 0), Rat::from(num::BigInt::from(2)))
        );
        assert!(MultiLaurent::u(HalfInt::ONE).euler_lambda().is_zero());
    }

    #[test]
    fn dq_drops_power() {
        // ∂q(q²) = 2q
        let p = MultiLaurent::q(HalfInt::from_int(2));
        assert_eq!(
            p.d_q(),
            MultiLaurent::single(e3(0, 0, 1), Rat::from(num::BigInt::from(2)))
        );
    }

    #[test]
    fn eval_merges_u_cells() {
        // λu − u + q·u at (λ,q) = (1,1) → u·(1 − 1 + 1) = u
        let mut p = MultiLaurent::single(e3(1, 1, 0), Rat::one());
        p.add_term(e3(0, 1, 0), -Rat::one());
        p.add_term(e3(0, 1, 1), Rat::one());
        assert_eq!(p.eval_lambda_q_one(), Laurent::monomial(HalfInt::ONE));
    }
}
