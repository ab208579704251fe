//! Sparse Laurent polynomials in a single variable, with exponents in ½ℤ
//! and exact rational coefficients.
//!
//! The variable is a const generic, so `Laurent<'q'>` and `Laurent<'u'>`
//! are distinct types that cannot be mixed by accident. Values are kept in
//! canonical form: no stored coefficient is zero, so structural equality
//! is mathematical equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::CoeffError;
use crate::halfint::HalfInt;
use crate::series::TruncatedSeries;

pub type Rat = BigRational;

/// Laurent polynomial in the variable `V` over ℚ with exponents in ½ℤ.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent<const V: char> {
    terms: BTreeMap<HalfInt, Rat>,
}

/// The coefficient ring ℚ[q^{±1/2}] (ℤ[q^{±1/2}] as the common subcase).
pub type LaurentQ = Laurent<'q'>;
/// Laurent polynomials in the expansion variable u.
pub type LaurentU = Laurent<'u'>;

impl<const V: char> Laurent<V> {
    pub fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::single(HalfInt::ZERO, c)
    }

    pub fn constant_int(c: i64) -> Self {
        Self::constant(Rat::from(BigInt::from(c)))
    }

    /// The monomial `x^e`.
    pub fn monomial(e: HalfInt) -> Self {
        Self::single(e, Rat::one())
    }

    /// The monomial `c · x^e`.
    pub fn single(e: HalfInt, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Laurent { terms }
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(HalfInt::ONE)
    }

    pub fn from_terms(it: impl IntoIterator<Item = (HalfInt, Rat)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in it {
            out.add_term(e, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&HalfInt::ZERO)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (HalfInt, &Rat)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: HalfInt) -> Rat {
        self.terms.get(&e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn min_exp(&self) -> Option<HalfInt> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<HalfInt> {
        self.terms.keys().next_back().copied()
    }

    /// True when every exponent is an integer.
    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(|e| e.is_integer())
    }

    pub fn add_term(&mut self, e: HalfInt, c: Rat) {
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

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Multiplication by the monomial `x^e`.
    pub fn mul_monomial(&self, e: HalfInt) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(&d, c)| (d + e, c.clone())).collect(),
        }
    }

    /// `x ↦ x^{-1}`.
    pub fn substitute_inverse(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Renames the variable: reinterprets the same terms in variable `W`.
    pub fn rename<const W: char>(&self) -> Laurent<W> {
        Laurent { terms: self.terms.clone() }
    }

    /// `x ↦ y^k` for integer `k ≠ 0`, producing a Laurent polynomial in `W`.
    pub fn substitute_power<const W: char>(&self, k: i64) -> Laurent<W> {
        assert!(k != 0, "substitute_power: zero power");
        Laurent {
            terms: self.terms.iter().map(|(&e, c)| (e.times_int(k), c.clone())).collect(),
        }
    }

    /// Divides every exponent by `k` (the inverse of `substitute_power`);
    /// `None` when some exponent is not divisible.
    pub fn shrink_exponents<const W: char>(&self, k: i64) -> Option<Laurent<W>> {
        assert!(k > 0);
        let mut terms = BTreeMap::new();
        for (&e, c) in &self.terms {
            if e.doubled() % k != 0 {
                return None;
            }
            terms.insert(HalfInt::from_doubled(e.doubled() / k), c.clone());
        }
        Some(Laurent { terms })
    }

    /// `x^n` for `n ≥ 0`.
    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Evaluates at `x = 1` (exact for any half-integer exponents).
    pub fn eval_at_one(&self) -> Rat {
        self.terms.values().fold(Rat::zero(), |acc, c| acc + c)
    }

    /// Exact evaluation at a nonzero rational point. Half-integer exponents
    /// need a rational square root of `x0`.
    pub fn eval(&self, x0: &Rat) -> Result<Rat, CoeffError> {
        let mut acc = Rat::zero();
        for (&e, c) in &self.terms {
            acc += c * rat_pow_half(x0, e)?;
        }
        Ok(acc)
    }

    /// Derivative with respect to the variable.
    pub fn derivative(&self) -> Self {
        Self::from_terms(self.terms.iter().filter(|(e, _)| !e.is_zero()).map(|(&e, c)| {
            (e - HalfInt::ONE, c * e.to_rational())
        }))
    }

    /// Taylor expansion at `x = x0` to the given order, in t = x − x0.
    ///
    /// Each monomial `x^e = x0^e (1 + t/x0)^e` expands by the generalized
    /// binomial series, which is exact over ℚ. Half-integer exponents need
    /// `x0` to be a square of a rational.
    pub fn taylor_at(&self, x0: &Rat, order: usize) -> Result<TruncatedSeries<Rat>, CoeffError> {
        if x0.is_zero() {
            if self.terms.keys().all(|e| e.is_integer() && e.doubled() >= 0) {
                // Plain polynomial: expansion at 0 is the coefficient list.
                let mut s = TruncatedSeries::zero(order);
                for (&e, c) in &self.terms {
                    let k = (e.doubled() / 2) as usize;
                    if k <= order {
                        s.set(k, c.clone());
                    }
                }
                return Ok(s);
            }
            return Err(CoeffError::ExpansionAtZero);
        }
        let mut acc = TruncatedSeries::zero(order);
        let inv_x0 = Rat::one() / x0;
        for (&e, c) in &self.terms {
            let scale = c * rat_pow_half(x0, e)?;
            // (1 + t/x0)^e = Σ_k binom(e, k) x0^{-k} t^k
            let mut binom = Rat::one();
            for k in 0..=order {
                if k > 0 {
                    let ek = e.to_rational() - Rat::from(BigInt::from(k as i64 - 1));
                    binom = binom * ek / Rat::from(BigInt::from(k as i64)) * &inv_x0;
                }
                acc.add_to(k, &scale * &binom);
            }
        }
        Ok(acc)
    }

    /// Expansion around `x = 1` in `h = x − 1` (the shape used throughout
    /// the h = q − 1 machinery).
    pub fn h_expand(&self, order: usize) -> TruncatedSeries<Rat> {
        self.taylor_at(&Rat::one(), order)
            .expect("expansion at 1 cannot fail")
    }

    /// Exact division; `None` when the quotient is not a Laurent polynomial.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Shift both operands to ordinary polynomials (min exponent 0),
        // divide from the top, and shift back.
        let shift = self.min_exp().unwrap() - divisor.min_exp().unwrap();
        let a = self.mul_monomial(-self.min_exp().unwrap());
        let b = divisor.mul_monomial(-divisor.min_exp().unwrap());
        let blead = b.max_exp().unwrap();
        let bcoef = b.coeff(blead);
        let mut rem = a;
        let mut quot = Self::zero();
        while let Some(rlead) = rem.max_exp() {
            if rlead < blead {
                return None;
            }
            let e = rlead - blead;
            let c = rem.coeff(rlead) / &bcoef;
            rem = &rem - &(&Self::single(e, c.clone()) * &b);
            quot.add_term(e, c);
        }
        Some(quot.mul_monomial(shift))
    }

    /// All coefficients integers (membership in ℤ[x^{±1/2}]).
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }
}

/// `x0^e` for `e ∈ ½ℤ`, requiring an exact rational square root when `e`
/// is genuinely half-integral.
pub fn rat_pow_half(x0: &Rat, e: HalfInt) -> Result<Rat, CoeffError> {
    let base = if e.is_integer() {
        x0.clone()
    } else {
        rat_sqrt(x0).ok_or_else(|| CoeffError::NonSquareExpansionPoint { point: x0.to_string() })?
    };
    let n = e.doubled() / if e.is_integer() { 2 } else { 1 };
    Ok(rat_pow_int(&base, n))
}

/// Exact `x^n` for integer `n` (negative allowed; `x ≠ 0` for `n < 0`).
pub fn rat_pow_int(x: &Rat, n: i64) -> Rat {
    if n == 0 {
        return Rat::one();
    }
    let mut base = if n < 0 {
        assert!(!x.is_zero(), "negative power of zero");
        Rat::one() / x
    } else {
        x.clone()
    };
    let mut exp = n.unsigned_abs();
    let mut acc = Rat::one();
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= &base;
        }
        exp >>= 1;
        if exp > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// Exact rational square root, if one exists.
pub fn rat_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    use num::integer::Roots;
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Rat::new(n, d))
}

impl<const V: char> Add for &Laurent<V> {
    type Output = Laurent<V>;
    fn add(self, rhs: &Laurent<V>) -> Laurent<V> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<const V: char> Sub for &Laurent<V> {
    type Output = Laurent<V>;
    fn sub(self, rhs: &Laurent<V>) -> Laurent<V> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl<const V: char> Mul for &Laurent<V> {
    type Output = Laurent<V>;
    fn mul(self, rhs: &Laurent<V>) -> Laurent<V> {
        let mut out = Laurent::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl<const V: char> Neg for &Laurent<V> {
    type Output = Laurent<V>;
    fn neg(self) -> Laurent<V> {
        Laurent {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl<const V: char> $trait for Laurent<V> {
            type Output = Laurent<V>;
            fn $method(self, rhs: Laurent<V>) -> Laurent<V> {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<const V: char> Neg for Laurent<V> {
    type Output = Laurent<V>;
    fn neg(self) -> Laurent<V> {
        -&self
    }
}

impl<const V: char> AddAssign<&Laurent<V>> for Laurent<V> {
    fn add_assign(&mut self, rhs: &Laurent<V>) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl<const V: char> Zero for Laurent<V> {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn is_zero(&self) -> bool {
        Laurent::is_zero(self)
    }
}

impl<const V: char> One for Laurent<V> {
    fn one() -> Self {
        Laurent::one()
    }
}

// ---- text form ----
//
// The grammar shared by every serialized coefficient in this crate:
//
//   laurent  := ['-'] term (('+' | '-') term)*    | '0'
//   term     := coef | coef '*' mono | mono
//   mono     := VAR | VAR '^' expt
//   expt     := int | '(' halfint ')'
//   halfint  := int | int '/' '2'
//   coef     := int | int '/' posint
//
// Examples: `-q^2`, `q^(-1/2)`, `3/2*q^3 + 1`, `0`.

impl<const V: char> fmt::Display for Laurent<V> {
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
            if e.is_zero() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                if e == HalfInt::ONE {
                    write!(f, "{V}")?;
                } else if e.is_integer() && e.doubled() > 0 {
                    write!(f, "{V}^{}", e.doubled() / 2)?;
                } else {
                    write!(f, "{V}^({e})")?;
                }
            }
        }
        Ok(())
    }
}

impl<const V: char> fmt::Debug for Laurent<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<const V: char> Laurent<V> {
    /// Parses the textual term-list grammar documented above.
    pub fn parse(input: &str) -> Result<Self, CoeffError> {
        let mut p = Parser { rest: input.trim(), var: V };
        let out = p.laurent()?;
        if !p.rest.is_empty() {
            return Err(CoeffError::Parse(format!(
                "trailing input `{}` in `{input}`",
                p.rest
            )));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    rest: &'a str,
    var: char,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        self.rest = self.rest.trim_start();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if let Some(r) = self.rest.strip_prefix(c) {
            self.rest = r;
            true
        } else {
            false
        }
    }

    fn laurent<const V: char>(&mut self) -> Result<Laurent<V>, CoeffError> {
        let mut out = Laurent::zero();
        let mut sign = if self.eat('-') { -1 } else { 1 };
        loop {
            let (e, c) = self.term()?;
            out.add_term(e, c * Rat::from(BigInt::from(sign)));
            self.skip_ws();
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                break;
            }
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(HalfInt, Rat), CoeffError> {
        self.skip_ws();
        if self.rest.starts_with(self.var) {
            let e = self.mono_exponent()?;
            return Ok((e, Rat::one()));
        }
        let c = self.coefficient()?;
        self.skip_ws();
        if self.eat('*') {
            self.skip_ws();
            if !self.rest.starts_with(self.var) {
                return Err(CoeffError::Parse(format!(
                    "expected `{}` after `*` near `{}`",
                    self.var, self.rest
                )));
            }
            let e = self.mono_exponent()?;
            Ok((e, c))
        } else {
            Ok((HalfInt::ZERO, c))
        }
    }

    /// Consumes `VAR` or `VAR^expt` and returns the exponent.
    fn mono_exponent(&mut self) -> Result<HalfInt, CoeffError> {
        self.rest = &self.rest[self.var.len_utf8()..];
        if !self.eat('^') {
            return Ok(HalfInt::ONE);
        }
        self.skip_ws();
        if self.eat('(') {
            let close = self
                .rest
                .find(')')
                .ok_or_else(|| CoeffError::Parse("missing `)`".into()))?;
            let e = HalfInt::parse(&self.rest[..close])?;
            self.rest = &self.rest[close + 1..];
            Ok(e)
        } else {
            let len = self
                .rest
                .char_indices()
                .take_while(|&(i, ch)| ch.is_ascii_digit() || (i == 0 && ch == '-'))
                .count();
            if len == 0 {
                return Err(CoeffError::Parse(format!(
                    "expected exponent near `{}`",
                    self.rest
                )));
            }
            let (head, tail) = self.rest.split_at(len);
            let e: i64 = head
                .parse()
                .map_err(|_| CoeffError::Parse(format!("bad exponent `{head}`")))?;
            self.rest = tail;
            Ok(HalfInt::from_int(e))
        }
    }

    fn coefficient(&mut self) -> Result<Rat, CoeffError> {
        self.skip_ws();
        let len = self
            .rest
            .char_indices()
            .take_while(|&(i, ch)| ch.is_ascii_digit() || ch == '/' || (i == 0 && ch == '-'))
            .count();
        if len == 0 {
            return Err(CoeffError::Parse(format!(
                "expected coefficient near `{}`",
                self.rest
            )));
        }
        let (head, tail) = self.rest.split_at(len);
        let c: Rat = head
            .parse()
            .map_err(|_| CoeffError::Parse(format!("bad coefficient `{head}`")))?;
        self.rest = tail;
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(e: i64) -> LaurentQ {
        LaurentQ::monomial(HalfInt::from_int(e))
    }

    fn qh(doubled: i64) -> LaurentQ {
        LaurentQ::monomial(HalfInt::from_doubled(doubled))
    }

    #[test]
    fn half_powers_multiply() {
        // q^(1/2) · q^(1/2) = q
        assert_eq!(&qh(1) * &qh(1), q(1));
    }

    #[test]
    fn one_is_identity() {
        let x = LaurentQ::parse("3/2*q^3 - q^(-1/2) + 2").unwrap();
        assert_eq!(&x * &LaurentQ::one(), x);
    }

    #[test]
    fn difference_of_squares() {
        let qm1 = &q(1) - &LaurentQ::one();
        let qp1 = &q(1) + &LaurentQ::one();
        assert_eq!(&qm1 * &qp1, &q(2) - &LaurentQ::one());
    }

    #[test]
    fn parse_spec_grammar_examples() {
        let a = LaurentQ::parse("-q^2").unwrap();
        assert_eq!(a, -&q(2));
        let b = LaurentQ::parse("q^(-1/2)").unwrap();
        assert_eq!(b, qh(-1));
        let c = LaurentQ::parse("3/2*q^3").unwrap();
        assert_eq!(c, q(3).scale(&Rat::new(BigInt::from(3), BigInt::from(2))));
        assert_eq!(LaurentQ::parse("0").unwrap(), LaurentQ::zero());
    }

    #[test]
    fn h_expansion_of_sqrt_q() {
        // q^(1/2) = 1 + h/2 − h²/8 + …
        let s = qh(1).h_expand(2);
        assert_eq!(s.get(0), &Rat::one());
        assert_eq!(s.get(1), &Rat::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!(s.get(2), &Rat::new(BigInt::from(-1), BigInt::from(8)));
    }

    #[test]
    fn taylor_of_u_squared_at_one() {
        let u2: LaurentU = Laurent::monomial(HalfInt::from_int(2));
        let s = u2.taylor_at(&Rat::one(), 3).unwrap();
        let expect: Vec<i64> = vec![1, 2, 1, 0];
        for (k, v) in expect.iter().enumerate() {
            assert_eq!(s.get(k), &Rat::from(BigInt::from(*v)));
        }
    }

    #[test]
    fn div_exact_splits_products() {
        let a = LaurentQ::parse("q^2 - 1").unwrap();
        let b = LaurentQ::parse("q - 1").unwrap();
        let c = a.div_exact(&b).unwrap();
        assert_eq!(c, LaurentQ::parse("q + 1").unwrap());
        assert!(LaurentQ::parse("q^2 + 1").unwrap().div_exact(&b).is_none());
    }

    #[test]
    fn eval_needs_square_root_for_half_powers() {
        let x = qh(1);
        assert!(x.eval(&Rat::from(BigInt::from(2))).is_err());
        assert_eq!(x.eval(&Rat::from(BigInt::from(4))).unwrap(), Rat::from(BigInt::from(2)));
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentQ> {
        proptest::collection::vec(((-8i64..=8), (-6i64..=6)), 0..5).prop_map(|v| {
            LaurentQ::from_terms(
                v.into_iter()
                    .map(|(e, c)| (HalfInt::from_doubled(e), Rat::from(BigInt::from(c)))),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn ring_axioms(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        }

        #[test]
        fn display_parse_round_trip(a in arb_laurent()) {
            let s = a.to_string();
            prop_assert_eq!(LaurentQ::parse(&s).unwrap(), a);
        }

        #[test]
        fn expansion_is_multiplicative(a in arb_laurent(), b in arb_laurent()) {
            let order = 4;
            let lhs = (&a * &b).h_expand(order);
            let rhs = a.h_expand(order).mul_truncated(&b.h_expand(order));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
