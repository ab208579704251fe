//! The Kauffman bracket skein module of the torus.
//!
//! As a module, 𝒮_q(𝕋) is free on the symbols (a, b) with (a, b)
//! identified with (−a, −b); we store the canonical representative with
//! a > 0, or a = 0 and b ≥ 0. The ring structure is transported from the
//! q-Weyl ring through the Frohman–Gelca isomorphism Φ onto the τ-even
//! subring:
//!
//! ```text
//! Φ(a, b) = (−1)^{a+b} q^{−ab/2} (E^a Q^b + E^{−a} Q^{−b}),   Φ(0, 0) = 1.
//! ```
//!
//! The module also carries the Chebyshev bases S_n, T_n of the solid-torus
//! skein module ℛ[α] and the right action of (a, b) on them, which is how
//! elements of the orthogonal ideal of a knot turn into recursion
//! relations for its colored Jones function.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Zero};

use crate::error::SkeinError;
use crate::halfint::HalfInt;
use crate::laurent::LaurentQ;
use crate::upoly::UPoly;
use crate::weyl::WeylElement;

type Rat = BigRational;

/// Canonical pair key: a > 0, or a = 0 and b ≥ 0.
fn canonical(a: i64, b: i64) -> (i64, i64) {
    if a < 0 || (a == 0 && b < 0) {
        (-a, -b)
    } else {
        (a, b)
    }
}

/// Element of the torus skein module: a finite ℛ-combination of curve
/// classes (a, b).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SkeinElement {
    terms: BTreeMap<(i64, i64), LaurentQ>,
}

impl SkeinElement {
    pub fn zero() -> Self {
        SkeinElement { terms: BTreeMap::new() }
    }

    /// The class of (a, b), with coefficient 1. (0, 0) is the empty link.
    pub fn curve(a: i64, b: i64) -> Self {
        Self::term(a, b, LaurentQ::one())
    }

    pub fn term(a: i64, b: i64, coef: LaurentQ) -> Self {
        let mut out = Self::zero();
        out.add_term(a, b, coef);
        out
    }

    pub fn one() -> Self {
        Self::curve(0, 0)
    }

    pub fn add_term(&mut self, a: i64, b: i64, coef: LaurentQ) {
        if coef.is_zero() {
            return;
        }
        let key = canonical(a, b);
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coef);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (i64, i64, LaurentQ)>) -> Self {
        let mut out = Self::zero();
        for (a, b, c) in it {
            out.add_term(a, b, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical-representative form.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &LaurentQ)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &LaurentQ) -> Self {
        let mut out = Self::zero();
        for (&(a, b), v) in &self.terms {
            out.add_term(a, b, v * c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-LaurentQ::one())
    }

    /// The product in 𝒮_q(𝕋), computed as Φ⁻¹(Φ(x)·Φ(y)). Well defined
    /// because the even subring is closed under multiplication.
    pub fn mul(&self, other: &Self) -> Self {
        phi_inverse(&phi(self).mul(&phi(other)))
            .expect("the even subring is closed under multiplication")
    }
}

impl fmt::Display for SkeinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*({a},{b})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SkeinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The ring isomorphism Φ: 𝒮_q(𝕋) → 𝒞^{ℤ₂}.
pub fn phi(x: &SkeinElement) -> WeylElement {
    let mut out = WeylElement::zero();
    for (a, b, c) in x.terms() {
        if (a, b) == (0, 0) {
            out = out.add(&WeylElement::scalar(c.clone()));
            continue;
        }
        let sign = if (a + b) % 2 == 0 { 1 } else { -1 };
        let coef = c
            .scale(&Rat::from(BigInt::from(sign)))
            .mul_monomial(HalfInt::halves(-a * b));
        out.add_term(HalfInt::from_int(a), HalfInt::from_int(b), coef.clone());
        out.add_term(HalfInt::from_int(-a), HalfInt::from_int(-b), coef);
    }
    out
}

/// The inverse of Φ on the τ-even, integer-exponent subring.
pub fn phi_inverse(x: &WeylElement) -> Result<SkeinElement, SkeinError> {
    if !x.has_integer_exponents() {
        return Err(SkeinError::NotInImage {
            term: x.to_string(),
            reason: "non-integer exponents".into(),
        });
    }
    if !x.is_even() {
        return Err(SkeinError::NotEven);
    }
    let mut out = SkeinElement::zero();
    for (ah, bh, c) in x.terms() {
        let a = ah.as_integer().unwrap();
        let b = bh.as_integer().unwrap();
        if (a, b) == (0, 0) {
            out.add_term(0, 0, c.clone());
            continue;
        }
        if canonical(a, b) != (a, b) {
            continue; // handled together with its τ-partner
        }
        let sign = if (a + b) % 2 == 0 { 1 } else { -1 };
        let coef = c
            .scale(&Rat::from(BigInt::from(sign)))
            .mul_monomial(HalfInt::halves(a * b));
        out.add_term(a, b, coef);
    }
    Ok(out)
}

// ---- Chebyshev families ----

/// S_n: S₀ = 1, S₁ = x, S_{n+1} = x·S_n − S_{n−1}; extended backwards by
/// S_{−1} = 0 and S_{−n−2} = −S_n.
pub fn chebyshev_s(n: i64) -> UPoly {
    if n == -1 {
        return UPoly::zero();
    }
    if n < -1 {
        return -&chebyshev_s(-n - 2);
    }
    let mut prev = UPoly::one();
    if n == 0 {
        return prev;
    }
    let x = UPoly::var();
    let mut cur = x.clone();
    for _ in 1..n {
        let next = &(&x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// T_n: T₀ = 2, T₁ = x, T_{n+1} = x·T_n − T_{n−1}; T_{−n} = T_n.
pub fn chebyshev_t(n: i64) -> UPoly {
    let n = n.abs();
    let mut prev = UPoly::constant_int(2);
    if n == 0 {
        return prev;
    }
    let x = UPoly::var();
    let mut cur = x.clone();
    for _ in 1..n {
        let next = &(&x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Element of the solid-torus skein module ℛ[α], stored in the power
/// basis {αⁿ}. The Chebyshev bases {S_n(α)} and {T_n(α)} are triangular
/// over it, so the conversions below are exact and mutually inverse.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SolidTorusElement {
    coeffs: Vec<LaurentQ>,
}

impl SolidTorusElement {
    pub fn zero() -> Self {
        SolidTorusElement { coeffs: Vec::new() }
    }

    pub fn from_power_basis(mut coeffs: Vec<LaurentQ>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        SolidTorusElement { coeffs }
    }

    pub fn power_basis(&self) -> &[LaurentQ] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn coeff(&self, k: usize) -> LaurentQ {
        self.coeffs.get(k).cloned().unwrap_or_else(LaurentQ::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_power_basis((0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    /// Multiplication by α (shift in the power basis).
    pub fn mul_alpha(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![LaurentQ::zero()];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_power_basis(coeffs)
    }

    /// Builds Σ coefₖ·P_k(α) for a basis family P given in the power basis.
    fn from_family(terms: &BTreeMap<i64, LaurentQ>, family: impl Fn(i64) -> UPoly) -> Self {
        let mut out = Self::zero();
        for (&k, c) in terms {
            let p = family(k);
            let as_power: Vec<LaurentQ> = p
                .coeffs()
                .iter()
                .map(|r| c.scale(r))
                .collect();
            out = out.add(&Self::from_power_basis(as_power));
        }
        out
    }

    pub fn from_s_basis(terms: &BTreeMap<i64, LaurentQ>) -> Self {
        Self::from_family(terms, chebyshev_s)
    }

    pub fn from_t_basis(terms: &BTreeMap<i64, LaurentQ>) -> Self {
        Self::from_family(terms, chebyshev_t)
    }

    /// Coefficients in the S-basis (triangular back-substitution).
    pub fn to_s_basis(&self) -> BTreeMap<i64, LaurentQ> {
        let mut rem = self.coeffs.clone();
        let mut out = BTreeMap::new();
        for d in (0..rem.len()).rev() {
            let c = rem[d].clone();
            if c.is_zero() {
                continue;
            }
            out.insert(d as i64, c.clone());
            for (k, sc) in chebyshev_s(d as i64).coeffs().iter().enumerate() {
                let delta = c.scale(sc);
                rem[k] = &rem[k] - &delta;
            }
        }
        out
    }

    /// Coefficients in the T-basis. T₀ = 2, so the constant slot divides
    /// by 2; all other leading coefficients are 1.
    pub fn to_t_basis(&self) -> BTreeMap<i64, LaurentQ> {
        let mut rem = self.coeffs.clone();
        let mut out = BTreeMap::new();
        for d in (0..rem.len()).rev() {
            let mut c = rem[d].clone();
            if c.is_zero() {
                continue;
            }
            if d == 0 {
                c = c.scale(&Rat::new(BigInt::from(1), BigInt::from(2)));
            }
            out.insert(d as i64, c.clone());
            for (k, sc) in chebyshev_t(d as i64).coeffs().iter().enumerate() {
                let delta = c.scale(sc);
                rem[k] = &rem[k] - &delta;
            }
        }
        out
    }
}

impl fmt::Debug for SolidTorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*a^{k}")?;
        }
        Ok(())
    }
}

/// The right action of a skein element on the T-basis vector T_n(α),
/// resolved into the S-basis:
///
/// ```text
/// T_n(α)·(a,b) = q^{ab/2} (−1)^b ( q^{nb} [ q^b S_{n+a} − q^{−b} S_{n+a−2} ]
///                                + q^{−nb} [ −q^b S_{n−a−2} + q^{−b} S_{n−a} ] )
/// ```
///
/// Negative S-indices are resolved by the backward extension S_{−1} = 0,
/// S_{−n−2} = −S_n. Note (0, 0) acts with weight T₀ = 2 here, while
/// [`phi`] sends it to 1; the two conventions meet only up to that factor
/// on the (0, 0) cell.
pub fn gelca_action(n: i64, x: &SkeinElement) -> SolidTorusElement {
    assert!(n >= 0, "the action is tabulated on T_n for n ≥ 0");
    let mut s_coeffs: BTreeMap<i64, LaurentQ> = BTreeMap::new();
    let mut add = |idx: i64, c: LaurentQ| {
        if c.is_zero() {
            return;
        }
        // resolve negative Chebyshev indices
        let (idx, c) = if idx >= 0 {
            (idx, c)
        } else if idx == -1 {
            return;
        } else {
            (-idx - 2, -c)
        };
        use std::collections::btree_map::Entry;
        match s_coeffs.entry(idx) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    };
    for (a, b, coef) in x.terms() {
        let sign = if b % 2 == 0 { 1 } else { -1 };
        let base = coef
            .scale(&Rat::from(BigInt::from(sign)))
            .mul_monomial(HalfInt::halves(a * b));
        let q = |e: i64| HalfInt::from_int(e);
        add(n + a, base.mul_monomial(q((n + 1) * b)));
        add(n + a - 2, -base.mul_monomial(q((n - 1) * b)));
        add(n - a - 2, -base.mul_monomial(q((1 - n) * b)));
        add(n - a, base.mul_monomial(q((-n - 1) * b)));
    }
    SolidTorusElement::from_s_basis(&s_coeffs)
}

/// Turns an element of the quantum orthogonal ideal into recursion
/// operators for the colored Jones function.
///
/// `full` is the operator obtained by writing the orthogonality relation
/// in normal order; `reduced` is Φ(x). They satisfy
/// `full = (E − E^{−1})·reduced` exactly, so the longer recursion carried
/// by `full` is implied by the shorter one carried by `reduced`.
pub fn recursion_from_orthogonal(x: &SkeinElement) -> (WeylElement, WeylElement) {
    let reduced = phi(x);
    let mut full = WeylElement::zero();
    for (a, b, c) in x.terms() {
        if (a, b) == (0, 0) {
            // Φ(0,0) = 1: contributes c·(E − E^{−1}).
            full.add_term(HalfInt::from_int(1), HalfInt::ZERO, c.clone());
            full.add_term(HalfInt::from_int(-1), HalfInt::ZERO, -c.clone());
            continue;
        }
        let sign = if (a + b) % 2 == 0 { 1 } else { -1 };
        let base = c
            .scale(&Rat::from(BigInt::from(sign)))
            .mul_monomial(HalfInt::halves(-a * b));
        let (ai, bi) = (HalfInt::from_int(a), HalfInt::from_int(b));
        let one = HalfInt::ONE;
        full.add_term(ai + one, bi, base.clone());
        full.add_term(ai - one, bi, -base.clone());
        full.add_term(-ai - one, -bi, -base.clone());
        full.add_term(-ai + one, -bi, base);
    }
    (full, reduced)
}

/// The known generator of the quantum orthogonal ideal of the left-handed
/// (2, 2k+1) torus knot, as a skein element:
///
/// ```text
/// (1, −2k−3) − q^{−4}(1, −2k+1) + q^{(2k−5)/2}(0, 2k+3) − q^{(2k−1)/2}(0, 2k−1)
/// ```
pub fn torus_knot_orthogonal_element(k: i64) -> SkeinElement {
    assert!(k >= 1);
    let q = |e2: i64| LaurentQ::monomial(HalfInt::halves(e2));
    SkeinElement::from_terms([
        (1, -2 * k - 3, LaurentQ::one()),
        (1, -2 * k + 1, -q(-8)),
        (0, 2 * k + 3, q(2 * k - 5)),
        (0, 2 * k - 1, -q(2 * k - 1)),
    ])
}

/// The corresponding 3-term recursion operator for the left-handed
/// (2, 2k+1) torus knot:
///
/// ```text
/// −q²(EQ^{−2k−3} + E^{−1}Q^{2k+3}) + q^{−4}(EQ^{−2k+1} + E^{−1}Q^{2k−1})
/// + q^{−2}(Q^{2k+3} + Q^{−2k−3}) − (Q^{2k−1} + Q^{−2k+1})
/// ```
///
/// Equal to Φ of [`torus_knot_orthogonal_element`] up to the unit
/// −q^{(2k−1)/2}.
pub fn torus_knot_recursion_element(k: i64) -> WeylElement {
    assert!(k >= 1);
    let i = HalfInt::from_int;
    let q = |e: i64| LaurentQ::monomial(HalfInt::from_int(e));
    WeylElement::from_terms([
        (i(1), i(-2 * k - 3), -q(2)),
        (i(-1), i(2 * k + 3), -q(2)),
        (i(1), i(-2 * k + 1), q(-4)),
        (i(-1), i(2 * k - 1), q(-4)),
        (i(0), i(2 * k + 3), q(-2)),
        (i(0), i(-2 * k - 3), q(-2)),
        (i(0), i(2 * k - 1), -q(0)),
        (i(0), i(-2 * k + 1), -q(0)),
    ])
}

/// Factors `x = unit · y` where `unit = ±q^{m/2}`, if such a unit exists.
/// Returns the unit as a Laurent monomial.
pub fn unit_between(x: &WeylElement, y: &WeylElement) -> Option<LaurentQ> {
    let (a, b, cx) = x.terms().next()?;
    let cy = y.coeff(a, b);
    if cy.is_zero() || cx.num_terms() != 1 || cy.num_terms() != 1 {
        return None;
    }
    let (ex, vx) = cx.terms().next().unwrap();
    let (ey, vy) = cy.terms().next().unwrap();
    let unit = LaurentQ::single(ex - ey, vx / vy);
    (y.scale(&unit) == *x).then_some(unit)
}
