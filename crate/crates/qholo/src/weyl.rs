//! The q-Weyl ring ℛ⟨Q, E⟩/(EQ − qQE) of shift operators.
//!
//! Elements are kept in normal order with every E on the left: a term
//! `(a, b) ↦ c(q)` means `c(q)·E^a·Q^b`. Acting on a sequence f,
//! E shifts the index (`(Ef)_n = f_{n+1}`) and Q multiplies by `q^n`
//! (`(Qf)_n = q^n f_n`), so a normal-ordered element applies as
//!
//! ```text
//! (x f)_n = Σ_{a,b} c_{a,b}(q) · q^{(n+a)·b} · f_{n+a}
//! ```
//!
//! Exponents live in ½ℤ: the operators themselves stay integral, but
//! normalizing an annihilator to the `f / [n]` convention introduces
//! `Q^{±1/2}` (see [`crate::hierarchy::normalize_annihilator`]).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::{BigInt, BigRational, One, Zero};

use crate::error::WeylError;
use crate::halfint::HalfInt;
use crate::laurent::LaurentQ;

type Rat = BigRational;

/// Normal-ordered element of the q-Weyl ring: Σ c_{a,b}(q) E^a Q^b.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WeylElement {
    terms: BTreeMap<(HalfInt, HalfInt), LaurentQ>,
}

impl WeylElement {
    pub fn zero() -> Self {
        WeylElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(HalfInt::ZERO, HalfInt::ZERO, LaurentQ::one())
    }

    /// `c(q)·E^a·Q^b`.
    pub fn monomial(a: HalfInt, b: HalfInt, coef: LaurentQ) -> Self {
        let mut out = Self::zero();
        out.add_term(a, b, coef);
        out
    }

    /// The shift operator E.
    pub fn e(power: i64) -> Self {
        Self::monomial(HalfInt::from_int(power), HalfInt::ZERO, LaurentQ::one())
    }

    /// The multiplication operator Q.
    pub fn q(power: i64) -> Self {
        Self::monomial(HalfInt::ZERO, HalfInt::from_int(power), LaurentQ::one())
    }

    pub fn scalar(c: LaurentQ) -> Self {
        Self::monomial(HalfInt::ZERO, HalfInt::ZERO, c)
    }

    pub fn from_terms(it: impl IntoIterator<Item = (HalfInt, HalfInt, LaurentQ)>) -> Self {
        let mut out = Self::zero();
        for (a, b, c) in it {
            out.add_term(a, b, c);
        }
        out
    }

    pub fn add_term(&mut self, a: HalfInt, b: HalfInt, coef: LaurentQ) {
        if coef.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((a, b)) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (HalfInt, HalfInt, &LaurentQ)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn coeff(&self, a: HalfInt, b: HalfInt) -> LaurentQ {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(LaurentQ::zero)
    }

    /// True when every E- and Q-exponent is an integer.
    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(|(a, b)| a.is_integer() && b.is_integer())
    }

    pub fn scale(&self, c: &LaurentQ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (&(a, b), v) in &self.terms {
            out.add_term(a, b, v * c);
        }
        out
    }

    pub fn scale_rat(&self, c: &Rat) -> Self {
        self.scale(&LaurentQ::constant(c.clone()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term(a, b, -c.clone());
        }
        out
    }

    /// Normal-ordered product. Bilinear extension of
    ///
    /// ```text
    /// (E^a Q^b)(E^c Q^d) = q^{−bc} E^{a+c} Q^{b+d}
    /// ```
    ///
    /// which is forced by E^c Q^b = q^{bc} Q^b E^c.
    ///
    /// # Panics
    ///
    /// When `b` and `c` are both genuinely half-integral the reordering
    /// power q^{−bc} would be a quarter power, which the coefficient ring
    /// cannot represent. No operation in this crate produces such a pair
    /// (half powers only ever enter through Q), so this panics rather than
    /// returning an error.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c1) in &self.terms {
            for (&(c, d), c2) in &other.terms {
                let twist = b.checked_mul(c).unwrap_or_else(|| {
                    panic!("weyl product needs the quarter power q^({b}·{c})")
                });
                let coef = (c1 * c2).mul_monomial(-twist);
                out.add_term(a + c, b + d, coef);
            }
        }
        out
    }

    /// The involution τ: E^a Q^b ↦ E^{−a} Q^{−b}, coefficients untouched.
    pub fn tau(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term(-a, -b, c.clone());
        }
        out
    }

    /// True when τ fixes the element.
    pub fn is_even(&self) -> bool {
        self.tau() == *self
    }

    /// Splits into the τ-even and τ-odd parts: x = x₊ + x₋ with
    /// x_± = ½(x ± τ(x)).
    pub fn z2_split(&self) -> (Self, Self) {
        let t = self.tau();
        let half = Rat::new(BigInt::from(1), BigInt::from(2));
        let even = self.add(&t).scale_rat(&half);
        let odd = self.sub(&t).scale_rat(&half);
        (even, odd)
    }

    /// Applies the operator to a discrete function at index n:
    /// Σ c_{a,b}(q) q^{(n+a)b} f_{n+a}.
    pub fn apply(&self, f: &DiscreteFunction, n: i64) -> Result<LaurentQ, WeylError> {
        let mut acc = LaurentQ::zero();
        for (&(a, b), c) in &self.terms {
            let shift = a
                .as_integer()
                .ok_or(WeylError::NonIntegerShift { shift: a.to_string() })?;
            let sample = f.sample(n + shift)?;
            let power = b.times_int(n + shift);
            acc += &(c * &sample).mul_monomial(power);
        }
        Ok(acc)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (sym, e) in [("E", a), ("Q", b)] {
                if e.is_zero() {
                    continue;
                }
                if e == HalfInt::ONE {
                    write!(f, "*{sym}")?;
                } else if e.is_integer() && e.doubled() > 0 {
                    write!(f, "*{sym}^{}", e.doubled() / 2)?;
                } else {
                    write!(f, "*{sym}^({e})")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A term of a closed-form sequence rule: `coef(q) · q^{α n² + β n}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QPowerTerm {
    pub coef: LaurentQ,
    /// Coefficient of n² in the q-exponent.
    pub quad: HalfInt,
    /// Coefficient of n in the q-exponent.
    pub lin: HalfInt,
}

#[derive(Clone)]
enum Sampler {
    /// Finite table; the valid range is exactly the stored keys.
    Table(Arc<BTreeMap<i64, LaurentQ>>),
    /// Finite sum of q-power terms, defined on all of ℤ.
    Rule(Arc<Vec<QPowerTerm>>),
    /// The quantum integer n ↦ [n].
    QuantumInt,
    /// Reflection of another function: sample(n) = inner.sample(−n).
    Reflect(Arc<DiscreteFunction>),
}

/// A discrete function ℤ → ℚ[q^{±1/2}], sampled exactly.
///
/// Sampling is deterministic and read-only, so values can be shared across
/// threads freely.
#[derive(Clone)]
pub struct DiscreteFunction {
    sampler: Sampler,
}

impl DiscreteFunction {
    pub fn from_table(samples: BTreeMap<i64, LaurentQ>) -> Self {
        DiscreteFunction { sampler: Sampler::Table(Arc::new(samples)) }
    }

    /// The constant sequence `c`.
    pub fn constant(c: LaurentQ) -> Self {
        DiscreteFunction {
            sampler: Sampler::Rule(Arc::new(vec![QPowerTerm {
                coef: c,
                quad: HalfInt::ZERO,
                lin: HalfInt::ZERO,
            }])),
        }
    }

    /// A closed-form rule Σ coefᵢ(q)·q^{αᵢn² + βᵢn}.
    pub fn rule(terms: Vec<QPowerTerm>) -> Self {
        DiscreteFunction { sampler: Sampler::Rule(Arc::new(terms)) }
    }

    /// The single rule term `q^{α n² + β n}`.
    pub fn q_power(quad: HalfInt, lin: HalfInt) -> Self {
        Self::rule(vec![QPowerTerm { coef: LaurentQ::one(), quad, lin }])
    }

    /// The quantum integer sequence n ↦ [n] =
    /// (q^{n/2} − q^{−n/2})/(q^{1/2} − q^{−1/2}).
    pub fn quantum_integer() -> Self {
        DiscreteFunction { sampler: Sampler::QuantumInt }
    }

    /// The reflected function (Sf)(n) = f(−n).
    pub fn reflect(&self) -> Self {
        DiscreteFunction { sampler: Sampler::Reflect(Arc::new(self.clone())) }
    }

    pub fn sample(&self, n: i64) -> Result<LaurentQ, WeylError> {
        match &self.sampler {
            Sampler::Table(t) => t.get(&n).cloned().ok_or(WeylError::OutOfRange { n }),
            Sampler::Rule(terms) => {
                let mut acc = LaurentQ::zero();
                for t in terms.iter() {
                    let e = t.quad.times_int(n * n) + t.lin.times_int(n);
                    acc += &t.coef.mul_monomial(e);
                }
                Ok(acc)
            }
            Sampler::QuantumInt => Ok(quantum_integer(n)),
            Sampler::Reflect(inner) => inner.sample(-n),
        }
    }
}

/// The quantum integer [n] as a Laurent polynomial:
/// q^{(n−1)/2} + q^{(n−3)/2} + … + q^{−(n−1)/2}, with [−n] = −[n], [0] = 0.
pub fn quantum_integer(n: i64) -> LaurentQ {
    if n == 0 {
        return LaurentQ::zero();
    }
    if n < 0 {
        return -quantum_integer(-n);
    }
    let mut out = LaurentQ::zero();
    let mut e = HalfInt::halves(n - 1);
    for _ in 0..n {
        out.add_term(e, Rat::one());
        e = e - HalfInt::ONE;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::Laurent;
    use proptest::prelude::*;

    fn q_mono(e_doubled: i64) -> LaurentQ {
        Laurent::monomial(HalfInt::from_doubled(e_doubled))
    }

    fn n_range(lo: i64, hi: i64) -> impl Iterator<Item = i64> {
        lo..=hi
    }

    #[test]
    fn e_times_q_stays_normal_ordered() {
        let eq = WeylElement::e(1).mul(&WeylElement::q(1));
        assert_eq!(
            eq,
            WeylElement::monomial(HalfInt::ONE, HalfInt::ONE, LaurentQ::one())
        );
    }

    #[test]
    fn q_times_e_picks_up_q_inverse() {
        // Q·E = q^{−1}·EQ
        let qe = WeylElement::q(1).mul(&WeylElement::e(1));
        assert_eq!(
            qe,
            WeylElement::monomial(HalfInt::ONE, HalfInt::ONE, q_mono(-2))
        );
    }

    #[test]
    fn eq_squared() {
        // (EQ)·(EQ) = q^{−1}·E²Q²
        let eq = WeylElement::e(1).mul(&WeylElement::q(1));
        let sq = eq.mul(&eq);
        assert_eq!(
            sq,
            WeylElement::monomial(
                HalfInt::from_int(2),
                HalfInt::from_int(2),
                q_mono(-2)
            )
        );
    }

    #[test]
    fn defining_relation_annihilates_everything() {
        // EQ − qQE = 0 in the ring, so it kills every sampled function.
        let rel = WeylElement::e(1)
            .mul(&WeylElement::q(1))
            .sub(&WeylElement::q(1).mul(&WeylElement::e(1)).scale(&LaurentQ::var()));
        assert!(rel.is_zero());
    }

    #[test]
    fn action_matches_defining_relation_termwise() {
        // Apply EQ and qQE separately to a sample table; the actions agree.
        let eq = WeylElement::e(1).mul(&WeylElement::q(1));
        let qe = WeylElement::q(1).mul(&WeylElement::e(1)).scale(&LaurentQ::var());
        let f = DiscreteFunction::q_power(HalfInt::HALF, HalfInt::from_int(-1));
        for n in n_range(-5, 5) {
            assert_eq!(eq.apply(&f, n).unwrap(), qe.apply(&f, n).unwrap());
        }
    }

    #[test]
    fn shift_fixes_constants() {
        let x = WeylElement::e(1).sub(&WeylElement::one());
        let f = DiscreteFunction::constant(LaurentQ::one());
        for n in n_range(-4, 4) {
            assert!(x.apply(&f, n).unwrap().is_zero());
        }
    }

    #[test]
    fn q_action_substitutes_q_n() {
        let x = WeylElement::q(1);
        let f = DiscreteFunction::constant(LaurentQ::one());
        assert_eq!(x.apply(&f, 3).unwrap(), q_mono(6)); // q³
    }

    #[test]
    fn tau_examples() {
        let eq = WeylElement::e(1).mul(&WeylElement::q(1));
        assert_eq!(eq.tau(), WeylElement::e(-1).mul(&WeylElement::q(-1)));
        assert_eq!(WeylElement::one().tau(), WeylElement::one());
        let x = WeylElement::monomial(
            HalfInt::from_int(2),
            HalfInt::from_int(-1),
            q_mono(1),
        );
        assert_eq!(
            x.tau(),
            WeylElement::monomial(HalfInt::from_int(-2), HalfInt::ONE, q_mono(1))
        );
    }

    #[test]
    fn z2_split_reassembles() {
        let eq = WeylElement::e(1).mul(&WeylElement::q(1));
        let sym = eq.add(&eq.tau());
        let (even, odd) = sym.z2_split();
        assert_eq!(even, sym);
        assert!(odd.is_zero());

        let (even, odd) = eq.z2_split();
        assert_eq!(even.add(&odd), eq);
        assert_eq!(even.tau(), even);
        assert_eq!(odd.tau(), odd.neg());

        let (even, odd) = WeylElement::zero().z2_split();
        assert!(even.is_zero() && odd.is_zero());
    }

    #[test]
    fn reflection_is_an_involution() {
        let mut table = BTreeMap::new();
        for n in -4..=4 {
            table.insert(n, LaurentQ::constant_int(n));
        }
        let f = DiscreteFunction::from_table(table);
        let sf = f.reflect();
        let ssf = sf.reflect();
        for n in n_range(-4, 4) {
            assert_eq!(sf.sample(n).unwrap(), f.sample(-n).unwrap());
            assert_eq!(ssf.sample(n).unwrap(), f.sample(n).unwrap());
        }
        assert!(matches!(sf.sample(9), Err(WeylError::OutOfRange { n: -9 })));
    }

    #[test]
    fn quantum_integer_values() {
        assert!(quantum_integer(0).is_zero());
        assert_eq!(quantum_integer(1), LaurentQ::one());
        // [2] = q^{1/2} + q^{−1/2}
        assert_eq!(quantum_integer(2), &q_mono(1) + &q_mono(-1));
        assert_eq!(quantum_integer(-2), -quantum_integer(2));
        // (q^{1/2} − q^{−1/2})·[n] = q^{n/2} − q^{−n/2}
        let denom = &q_mono(1) - &q_mono(-1);
        for n in 1..8 {
            assert_eq!(
                &denom * &quantum_integer(n),
                &q_mono(n) - &q_mono(-n)
            );
        }
    }

    #[test]
    fn action_rejects_half_integer_shift() {
        let x = WeylElement::monomial(HalfInt::HALF, HalfInt::ZERO, LaurentQ::one());
        let f = DiscreteFunction::constant(LaurentQ::one());
        assert!(matches!(
            x.apply(&f, 0),
            Err(WeylError::NonIntegerShift { .. })
        ));
    }

    fn arb_weyl() -> impl Strategy<Value = WeylElement> {
        proptest::collection::vec(((-3i64..=3), (-3i64..=3), (-4i64..=4), (-3i64..=3)), 1..4)
            .prop_map(|v| {
                WeylElement::from_terms(v.into_iter().map(|(a, b, e, c)| {
                    (
                        HalfInt::from_int(a),
                        HalfInt::from_int(b),
                        Laurent::single(HalfInt::from_doubled(e), Rat::from(BigInt::from(c))),
                    )
                }))
            })
    }

    fn arb_fn() -> impl Strategy<Value = DiscreteFunction> {
        ((-2i64..=2), (-2i64..=2), (-2i64..=2)).prop_map(|(qd, ln, c)| {
            DiscreteFunction::rule(vec![
                QPowerTerm {
                    coef: LaurentQ::constant_int(c),
                    quad: HalfInt::halves(qd),
                    lin: HalfInt::from_int(ln),
                },
                QPowerTerm {
                    coef: LaurentQ::one(),
                    quad: HalfInt::ZERO,
                    lin: HalfInt::halves(1),
                },
            ])
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn tau_is_a_ring_involution(x in arb_weyl(), y in arb_weyl()) {
            prop_assert_eq!(x.tau().tau(), x.clone());
            prop_assert_eq!(x.mul(&y).tau(), x.tau().mul(&y.tau()));
        }

        #[test]
        fn product_action_is_composition(
            x in arb_weyl(),
            y in arb_weyl(),
            f in arb_fn(),
            n in -3i64..=3,
        ) {
            // (x·y)f = x(yf): check at a point by building the table of yf.
            let xy = x.mul(&y);
            let lhs = xy.apply(&f, n).unwrap();
            let mut table = BTreeMap::new();
            for m in n - 8..=n + 8 {
                table.insert(m, y.apply(&f, m).unwrap());
            }
            let yf = DiscreteFunction::from_table(table);
            let rhs = x.apply(&yf, n).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn associativity_of_mul(x in arb_weyl(), y in arb_weyl(), z in arb_weyl()) {
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        }

        #[test]
        fn reflection_conjugates_shifts(f in arb_fn(), n in -4i64..=4) {
            // S∘E = E^{−1}∘S and S∘Q = Q^{−1}∘S at the action level.
            let sf = f.reflect();
            let e = WeylElement::e(1);
            let e_inv = WeylElement::e(-1);
            let se = e.apply(&sf, n).unwrap();
            let es = e_inv.apply(&f, -n).unwrap();
            prop_assert_eq!(se, es);
            let q = WeylElement::q(1);
            let q_inv = WeylElement::q(-1);
            let sq = q.apply(&sf, n).unwrap();
            let qs = q_inv.apply(&f, -n).unwrap();
            prop_assert_eq!(sq, qs);
        }

        #[test]
        fn even_elements_commute_with_reflection(x in arb_weyl(), f in arb_fn(), n in -3i64..=3) {
            let (even, _) = x.z2_split();
            // (S∘x)(f)(n) = (x f)(−n) versus (x∘S)(f)(n)
            let lhs = even.apply(&f, -n).unwrap();
            let rhs = even.apply(&f.reflect(), n).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
