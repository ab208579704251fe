//! Exact computer algebra for q-holonomic sequences of knot invariants.
//!
//! The crate has four layers, built strictly on exact arithmetic (big
//! rationals, Laurent polynomials with half-integer exponents — no
//! floating point anywhere):
//!
//! * [`laurent`], [`series`], [`upoly`], [`ratfn`], [`multi`] — the
//!   coefficient rings: ℚ[q^{±1/2}], truncated power series in q − 1,
//!   rational functions of u regular at u = 1, and trivariate symbols in
//!   (λ, u, q).
//! * [`weyl`] — the q-Weyl ring ℛ⟨Q, E⟩/(EQ − qQE) of shift operators
//!   acting on sequences, with the involution τ and the even/odd split.
//! * [`skein`] — the Kauffman bracket skein module of the torus, the ring
//!   isomorphism Φ onto the τ-even subring, Chebyshev bases, and the right
//!   action on the solid torus.
//! * [`hierarchy`] — conversion of a q-difference operator into the
//!   lower-triangular family of differential operators that governs the
//!   loop expansion, plus an exact Taylor-jet solver.
//! * [`jones`] — an independent R-matrix braid-closure computation of the
//!   colored Jones function, recursion verification, and extraction of
//!   loop-expansion jets from sampled sequences.
//!
//! The `qholo` CLI (separate crate) exposes the same pipeline for batch
//! use; the `book/` directory holds a guide whose code snippets compile as
//! doc-tests of this crate.

pub mod error;
pub mod halfint;
pub mod laurent;
pub mod multi;
pub mod ratfn;
pub mod series;
pub mod upoly;

pub mod weyl;

pub mod skein;

pub mod hierarchy;

pub mod jones;

pub mod wire;

pub use error::{CoeffError, HierarchyError, OracleError, SkeinError, WeylError};
pub use halfint::HalfInt;
pub use laurent::{Laurent, LaurentQ, LaurentU, Rat};
pub use multi::{Exp3, MultiLaurent};
pub use ratfn::RationalFn;
pub use series::TruncatedSeries;
pub use upoly::UPoly;

#[cfg(doctest)]
mod book;
