//! Error types, one enum per subsystem.

use thiserror::Error;

/// Errors from the exact coefficient arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("denominator vanishes at the expansion point u = {point}")]
    PoleAtExpansionPoint { point: String },
    #[error("expansion of a half power needs a rational square root of the expansion point {point}")]
    NonSquareExpansionPoint { point: String },
    #[error("cannot expand at u = 0: the value has a pole or branch point there")]
    ExpansionAtZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("denominator is zero")]
    ZeroDenominator,
}

/// Errors from the q-Weyl ring action on discrete functions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("sample at n = {n} is outside the function's valid range")]
    OutOfRange { n: i64 },
    #[error("operator shifts by the non-integer amount {shift}; the action is only defined for integer E-exponents")]
    NonIntegerShift { shift: String },
}

/// Errors from the torus skein module and the ring isomorphism onto the
/// even subring.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeinError {
    #[error("element is not fixed by the involution; not in the even subring")]
    NotEven,
    #[error("term {term} has no preimage: {reason}")]
    NotInImage { term: String, reason: String },
}

/// Errors from the difference-to-differential pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HierarchyError {
    #[error("all operators through level {max_level} vanish; raise the truncation order")]
    AllZeroThroughM { max_level: usize },
    #[error("leading coefficient {coefficient} of the lowest operator vanishes at u = {point}")]
    SingularAtExpansionPoint { coefficient: String, point: String },
    #[error("monomial cross-check failed at (m = {m}, p = {p}): expansion route gave {expanded}, direct route gave {direct}")]
    MonomialCheckFailed {
        m: usize,
        p: i64,
        expanded: String,
        direct: String,
    },
    #[error("operator has a non-integer E-exponent {exponent}; normalization requires integer exponents")]
    NonIntegerExponent { exponent: String },
    #[error("symbol twist q^(a*b) is not a half power for a = {a}, b = {b}")]
    QuarterPowerTwist { a: String, b: String },
    #[error("degree routes disagree: operator list gives (l, d) = ({l_ops}, {d_ops}), derivative test gives ({l_der}, {d_der})")]
    DegreeRouteMismatch {
        l_ops: usize,
        d_ops: usize,
        l_der: usize,
        d_der: usize,
    },
    #[error("seeds for loop index {k} supply {got} values; the lowest operator needs {expected}")]
    WrongSeedCount { k: usize, got: usize, expected: usize },
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// Errors from the braid-closure oracle and loop-coefficient extraction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} exceeds the resource cap ({limit})")]
    ResourceLimit { what: String, limit: String },
    #[error("braid word index {index} is out of range for {strands} strands")]
    BadGenerator { index: i64, strands: usize },
    #[error("braid closure has {components} components; only knots are supported")]
    ClosureNotKnot { components: usize },
    #[error("fewer than 2 strands")]
    TooFewStrands,
    #[error("the linear system for the loop coefficients is inconsistent; convention or oracle bug")]
    InconsistentSystem,
    #[error("need at least {needed} distinct samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },
    #[error("value at n = {n} is not divisible by the quantum integer [n]")]
    NonExactNormalization { n: i64 },
    #[error("internal invariant broke: {0}")]
    Internal(String),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}
