//! Scalar types and the coefficient-ring traits shared by every pipeline.
//!
//! All arithmetic in this crate is exact: integers are arbitrary precision
//! and rationals are kept in lowest terms with positive denominator by
//! construction. Coefficient rings implement [`CoeffRing`]; rings that in
//! addition carry Adams operations implement [`LambdaRing`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Arbitrary-precision signed integer.
pub type Int = BigInt;

/// Exact rational number; always normalized (lowest terms, denominator > 0).
pub type Rat = BigRational;

/// Integer constant.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Rational constant `n/d`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Rational constant `n`.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// True if `q` has denominator 1.
pub fn is_integer(q: &Rat) -> bool {
    q.denom().is_one()
}

/// Extract the integer value of `q`, if it has one.
pub fn to_int(q: &Rat) -> Option<Int> {
    if is_integer(q) {
        Some(q.numer().clone())
    } else {
        None
    }
}

/// A commutative ring with identity, used as the coefficient domain of
/// symmetric-function series and Laurent polynomials.
///
/// Arithmetic comes from the standard operator traits (with right operands
/// by reference, so sparse containers need not be cloned to combine).
/// Every implementation here embeds its rational extension: `scale`
/// multiplies by an arbitrary rational, and `is_integral` tests whether the
/// element lies in the integral form of the ring.
pub trait CoeffRing:
    Clone
    + Eq
    + fmt::Debug
    + Zero
    + One
    + for<'a> std::ops::Add<&'a Self, Output = Self>
    + for<'a> std::ops::Sub<&'a Self, Output = Self>
    + for<'a> std::ops::Mul<&'a Self, Output = Self>
    + std::ops::Neg<Output = Self>
{
    fn from_int(n: i64) -> Self;
    /// Multiply by a rational scalar.
    fn scale(&self, q: &Rat) -> Self;
    /// Does the element lie in the integral form of the ring?
    fn is_integral(&self) -> bool;
}

/// A coefficient ring equipped with Adams operations `psi_d`.
///
/// Required laws (property-tested per instance): each `psi_d` is a ring
/// homomorphism, `psi_1` is the identity, and `psi_d . psi_e = psi_{de}`.
pub trait LambdaRing: CoeffRing {
    fn adams(&self, d: u32) -> Self;
}

/// Rings supporting decidable exact division: `num = den * q` exactly or an
/// error, never a rounded quotient.
pub trait ExactDiv: Sized {
    fn exact_div(&self, den: &Self) -> Result<Self>;
}

impl ExactDiv for Rat {
    fn exact_div(&self, den: &Self) -> Result<Self> {
        if Zero::is_zero(den) {
            return Err(Error::DivisionByZero);
        }
        Ok(self / den)
    }
}

impl CoeffRing for Rat {
    fn from_int(n: i64) -> Self {
        rat_int(n)
    }
    fn scale(&self, q: &Rat) -> Self {
        self * q
    }
    fn is_integral(&self) -> bool {
        is_integer(self)
    }
}

/// The unit coefficient ring: lambda-structure of a point class.
///
/// Adams operations fix every element, matching the Grothendieck ring of a
/// point with trivial coefficients.
impl LambdaRing for Rat {
    fn adams(&self, _d: u32) -> Self {
        self.clone()
    }
}

/// Render a rational for text output: `3`, `-1/2`.
pub fn rat_to_string(q: &Rat) -> String {
    if is_integer(q) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Sign of a rational as -1, 0, 1.
pub fn rat_sign(q: &Rat) -> i32 {
    if Zero::is_zero(q) {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// Errors shared across the crate. Every failure carries enough context to
/// reconstruct the offending input; exact pipelines never round or truncate
/// silently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A configured size cap was exceeded.
    SizeLimit {
        what: &'static str,
        requested: usize,
        max: usize,
    },
    /// Division by zero in a field or cyclotomic inversion.
    DivisionByZero,
    /// Exact division left a nonzero remainder.
    NotDivisible { context: &'static str },
    /// A Weyl-asymmetric Laurent element reached a symmetric-only operation.
    AsymmetricInput,
    /// A series had the wrong constant term for exp/log/Exp/Log.
    ConstantTerm { op: &'static str },
    /// An integrality assertion failed; signals an upstream bug.
    IntegralityFailure { context: String },
    /// Two series with different truncation orders were combined.
    TruncationMismatch { left: u32, right: u32 },
    /// Two exact routes to the same value disagreed.
    CrossCheckFailure { context: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SizeLimit {
                what,
                requested,
                max,
            } => {
                write!(
                    f,
                    "size limit exceeded for {what}: requested {requested}, cap {max}"
                )
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotDivisible { context } => {
                write!(f, "exact division failed (nonzero remainder): {context}")
            }
            Error::AsymmetricInput => write!(f, "Laurent element is not Weyl-symmetric"),
            Error::ConstantTerm { op } => write!(f, "invalid constant term for {op}"),
            Error::IntegralityFailure { context } => {
                write!(f, "integrality assertion failed: {context}")
            }
            Error::TruncationMismatch { left, right } => {
                write!(f, "truncation orders differ: {left} vs {right}")
            }
            Error::CrossCheckFailure { context } => {
                write!(f, "cross-check failed: {context}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
