//! Exact arithmetic kernel: rationals, sparse multivariate polynomials,
//! rational functions, and matrices over commutative rings.
//!
//! Everything here is exact. There is no floating point anywhere in the
//! crate; equality of any two values is decidable and decided.

mod matrix;
mod poly;
mod ratfun;
mod ring;

pub use matrix::{charpoly, charpoly_coeffs, det, rank_exact, vandermonde_det, Matrix};
pub use poly::{Monomial, Polynomial};
pub use ratfun::RationalFunction;
pub use ring::{MatrixRing, PolyRing, RatFunField, RationalField, Ring};

use std::fmt;

/// Arbitrary-precision rational number, always in reduced form with a
/// positive denominator. `0` is canonically `0/1`.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `n/d`. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Errors raised by the arithmetic kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    /// An indeterminate had no image under the evaluation assignment.
    MissingAssignment(String),
    /// An assigned element does not belong to the target ring (for matrix
    /// rings: wrong dimension).
    RingMismatch(String),
    /// A square matrix was required.
    NonSquare { rows: usize, cols: usize },
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::MissingAssignment(s) => write!(f, "no assignment for symbol `{s}`"),
            AlgebraError::RingMismatch(s) => write!(f, "ring mismatch: {s}"),
            AlgebraError::NonSquare { rows, cols } => {
                write!(f, "matrix is not square ({rows}x{cols})")
            }
        }
    }
}

impl std::error::Error for AlgebraError {}
