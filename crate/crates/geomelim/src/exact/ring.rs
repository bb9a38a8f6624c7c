//! Commutative-ring descriptors.
//!
//! Evaluation of polynomials and circuits is expressed against this
//! contract: a descriptor object supplies the constants, the five ring
//! operations, and an embedding of the rationals. Matrix rings over any
//! base ring are themselves descriptors, which is what lets a polynomial
//! be evaluated at matrix arguments.

use super::{Matrix, Polynomial, Rational, RationalFunction};
use num_traits::{One, Zero};
use std::fmt::Debug;

/// A commutative ring containing (an image of) the rationals.
pub trait Ring {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Embedding of the rational constants (matrix rings: `c * I`).
    fn from_rational(&self, c: &Rational) -> Self::Elem;

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.sub(&self.zero(), a)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    /// Membership check; matrix rings verify dimensions.
    fn fits(&self, _a: &Self::Elem) -> bool {
        true
    }

    fn pow(&self, a: &Self::Elem, e: u32) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// The field of rationals.
#[derive(Clone, Copy, Debug, Default)]
pub struct RationalField;

impl Ring for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn from_rational(&self, c: &Rational) -> Rational {
        c.clone()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
}

/// Polynomials over the rationals (indeterminates unified on demand).
#[derive(Clone, Copy, Debug, Default)]
pub struct PolyRing;

impl Ring for PolyRing {
    type Elem = Polynomial;

    fn zero(&self) -> Polynomial {
        Polynomial::zero()
    }
    fn one(&self) -> Polynomial {
        Polynomial::one()
    }
    fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a + b
    }
    fn sub(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a - b
    }
    fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a * b
    }
    fn from_rational(&self, c: &Rational) -> Polynomial {
        Polynomial::constant(c.clone())
    }
    fn is_zero(&self, a: &Polynomial) -> bool {
        a.is_zero()
    }
}

/// Rational functions (quotients of polynomials).
#[derive(Clone, Copy, Debug, Default)]
pub struct RatFunField;

impl Ring for RatFunField {
    type Elem = RationalFunction;

    fn zero(&self) -> RationalFunction {
        RationalFunction::zero()
    }
    fn one(&self) -> RationalFunction {
        RationalFunction::one()
    }
    fn add(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a.add(b)
    }
    fn sub(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a.sub(b)
    }
    fn mul(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a.mul(b)
    }
    fn from_rational(&self, c: &Rational) -> RationalFunction {
        RationalFunction::from_polynomial(Polynomial::constant(c.clone()))
    }
    fn is_zero(&self, a: &RationalFunction) -> bool {
        a.is_zero()
    }
}

/// Square matrices of a fixed dimension over a base ring.
#[derive(Clone, Debug)]
pub struct MatrixRing<R: Ring> {
    pub base: R,
    pub dim: usize,
}

impl<R: Ring> MatrixRing<R> {
    pub fn new(base: R, dim: usize) -> Self {
        MatrixRing { base, dim }
    }
}

impl<R: Ring> Ring for MatrixRing<R> {
    type Elem = Matrix<R::Elem>;

    fn zero(&self) -> Matrix<R::Elem> {
        Matrix::filled(self.dim, self.dim, self.base.zero())
    }
    fn one(&self) -> Matrix<R::Elem> {
        Matrix::identity(&self.base, self.dim)
    }
    fn add(&self, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
        a.add(&self.base, b)
    }
    fn sub(&self, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
        a.sub(&self.base, b)
    }
    fn mul(&self, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
        a.mul(&self.base, b)
    }
    fn from_rational(&self, c: &Rational) -> Matrix<R::Elem> {
        Matrix::scalar(&self.base, self.dim, &self.base.from_rational(c))
    }
    fn fits(&self, a: &Matrix<R::Elem>) -> bool {
        a.rows() == self.dim && a.cols() == self.dim
    }
}
