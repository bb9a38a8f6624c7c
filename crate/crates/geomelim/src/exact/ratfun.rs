//! Rational functions: quotients of polynomials.
//!
//! Normalization is content-level only (no polynomial gcd, by design): the
//! denominator is scaled to coprime integer coefficients with positive
//! leading coefficient in the graded-lex order, and a constant denominator
//! collapses to 1. Equality is decided by cross-multiplication.

use super::{Polynomial, Rational};
use num_traits::One;
use std::fmt;

#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Builds `num/den`. Panics if `den` is identically zero.
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        RationalFunction { num, den }.normalized()
    }

    pub fn from_polynomial(num: Polynomial) -> Self {
        RationalFunction { num, den: Polynomial::one() }
    }

    pub fn zero() -> Self {
        RationalFunction::from_polynomial(Polynomial::zero())
    }

    pub fn one() -> Self {
        RationalFunction::from_polynomial(Polynomial::one())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    /// The numerator, provided the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        if self.is_polynomial() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_polynomial() {
            self.num.as_constant()
        } else {
            None
        }
    }

    fn normalized(self) -> Self {
        if self.num.is_zero() {
            return RationalFunction { num: Polynomial::zero(), den: Polynomial::one() };
        }
        let c = self.den.content();
        let inv = Rational::one() / c;
        RationalFunction { num: self.num.scale(&inv), den: self.den.scale(&inv) }
    }

    pub fn add(&self, other: &Self) -> Self {
        RationalFunction::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        RationalFunction::new(
            &(&self.num * &other.den) - &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalFunction::new(&self.num * &other.num, &self.den * &other.den)
    }

    /// Division; panics if `other` is zero.
    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero rational function");
        RationalFunction::new(&self.num * &other.den, &self.den * &other.num)
    }

    /// Exact evaluation at a rational point; `None` when the denominator
    /// vanishes there.
    pub fn eval_rational(
        &self,
        point: &std::collections::BTreeMap<String, Rational>,
    ) -> Result<Option<Rational>, super::AlgebraError> {
        let d = self.den.eval_rational(point)?;
        if num_traits::Zero::is_zero(&d) {
            return Ok(None);
        }
        let n = self.num.eval_rational(point)?;
        Ok(Some(n / d))
    }

    /// Substitutes rational values for the listed indeterminates of both
    /// numerator and denominator; `None` if the denominator specializes to
    /// zero (only possible when all of its indeterminates were assigned).
    pub fn specialize(
        &self,
        vals: &std::collections::BTreeMap<String, Rational>,
    ) -> Option<RationalFunction> {
        let den = self.den.specialize(vals);
        if den.is_zero() {
            return None;
        }
        Some(RationalFunction::new(self.num.specialize(vals), den))
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat_int;
    use super::*;

    #[test]
    fn constant_denominator_collapses() {
        let x = Polynomial::var("x");
        let r = RationalFunction::new(x.clone(), Polynomial::constant(rat_int(2)));
        assert!(r.is_polynomial());
        assert_eq!(r.num(), &x.scale(&super::super::rat(1, 2)));
    }

    #[test]
    fn cross_multiplication_equality() {
        let x = Polynomial::var("x");
        let u = Polynomial::var("u");
        // x/u == (x*u)/(u^2)
        let a = RationalFunction::new(x.clone(), u.clone());
        let b = RationalFunction::new(&x * &u, &u * &u);
        assert_eq!(a, b);
    }

    #[test]
    fn denominator_is_primitive_with_positive_lead() {
        let u = Polynomial::var("u");
        let r = RationalFunction::new(Polynomial::one(), u.scale(&rat_int(-2)));
        assert_eq!(r.den(), &u);
        assert_eq!(r.num(), &Polynomial::constant(super::super::rat(-1, 2)));
    }
}
