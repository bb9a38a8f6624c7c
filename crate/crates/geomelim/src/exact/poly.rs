//! Sparse multivariate polynomials over the rationals.
//!
//! A polynomial stores a sorted list of indeterminate names and a term map
//! from exponent vectors to nonzero rational coefficients. The canonical
//! form — indeterminates sorted by name, unused indeterminates pruned,
//! terms ordered graded-lexicographically — makes structural equality
//! coincide with mathematical equality.

use super::{AlgebraError, Rational, Ring};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector of one term. Ordered graded-lexicographically: total
/// degree first, then lexicographic on the exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { vars: Vec::new(), terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(Vec::new()), c);
        }
        Polynomial { vars: Vec::new(), terms }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![1]), Rational::one());
        Polynomial { vars: vec![name.to_string()], terms }
    }

    /// Builds `c * prod(name^exp)`.
    pub fn term(c: Rational, factors: &[(&str, u32)]) -> Self {
        let mut p = Polynomial::constant(c);
        for (name, exp) in factors {
            p = &p * &Polynomial::var(name).pow(*exp);
        }
        p
    }

    pub fn from_int(n: i64) -> Self {
        Polynomial::constant(super::rat_int(n))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.vars.is_empty())
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order as (exponents, coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Total degree; zero polynomial reports 0.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.vars.iter().position(|v| v == var) {
            None => 0,
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
        }
    }

    /// Coefficient of the grlex-largest term; zero for the zero polynomial.
    pub fn leading_coeff(&self) -> Rational {
        self.terms
            .iter()
            .next_back()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Signed content: `gcd` of the coefficients carrying the sign of the
    /// leading coefficient, so that `p / content(p)` has coprime integer
    /// coefficients and positive leading coefficient. Zero for zero.
    pub fn content(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        use num_integer::Integer;
        let mut num_gcd = num_bigint::BigInt::zero();
        let mut den_lcm = num_bigint::BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let content = Rational::new(num_gcd, den_lcm);
        if self.leading_coeff().is_negative() {
            -content
        } else {
            content
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect();
        Polynomial { vars: self.vars.clone(), terms }.pruned()
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Drops zero coefficients and indeterminates that no longer occur.
    fn pruned(mut self) -> Polynomial {
        self.terms.retain(|_, c| !c.is_zero());
        let used: Vec<bool> = (0..self.vars.len())
            .map(|i| self.terms.keys().any(|m| m.0[i] != 0))
            .collect();
        if used.iter().all(|&u| u) {
            return self;
        }
        let vars: Vec<String> = self
            .vars
            .iter()
            .zip(&used)
            .filter(|(_, &u)| u)
            .map(|(v, _)| v.clone())
            .collect();
        let terms = self
            .terms
            .into_iter()
            .map(|(m, c)| {
                let exps = m.0.iter().zip(&used).filter(|(_, &u)| u).map(|(e, _)| *e).collect();
                (Monomial(exps), c)
            })
            .collect();
        Polynomial { vars, terms }
    }

    /// Re-expresses `self` over the given superset of indeterminates
    /// (sorted). Panics if `vars` is not a superset.
    fn align(&self, vars: &[String]) -> BTreeMap<Monomial, Rational> {
        let positions: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("alignment superset"))
            .collect();
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; vars.len()];
                for (i, e) in m.0.iter().enumerate() {
                    exps[positions[i]] = *e;
                }
                (Monomial(exps), c.clone())
            })
            .collect()
    }

    fn unified_vars(&self, other: &Polynomial) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars.sort();
        vars
    }

    /// Extracts the coefficients of `self` in `var`: returns `(c_0..c_d)`
    /// with `self = sum c_j var^j`, each `c_j` free of `var`.
    pub fn coeffs_in(&self, var: &str) -> Vec<Polynomial> {
        let idx = match self.vars.iter().position(|v| v == var) {
            None => return vec![self.clone()],
            Some(i) => i,
        };
        let deg = self.degree_in(var) as usize;
        let mut out = vec![Polynomial::zero(); deg + 1];
        for (m, c) in &self.terms {
            let j = m.0[idx] as usize;
            let mut exps = m.0.clone();
            exps[idx] = 0;
            let mut part = Polynomial {
                vars: self.vars.clone(),
                terms: BTreeMap::from([(Monomial(exps), c.clone())]),
            }
            .pruned();
            part = &out[j] + &part;
            out[j] = part;
        }
        out
    }

    /// Evaluates under the unique ring homomorphism extending `assign`.
    /// Every indeterminate must be assigned; constants embed through
    /// [`Ring::from_rational`].
    pub fn eval_generic<R: Ring>(
        &self,
        ring: &R,
        assign: &BTreeMap<String, R::Elem>,
    ) -> Result<R::Elem, AlgebraError> {
        let mut images = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            let e = assign
                .get(v)
                .ok_or_else(|| AlgebraError::MissingAssignment(v.clone()))?;
            if !ring.fits(e) {
                return Err(AlgebraError::RingMismatch(format!(
                    "assigned element for `{v}` does not belong to the target ring"
                )));
            }
            images.push(e.clone());
        }
        let mut acc = ring.zero();
        for (m, c) in &self.terms {
            let mut t = ring.from_rational(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = ring.mul(&t, &ring.pow(&images[i], e));
                }
            }
            acc = ring.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Substitutes the listed indeterminates by rational values; the rest
    /// stay symbolic.
    pub fn specialize(&self, vals: &BTreeMap<String, Rational>) -> Polynomial {
        let assign: BTreeMap<String, Polynomial> = self
            .vars
            .iter()
            .map(|v| {
                let img = match vals.get(v) {
                    Some(c) => Polynomial::constant(c.clone()),
                    None => Polynomial::var(v),
                };
                (v.clone(), img)
            })
            .collect();
        self.eval_generic(&super::PolyRing, &assign)
            .expect("total assignment")
    }

    /// Substitutes the listed indeterminates by polynomials; the rest stay
    /// symbolic.
    pub fn substitute(&self, map: &BTreeMap<String, Polynomial>) -> Polynomial {
        let assign: BTreeMap<String, Polynomial> = self
            .vars
            .iter()
            .map(|v| {
                let img = map.get(v).cloned().unwrap_or_else(|| Polynomial::var(v));
                (v.clone(), img)
            })
            .collect();
        self.eval_generic(&super::PolyRing, &assign)
            .expect("total assignment")
    }

    /// Evaluates at a full rational point.
    pub fn eval_rational(
        &self,
        point: &BTreeMap<String, Rational>,
    ) -> Result<Rational, AlgebraError> {
        self.eval_generic(&super::RationalField, point)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let vars = self.unified_vars(rhs);
        let mut terms = self.align(&vars);
        for (m, c) in rhs.align(&vars) {
            let entry = terms.entry(m).or_insert_with(Rational::zero);
            *entry += c;
        }
        Polynomial { vars, terms }.pruned()
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        Polynomial { vars: self.vars.clone(), terms }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let vars = self.unified_vars(rhs);
        let a = self.align(&vars);
        let b = rhs.align(&vars);
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let exps: Vec<u32> =
                    ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                let entry = terms.entry(Monomial(exps)).or_insert_with(Rational::zero);
                *entry += ca * cb;
            }
        }
        Polynomial { vars, terms }.pruned()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars[i], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}
