//! Geometric elimination over constraint databases.
//!
//! This crate turns first-order queries against polynomial/relational
//! database instances into quantifier-free outputs. Quantifier blocks over
//! zero-dimensional varieties are eliminated through multiplication
//! matrices and division-free characteristic polynomials, results are
//! emitted as essentially division-free arithmetic circuits with exact
//! complexity metrics, and an exact Vandermonde certificate reproduces the
//! exponential scalar lower bound for extended sample point queries.
//!
//! The crate is organized around six subsystems:
//!
//! * [`exact`] — big rationals, sparse multivariate polynomials, rational
//!   functions, and matrices over commutative rings, all exact.
//! * [`formula`] — the FO(+,×,=,<,0,1) language with schema symbols:
//!   parsing, rendering, prenexing, substitution, and evaluation.
//! * [`circuit`] — straight-line programs with a parameter/variable split,
//!   sign-marked outputs, and non-scalar complexity accounting.
//! * [`db`] — constraint-database schemas and instances, parameter
//!   equivalence, and the geometric-query invariance harness.
//! * [`elim`] — the elimination algorithms: multiplication matrices,
//!   determinant/charpoly elimination, resultants, partial evaluation.
//! * [`samplelab`] — sample point queries, branching-free representations,
//!   and the exact scalar lower-bound laboratory.
//!
//! Runnable walkthroughs live in `examples/`; start with
//! `cargo run --example cube_elimination`.

pub mod circuit;
pub mod db;
pub mod elim;
pub mod exact;
pub mod formula;
pub mod samplelab;

pub use exact::{Polynomial, Rational, RationalFunction};
