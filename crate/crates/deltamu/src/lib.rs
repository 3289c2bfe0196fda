//! deltamu: an exact-arithmetic toolkit for recurrence-driven irrationality
//! measure experiments.
//!
//! The pipeline goes "reconnaissance -> rigorous bound": derive a linear
//! recurrence for a parametrized integral family by creative telescoping,
//! compute exact rational approximation sequences, measure empirical
//! irrationality exponents against high-precision constants, and turn
//! characteristic-root asymptotics plus denominator-growth evidence into
//! rigorous irrationality / linear-independence measure bounds.
//!
//! Modules:
//! - [`exact`]: integers, rationals, polynomials, rational functions over Q
//! - [`hiprec`]: arbitrary-precision floats and log / arctan / dilog / sqrt
//! - [`telescope`]: the continuous creative-telescoping engine with
//!   self-certifying recurrences
//! - [`recurrence`]: recurrence evaluation, characteristic polynomials,
//!   certified real-root isolation and growth rates
//! - [`integrate`]: exact integration of rational functions into
//!   rational-coordinate values over a basis of logarithm/arctan atoms
//! - [`quadrature`]: adaptive Gauss-Legendre numeric integration (the
//!   numeric cross-check oracle and the fallback for kernels without an
//!   exact decomposition)
//! - [`diophantine`]: empirical deltas, denominator-scaling search, measure
//!   bounds, and the closed-form measure theorems
//! - [`beukers`]: the two-dimensional integral family E(n,a) over the basis
//!   {1, dilog, log}
//! - [`pipeline`], [`report`], [`cache`], [`config`], [`cli`]: the runnable
//!   front end

pub mod error;
pub mod exact;
pub mod hiprec;
pub mod recurrence;
pub mod telescope;

pub use error::{Error, Result};
