//! Exact arbitrary-precision arithmetic: integers, rationals, dense polynomials
//! over Q, rational functions, and bivariate helpers used by the telescoper.
//!
//! Everything in this module is immutable after construction and uses exact
//! coefficient arithmetic only; numeric approximation lives in [`crate::hiprec`].

mod bipoly;
mod linsys;
mod poly;
mod rat;
mod ratfun;

pub use bipoly::BiPoly;
pub use linsys::nullspace;
pub use poly::{poly_gcd, squarefree_factorization, Poly, Var};
pub use rat::{
    factor_with_primes, int, lcm_upto, nth_root_exact, parse_int, parse_rat, primes_upto, rat,
    rat2, rat_string, Int, Rat,
};
pub use ratfun::RatFun;
