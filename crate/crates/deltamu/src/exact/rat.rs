//! Rational scalars and small integer utilities.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

pub fn rat2(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Parse an integer from a decimal string.
pub fn parse_int(s: &str) -> Result<Int> {
    Int::from_str(s.trim()).map_err(|e| Error::InvalidInput(format!("integer `{s}`: {e}")))
}

/// Parse a rational from `p` or `p/q` decimal strings.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::InvalidInput(format!("zero denominator in `{s}`")));
            }
            Ok(Rat::new(parse_int(p)?, den))
        }
    }
}

/// Render a rational as `p` or `p/q`.
pub fn rat_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// lcm(1, 2, ..., n).
pub fn lcm_upto(n: u64) -> Result<Int> {
    if n < 1 {
        return Err(Error::InvalidInput(format!("lcm_upto requires n >= 1, got {n}")));
    }
    let mut acc = Int::one();
    for k in 2..=n {
        acc = acc.lcm(&Int::from(k));
    }
    Ok(acc)
}

/// Primes up to and including `n` by sieve.
pub fn primes_upto(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut is_comp = vec![false; n + 1];
    let mut out = Vec::new();
    for p in 2..=n {
        if !is_comp[p] {
            out.push(p as u64);
            let mut m = p * p;
            while m <= n {
                is_comp[m] = true;
                m += p;
            }
        }
    }
    out
}

/// Trial-factor |x| over the given primes. Returns None if a residual > 1 remains.
pub fn factor_with_primes(x: &Int, primes: &[u64]) -> Option<Vec<(u64, u64)>> {
    let mut v = x.abs();
    if v.is_zero() {
        return None;
    }
    let mut out = Vec::new();
    for &p in primes {
        let pb = Int::from(p);
        let mut e = 0u64;
        loop {
            let (q, r) = v.div_rem(&pb);
            if r.is_zero() {
                v = q;
                e += 1;
            } else {
                break;
            }
        }
        if e > 0 {
            out.push((p, e));
        }
        if v.is_one() {
            break;
        }
    }
    if v.is_one() {
        Some(out)
    } else {
        None
    }
}

/// Exact integer k-th root of x >= 0, if x is a perfect k-th power.
pub fn nth_root_exact(x: &Int, k: u32) -> Option<Int> {
    if x.is_negative() || k == 0 {
        return None;
    }
    let r = x.nth_root(k);
    if num_traits::pow::Pow::pow(&r, k) == *x {
        Some(r)
    } else {
        None
    }
}
