//! Arbitrary-precision evaluation of the target constants: natural logs,
//! arctangents, the real dilogarithm, square roots, pi, and zeta(2), zeta(3).
//!
//! All functions are pure; a process-wide memo holds ln 2 and pi per requested
//! precision so repeated pipeline calls do not recompute them. A value
//! computed at precision p agrees with the same value at precision 2p through
//! the first p - 16 bits (the guard margin; see the precision-doubling tests).
//!
//! Dilogarithm convention: `dilog_rational`/`li2` compute the series branch
//! Li2(z) = sum_{k>=1} z^k / k^2 continued to z <= 1. Mapping other
//! conventions onto this one is the caller's business (the 2-D integral
//! module selects its convention empirically).

mod bigfloat;

pub use bigfloat::BigFloat;

use crate::error::{Error, Result};
use crate::exact::{rat2, Int, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::sync::Mutex;
use std::sync::OnceLock;

/// Documented guard margin in bits for all hiprec results.
pub const GUARD_BITS: u32 = 16;

/// Working-precision bits for a decimal-digit request (3.33 bits/digit + guard).
pub fn bits_for_digits(digits: u32) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + GUARD_BITS
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum ConstId {
    Ln2,
    Pi,
}

fn const_cache(id: ConstId, prec: u32, compute: impl FnOnce() -> BigFloat) -> BigFloat {
    static CACHE: OnceLock<Mutex<BTreeMap<(u8, u32), BigFloat>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    let key = (id as u8, prec);
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return v.clone();
    }
    let v = compute();
    cache.lock().unwrap().insert(key, v.clone());
    v
}

/// ln 2 = 2 atanh(1/3), integer-scaled series.
pub fn ln2(prec: u32) -> BigFloat {
    const_cache(ConstId::Ln2, prec, || {
        let w = prec + 32;
        let scale = Int::one() << w;
        let mut acc = &scale / Int::from(3);
        let mut sum = Int::zero();
        let mut k = 0u64;
        while !acc.is_zero() {
            let term = &acc / Int::from(2 * k + 1);
            if term.is_zero() {
                break;
            }
            sum += term;
            acc /= Int::from(9);
            k += 1;
        }
        sum <<= 1;
        BigFloat::from_scaled(sum, -(w as i64), prec + 16)
    })
}

/// arctan(1/q) by the integer-scaled Gregory series.
fn atan_inv_int(q: u64, w: u32) -> BigFloat {
    let scale = Int::one() << w;
    let q2 = Int::from(q) * Int::from(q);
    let mut acc = &scale / Int::from(q);
    let mut sum = Int::zero();
    let mut k = 0u64;
    while !acc.is_zero() {
        let term = &acc / Int::from(2 * k + 1);
        if term.is_zero() {
            break;
        }
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        acc /= &q2;
        k += 1;
    }
    BigFloat::from_scaled(sum, -(w as i64), w)
}

/// pi by Machin's formula 16 arctan(1/5) - 4 arctan(1/239).
pub fn pi(prec: u32) -> BigFloat {
    const_cache(ConstId::Pi, prec, || {
        let w = prec + 32;
        let a = atan_inv_int(5, w).mul_small(16);
        let b = atan_inv_int(239, w).mul_small(4);
        a.sub(&b).at_prec(prec + 16)
    })
}

/// Natural logarithm of a positive value.
pub fn ln(x: &BigFloat, prec: u32) -> Result<BigFloat> {
    if x.sign() <= 0 {
        return Err(Error::InvalidInput("log of non-positive value".into()));
    }
    let w = prec + 48;
    let k = x.mag() - 1;
    let m = x.shift(-k).at_prec(w); // in [1, 2)
    // 8 square roots, then atanh series on (y-1)/(y+1) <= ~2^-9
    let mut y = m;
    for _ in 0..8 {
        y = y.sqrt()?;
    }
    let one = BigFloat::one(w);
    let t = y.sub(&one).div(&y.add(&one))?;
    let mut sum = t.clone();
    if !t.is_zero() {
        let t2 = t.mul(&t);
        let mut acc = t.clone();
        let mut j = 3i64;
        loop {
            acc = acc.mul(&t2);
            let term = acc.div_small(j);
            if term.negligible_vs(&sum, w as i64 + 8) {
                break;
            }
            sum = sum.add(&term);
            j += 2;
        }
    }
    let ln_m = sum.mul_small(512); // 2 * 2^8
    let out = if k == 0 {
        ln_m
    } else {
        ln2(w).mul_small(k).add(&ln_m)
    };
    Ok(out.at_prec(prec))
}

/// Arctangent of any real value.
pub fn arctan(x: &BigFloat, prec: u32) -> Result<BigFloat> {
    if x.is_zero() {
        return Ok(BigFloat::zero(prec));
    }
    let w = prec + 48;
    let one = BigFloat::one(w);
    let mut t = x.at_prec(w);
    let mut halvings = 0i64;
    // arctan(t) = 2 arctan(t / (1 + sqrt(1 + t^2)))
    while t.mag() > -9 {
        let s = one.add(&t.mul(&t)).sqrt()?;
        t = t.div(&one.add(&s))?;
        halvings += 1;
        debug_assert!(halvings < 128);
    }
    let mut sum = t.clone();
    let t2 = t.mul(&t);
    let mut acc = t.clone();
    let mut j = 3i64;
    let mut sign = -1i64;
    loop {
        acc = acc.mul(&t2);
        let term = acc.div_small(sign * j);
        if term.negligible_vs(&sum, w as i64 + 8) {
            break;
        }
        sum = sum.add(&term);
        j += 2;
        sign = -sign;
    }
    Ok(sum.shift(halvings).at_prec(prec))
}

/// Li2 series for |x| <= 1/2 (ratio <= 1/2, one bit per term).
fn li2_series(x: &BigFloat, w: u32) -> BigFloat {
    if x.is_zero() {
        return BigFloat::zero(w);
    }
    let x = x.at_prec(w);
    let mut acc = x.clone();
    let mut sum = x.clone();
    let mut k = 2i64;
    loop {
        acc = acc.mul(&x);
        let term = acc.div_small(k * k);
        if term.negligible_vs(&sum, w as i64 + 8) && k > 4 {
            break;
        }
        sum = sum.add(&term);
        k += 1;
    }
    sum
}

/// Real dilogarithm Li2(x) for x <= 1.
pub fn li2(x: &BigFloat, prec: u32) -> Result<BigFloat> {
    let w = prec + 48;
    let one = BigFloat::one(w);
    if x.sub(&one).sign() > 0 {
        return Err(Error::InvalidInput("dilog argument must be <= 1".into()));
    }
    let half = BigFloat::from_rat(&rat2(1, 2), w);
    let out = if x.sub(&one).is_zero() {
        // Li2(1) = pi^2/6
        let p = pi(w);
        p.mul(&p).div_small(6)
    } else if x.cmp_value(&half) == std::cmp::Ordering::Greater {
        // reflection: Li2(x) = pi^2/6 - ln(x) ln(1-x) - Li2(1-x), 1-x in (0, 1/2)
        let y = one.sub(&x.at_prec(w));
        let p = pi(w);
        let lead = p.mul(&p).div_small(6);
        lead.sub(&ln(&x.at_prec(w), w)?.mul(&ln(&y, w)?))
            .sub(&li2_series(&y, w))
    } else if x.neg().cmp_value(&half) != std::cmp::Ordering::Greater {
        // |x| <= 1/2: direct series
        li2_series(&x.at_prec(w), w)
    } else if x.neg().cmp_value(&one) != std::cmp::Ordering::Greater {
        // x in [-1, -1/2): Landen, u = x/(x-1) in (1/3, 1/2]
        let xx = x.at_prec(w);
        let u = xx.div(&xx.sub(&one))?;
        let l = ln(&one.sub(&xx), w)?;
        li2_series(&u, w).neg().sub(&l.mul(&l).div_small(2))
    } else {
        // x < -1: inversion Li2(x) = -pi^2/6 - ln(-x)^2/2 - Li2(1/x), 1/x in (-1, 0)
        let xx = x.at_prec(w);
        let p = pi(w);
        let l = ln(&xx.neg(), w)?;
        let inner = li2(&one.div(&xx)?, w)?;
        p.mul(&p)
            .div_small(6)
            .neg()
            .sub(&l.mul(&l).div_small(2))
            .sub(&inner)
    };
    Ok(out.at_prec(prec))
}

/// zeta(3) by the accelerated alternating central-binomial series
/// (5/2) sum_{n>=1} (-1)^(n-1) / (n^3 binom(2n,n)).
pub fn zeta3(prec: u32) -> BigFloat {
    let w = prec + 48;
    let mut term = BigFloat::from_rat(&rat2(1, 2), w); // n=1: 1/(1*2)
    let mut sum = term.clone();
    let mut n = 1i64;
    loop {
        // t_{n+1} = t_n * n^3 / ((n+1)(2n+1)(2n+2))
        term = term
            .mul_small(n * n * n)
            .div_small((n + 1) * (2 * n + 1))
            .div_small(2 * n + 2);
        if term.negligible_vs(&sum, w as i64 + 8) {
            break;
        }
        n += 1;
        if n % 2 == 1 {
            sum = sum.add(&term);
        } else {
            sum = sum.sub(&term);
        }
    }
    sum.mul_small(5).div_small(2).at_prec(prec)
}

/// zeta(2) by 3 sum_{n>=1} 1 / (n^2 binom(2n,n)); the independent pi^2/6 oracle.
pub fn zeta2(prec: u32) -> BigFloat {
    let w = prec + 48;
    let mut term = BigFloat::from_rat(&rat2(1, 2), w);
    let mut sum = term.clone();
    let mut n = 1i64;
    loop {
        term = term.mul_small(n * n).div_small((2 * n + 1) * (2 * n + 2));
        if term.negligible_vs(&sum, w as i64 + 8) {
            break;
        }
        sum = sum.add(&term);
        n += 1;
    }
    sum.mul_small(3).at_prec(prec)
}

/// Rational enclosure (lo, hi) of exp(-1) with hi - lo < 2^-prec, from the
/// alternating factorial series whose partial sums bracket the limit.
pub fn inv_e_bounds(prec: u32) -> (Rat, Rat) {
    let mut term = Rat::one(); // 1/0!
    let mut sum = Rat::one();
    let mut k: i64 = 1;
    let eps = rat2(1, 2).pow((prec + 2) as i32);
    let mut partials = (sum.clone(), sum.clone());
    loop {
        term /= Rat::from_integer(Int::from(k));
        if k % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
        if k % 2 == 1 {
            partials.0 = sum.clone(); // below the limit after odd step
        } else {
            partials.1 = sum.clone();
        }
        if term < eps && k > 3 {
            break;
        }
        k += 1;
    }
    let (lo, hi) = if partials.0 <= partials.1 {
        (partials.0, partials.1)
    } else {
        (partials.1, partials.0)
    };
    (lo, hi)
}

// ---- rational-argument wrappers ----

pub fn log_rational(q: &Rat, prec_bits: u32) -> Result<BigFloat> {
    if !q.is_positive() {
        return Err(Error::InvalidInput(format!("log of non-positive rational {q}")));
    }
    if q.is_one() {
        return Ok(BigFloat::zero(prec_bits));
    }
    ln(&BigFloat::from_rat(q, prec_bits + 48), prec_bits)
}

pub fn arctan_rational(q: &Rat, prec_bits: u32) -> BigFloat {
    arctan(&BigFloat::from_rat(q, prec_bits + 48), prec_bits)
        .expect("arctan is total")
}

pub fn dilog_rational(q: &Rat, prec_bits: u32) -> Result<BigFloat> {
    if q > &Rat::one() {
        return Err(Error::InvalidInput(format!("dilog argument {q} > 1")));
    }
    if q.is_zero() {
        return Ok(BigFloat::zero(prec_bits));
    }
    li2(&BigFloat::from_rat(q, prec_bits + 48), prec_bits)
}

pub fn sqrt_rational(q: &Rat, prec_bits: u32) -> Result<BigFloat> {
    if q.is_negative() {
        return Err(Error::InvalidInput(format!("sqrt of negative rational {q}")));
    }
    BigFloat::from_rat(q, prec_bits + 48).sqrt().map(|v| v.at_prec(prec_bits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn close(a: &BigFloat, b: &BigFloat, bits: i64) -> bool {
        let d = a.sub(b);
        d.is_zero() || d.negligible_vs(b, bits)
    }

    fn from_dec(s: &str, prec: u32) -> BigFloat {
        // parse "d.ddd" into a rational and convert
        let (ip, fp) = s.split_once('.').unwrap_or((s, ""));
        let num: Int = format!("{ip}{fp}").parse().unwrap();
        let den = Int::from(10u32).pow(fp.len() as u32);
        BigFloat::from_rat(&Rat::new(num, den), prec)
    }

    #[test]
    fn ln2_value() {
        let v = ln2(200);
        let r = from_dec("0.69314718055994530941723212145817656807550013436026", 220);
        assert!(close(&v, &r, 160));
    }

    #[test]
    fn pi_value() {
        let v = pi(200);
        let r = from_dec("3.1415926535897932384626433832795028841971693993751", 220);
        assert!(close(&v, &r, 160));
    }

    #[test]
    fn log_one_is_zero() {
        assert!(log_rational(&rat(1), 128).unwrap().is_zero());
        assert!(log_rational(&rat(-2), 64).is_err());
        assert!(log_rational(&rat(0), 64).is_err());
    }

    #[test]
    fn log_two_independent_reductions() {
        // 2 = (4/3)(3/2): two different argument-reduction paths agree
        let p = 192;
        let a = log_rational(&rat(2), p).unwrap();
        let b = log_rational(&rat2(4, 3), p).unwrap().add(&log_rational(&rat2(3, 2), p).unwrap());
        assert!(close(&a, &b, p as i64 - GUARD_BITS as i64));
    }

    #[test]
    fn log_of_quadratic_irrational() {
        // ln(3 + 2 sqrt 2) = 2 ln(1 + sqrt 2)
        let p = 256;
        let s2 = sqrt_rational(&rat(2), p + 16).unwrap();
        let x = BigFloat::from_i64(3, p).add(&s2.shift(1));
        let a = ln(&x, p).unwrap();
        let y = BigFloat::one(p).add(&s2);
        let b = ln(&y, p).unwrap().shift(1);
        assert!(close(&a, &b, p as i64 - GUARD_BITS as i64));
        let r = from_dec("1.7627471740390860504652186499595846180563206565233", p);
        assert!(close(&a, &r, 160));
    }

    #[test]
    fn arctan_values() {
        let p = 192;
        assert!(arctan_rational(&rat(0), p).is_zero());
        // arctan(1) = pi/4
        let a = arctan_rational(&rat(1), p);
        let b = pi(p).div_small(4);
        assert!(close(&a, &b, p as i64 - GUARD_BITS as i64));
        // odd symmetry
        let c = arctan_rational(&rat2(-3, 7), p);
        let d = arctan_rational(&rat2(3, 7), p).neg();
        assert!(close(&c, &d, p as i64 - GUARD_BITS as i64));
        // arctan(sqrt 3)/sqrt 3 = pi/(3 sqrt 3)
        let s3 = sqrt_rational(&rat(3), p).unwrap();
        let v = arctan(&s3, p).unwrap().div(&s3).unwrap();
        let r = from_dec("0.60459978807807261686469275254738524409468874936425", p);
        assert!(close(&v, &r, 150));
    }

    #[test]
    fn dilog_values() {
        let p = 192;
        assert!(dilog_rational(&rat(0), p).unwrap().is_zero());
        assert!(dilog_rational(&rat(2), p).is_err());
        // Li2(1) = pi^2/6, cross-checked against the independent zeta2 series
        let a = dilog_rational(&rat(1), p).unwrap();
        let b = zeta2(p);
        assert!(close(&a, &b, p as i64 - GUARD_BITS as i64));
        // Li2(1/2) = pi^2/12 - ln^2(2)/2
        let c = dilog_rational(&rat2(1, 2), p).unwrap();
        let l2 = ln2(p);
        let d = pi(p).mul(&pi(p)).div_small(12).sub(&l2.mul(&l2).div_small(2));
        assert!(close(&c, &d, p as i64 - GUARD_BITS as i64));
        // branch spot checks
        let e = dilog_rational(&rat(-1), p).unwrap();
        let r = from_dec("-0.8224670334241132182362075833230125946094749506034", p);
        assert!(close(&e, &r, 150));
        let f = dilog_rational(&rat(-3), p).unwrap();
        let r = from_dec("-1.9393754207667089530772717191778914412225901778086", p);
        assert!(close(&f, &r, 150));
        let g = dilog_rational(&rat2(1, 3), p).unwrap();
        let r = from_dec("0.36621322997706348761674629766426276380206341558968", p);
        assert!(close(&g, &r, 150));
    }

    #[test]
    fn dilog_reflection_property() {
        // Li2(q) + Li2(1-q) = pi^2/6 - ln(q) ln(1-q) on (0,1)
        let p = 160;
        for q in [rat2(1, 5), rat2(2, 5), rat2(9, 13), rat2(17, 20)] {
            let lhs = dilog_rational(&q, p)
                .unwrap()
                .add(&dilog_rational(&(Rat::one() - &q), p).unwrap());
            let rhs = pi(p).mul(&pi(p)).div_small(6).sub(
                &log_rational(&q, p)
                    .unwrap()
                    .mul(&log_rational(&(Rat::one() - &q), p).unwrap()),
            );
            assert!(close(&lhs, &rhs, p as i64 - 2 * GUARD_BITS as i64), "q = {q}");
        }
    }

    #[test]
    fn sqrt_values() {
        let p = 192;
        assert!(sqrt_rational(&rat(0), p).unwrap().is_zero());
        assert!(sqrt_rational(&rat(-1), p).is_err());
        let s = sqrt_rational(&rat(2), p).unwrap();
        let r = from_dec("1.4142135623730950488016887242096980785696718753769", p);
        assert!(close(&s, &r, 160));
        let sq = s.mul(&s);
        let two = BigFloat::from_i64(2, p);
        assert!(close(&sq, &two, p as i64 - GUARD_BITS as i64));
    }

    #[test]
    fn zeta3_value() {
        let v = zeta3(200);
        let r = from_dec("1.2020569031595942853997381615114499907649862923405", 220);
        assert!(close(&v, &r, 160));
    }

    #[test]
    fn inv_e_enclosure() {
        let (lo, hi) = inv_e_bounds(80);
        assert!(lo < hi);
        let mid = from_dec("0.36787944117144232159552377016146086744581113103177", 120);
        assert!(BigFloat::from_rat(&lo, 120).cmp_value(&mid) == std::cmp::Ordering::Less);
        assert!(BigFloat::from_rat(&hi, 120).cmp_value(&mid) == std::cmp::Ordering::Greater);
        let width = BigFloat::from_rat(&(&hi - &lo), 120);
        assert!(width.mag() < -80);
    }

    #[test]
    fn precision_doubling_all_ops() {
        for p in [96u32, 160] {
            for q in [rat2(7, 5), rat2(355, 113), rat2(1, 7), rat(10)] {
                let a1 = log_rational(&q, p).unwrap();
                let a2 = log_rational(&q, 2 * p).unwrap();
                assert!(close(&a1, &a2, p as i64 - GUARD_BITS as i64), "log {q} @ {p}");
                let b1 = arctan_rational(&q, p);
                let b2 = arctan_rational(&q, 2 * p);
                assert!(close(&b1, &b2, p as i64 - GUARD_BITS as i64), "atan {q} @ {p}");
                let c1 = sqrt_rational(&q, p).unwrap();
                let c2 = sqrt_rational(&q, 2 * p).unwrap();
                assert!(close(&c1, &c2, p as i64 - GUARD_BITS as i64), "sqrt {q} @ {p}");
            }
            for q in [rat2(-7, 5), rat2(1, 2), rat2(-1, 2), rat2(9, 10)] {
                let d1 = dilog_rational(&q, p).unwrap();
                let d2 = dilog_rational(&q, 2 * p).unwrap();
                assert!(close(&d1, &d2, p as i64 - GUARD_BITS as i64), "li2 {q} @ {p}");
            }
        }
    }

    #[test]
    fn log_additivity() {
        let p = 160;
        for (a, b) in [(rat2(3, 2), rat2(5, 7)), (rat(10), rat2(1, 4))] {
            let lhs = log_rational(&(&a * &b), p).unwrap();
            let rhs = log_rational(&a, p).unwrap().add(&log_rational(&b, p).unwrap());
            assert!(close(&lhs, &rhs, p as i64 - 2 * GUARD_BITS as i64));
        }
    }
}
