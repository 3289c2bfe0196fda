//! Arbitrary-precision binary floating point on top of BigInt.
//!
//! A value is `mant * 2^exp` with |mant| kept at most `prec` bits; arithmetic
//! rounds to nearest (ties away from zero). There is no global rounding-mode
//! state; callers pick a working precision with enough guard bits (the
//! documented guard margin of the crate's numeric functions is 16 bits).

use crate::error::{Error, Result};
use crate::exact::{Int, Rat};
use num_bigint::Sign;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

#[derive(Clone, Debug)]
pub struct BigFloat {
    mant: Int,
    exp: i64,
    prec: u32,
}

impl BigFloat {
    pub fn zero(prec: u32) -> Self {
        BigFloat { mant: Int::zero(), exp: 0, prec }
    }

    pub fn one(prec: u32) -> Self {
        BigFloat::from_int(Int::one(), prec)
    }

    pub fn from_int(i: Int, prec: u32) -> Self {
        BigFloat { mant: i, exp: 0, prec }.normalized()
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        BigFloat::from_int(Int::from(v), prec)
    }

    /// mant * 2^exp, normalized to prec.
    pub(crate) fn from_scaled(mant: Int, exp: i64, prec: u32) -> Self {
        BigFloat { mant, exp, prec }.normalized()
    }

    /// Nearest representable value of p/q at this precision.
    pub fn from_rat(q: &Rat, prec: u32) -> Self {
        if q.is_zero() {
            return BigFloat::zero(prec);
        }
        let num = q.numer().clone();
        let den = q.denom().clone();
        // scale so的 quotient has prec+8 significant bits
        let s = (prec as i64 + 8) + (den.bits() as i64 - num.bits() as i64);
        let s_pos = s.max(0) as u64;
        let scaled = &num << s_pos;
        let qu = div_round_nearest(&scaled, &den);
        BigFloat { mant: qu, exp: -(s_pos as i64), prec }.normalized()
    }

    pub fn from_f64(v: f64, prec: u32) -> Result<Self> {
        if !v.is_finite() {
            return Err(Error::InvalidInput(format!("non-finite float {v}")));
        }
        if v == 0.0 {
            return Ok(BigFloat::zero(prec));
        }
        let bits = v.to_bits();
        let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
        let exponent = ((bits >> 52) & 0x7ff) as i64;
        let fraction = bits & ((1u64 << 52) - 1);
        let (mant, exp) = if exponent == 0 {
            (fraction, -1074i64)
        } else {
            (fraction | (1u64 << 52), exponent - 1075)
        };
        Ok(BigFloat {
            mant: Int::from(sign * mant as i64),
            exp,
            prec,
        }
        .normalized())
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn sign(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// Position of the most significant bit: value is in [2^(mag-1), 2^mag).
    /// Zero returns i64::MIN.
    pub fn mag(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exp + self.mant.bits() as i64
        }
    }

    fn normalized(mut self) -> Self {
        if self.mant.is_zero() {
            self.exp = 0;
            return self;
        }
        let bits = self.mant.bits();
        if bits > self.prec as u64 {
            let excess = bits - self.prec as u64;
            let neg = self.mant.is_negative();
            let half = Int::one() << (excess - 1);
            let q = (self.mant.magnitude().to_owned() + half.magnitude()) >> excess;
            self.mant = Int::from_biguint(if neg { Sign::Minus } else { Sign::Plus }, q);
            self.exp += excess as i64;
            // carry out of rounding can add a bit; harmless
        }
        self
    }

    pub fn at_prec(&self, prec: u32) -> Self {
        BigFloat { mant: self.mant.clone(), exp: self.exp, prec }.normalized()
    }

    pub fn neg(&self) -> Self {
        BigFloat { mant: -self.mant.clone(), exp: self.exp, prec: self.prec }
    }

    pub fn abs(&self) -> Self {
        BigFloat { mant: self.mant.abs(), exp: self.exp, prec: self.prec }
    }

    /// Exact scaling by 2^k.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        BigFloat { mant: self.mant.clone(), exp: self.exp + k, prec: self.prec }
    }

    pub fn add(&self, other: &BigFloat) -> Self {
        let prec = self.prec.max(other.prec);
        if self.is_zero() {
            return other.at_prec(prec);
        }
        if other.is_zero() {
            return self.at_prec(prec);
        }
        // negligibility cutoff keeps shifts bounded
        let cut = prec as i64 + 8;
        if self.mag() - other.mag() > cut {
            return self.at_prec(prec);
        }
        if other.mag() - self.mag() > cut {
            return other.at_prec(prec);
        }
        let (a, b) = (self, other);
        let (mant, exp) = if a.exp >= b.exp {
            ((&a.mant << (a.exp - b.exp) as u64) + &b.mant, b.exp)
        } else {
            ((&b.mant << (b.exp - a.exp) as u64) + &a.mant, a.exp)
        };
        BigFloat { mant, exp, prec }.normalized()
    }

    pub fn sub(&self, other: &BigFloat) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &BigFloat) -> Self {
        let prec = self.prec.max(other.prec);
        BigFloat {
            mant: &self.mant * &other.mant,
            exp: self.exp + other.exp,
            prec,
        }
        .normalized()
    }

    pub fn mul_small(&self, k: i64) -> Self {
        BigFloat {
            mant: &self.mant * k,
            exp: self.exp,
            prec: self.prec,
        }
        .normalized()
    }

    pub fn div(&self, other: &BigFloat) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::InvalidInput("division by zero".into()));
        }
        let prec = self.prec.max(other.prec);
        if self.is_zero() {
            return Ok(BigFloat::zero(prec));
        }
        let s = (prec as i64 + 8) + (other.mant.bits() as i64 - self.mant.bits() as i64);
        let s_pos = s.max(0) as u64;
        let num = &self.mant << s_pos;
        let q = div_round_nearest(&num, &other.mant);
        Ok(BigFloat {
            mant: q,
            exp: self.exp - s_pos as i64 - other.exp,
            prec,
        }
        .normalized())
    }

    pub fn div_small(&self, k: i64) -> Self {
        debug_assert!(k != 0);
        if self.is_zero() {
            return self.clone();
        }
        let s = self.prec as u64 + 8;
        let num = &self.mant << s;
        let q = div_round_nearest(&num, &Int::from(k));
        BigFloat { mant: q, exp: self.exp - s as i64, prec: self.prec }.normalized()
    }

    /// Square root; errors on negative input.
    pub fn sqrt(&self) -> Result<Self> {
        if self.sign() < 0 {
            return Err(Error::InvalidInput("sqrt of negative value".into()));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let prec = self.prec;
        let want = 2 * (prec as u64 + 8);
        let bits = self.mant.bits();
        let mut s = want.saturating_sub(bits);
        if (self.exp - s as i64) % 2 != 0 {
            s += 1;
        }
        let scaled = &self.mant << s;
        let root = scaled.sqrt();
        Ok(BigFloat {
            mant: root,
            exp: (self.exp - s as i64) / 2,
            prec,
        }
        .normalized())
    }

    pub fn cmp_value(&self, other: &BigFloat) -> Ordering {
        let d = self.sub(other);
        match d.sign() {
            x if x < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }

    /// True when |self| < |anchor| * 2^(-bits); used for series termination.
    pub fn negligible_vs(&self, anchor: &BigFloat, bits: i64) -> bool {
        if self.is_zero() {
            return true;
        }
        if anchor.is_zero() {
            return false;
        }
        anchor.mag() - self.mag() > bits
    }

    /// Exact conversion to a rational.
    pub fn to_rat(&self) -> Rat {
        if self.exp >= 0 {
            Rat::from_integer(&self.mant << self.exp as u64)
        } else {
            Rat::new(self.mant.clone(), Int::one() << (-self.exp) as u64)
        }
    }

    /// Nearest integer.
    pub fn round_int(&self) -> Int {
        if self.is_zero() {
            return Int::zero();
        }
        if self.exp >= 0 {
            &self.mant << self.exp as u64
        } else {
            let sh = (-self.exp) as u64;
            let neg = self.mant.is_negative();
            let half = num_bigint::BigUint::one() << (sh - 1);
            let q = (self.mant.magnitude() + half) >> sh;
            Int::from_biguint(if neg { Sign::Minus } else { Sign::Plus }, q)
        }
    }

    /// Rough f64 value for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits();
        let (top, sh) = if bits > 53 {
            ((&self.mant >> (bits - 53)).to_i64().unwrap_or(0), bits as i64 - 53)
        } else {
            (self.mant.to_i64().unwrap_or(0), 0)
        };
        let e = (self.exp + sh) as i32;
        if e > 1000 {
            return if top >= 0 { f64::INFINITY } else { f64::NEG_INFINITY };
        }
        if e < -1070 {
            return 0.0;
        }
        top as f64 * 2f64.powi(e)
    }

    /// Decimal rendering with exactly `sig` significant digits.
    pub fn to_decimal(&self, sig: usize) -> String {
        let sig = sig.max(1);
        if self.is_zero() {
            return "0".to_string();
        }
        // first estimate of the decimal exponent
        let mut d = ((self.mag() - 1) as f64 * std::f64::consts::LOG10_2).floor() as i64;
        loop {
            let y = self.scaled_decimal_int(sig as i64 - 1 - d);
            let digits = y.magnitude().to_string().len() as i64;
            if digits > sig as i64 {
                d += digits - sig as i64;
                continue;
            }
            if digits < sig as i64 {
                d -= sig as i64 - digits;
                continue;
            }
            return format_decimal(&y, d, sig);
        }
    }

    /// round(self * 10^k) as an integer.
    fn scaled_decimal_int(&self, k: i64) -> Int {
        let mut mant = self.mant.clone();
        let mut exp = self.exp;
        if k >= 0 {
            mant *= Int::from(10u32).pow(k as u32);
        } else {
            // divide by 10^-k with rounding at the end; fold into exp shift
            let p = Int::from(10u32).pow((-k) as u32);
            // value*10^k = mant*2^exp/p: scale mant up to keep precision
            let s = p.bits() + 8;
            mant <<= s;
            exp -= s as i64;
            mant = div_round_nearest(&mant, &p);
        }
        let v = BigFloat { mant, exp, prec: u32::MAX };
        v.round_int()
    }
}

fn div_round_nearest(num: &Int, den: &Int) -> Int {
    let neg = num.is_negative() ^ den.is_negative();
    let n = num.magnitude();
    let d = den.magnitude();
    let (q, r) = n.div_rem(d);
    let q = if &(&r << 1u32) >= d { q + 1u32 } else { q };
    Int::from_biguint(if neg { Sign::Minus } else { Sign::Plus }, q)
}

fn format_decimal(y: &Int, d: i64, sig: usize) -> String {
    let neg = y.is_negative();
    let digits = y.magnitude().to_string();
    debug_assert_eq!(digits.len(), sig);
    let sign = if neg { "-" } else { "" };
    if d >= 0 && (d as usize) < sig.max(21) && (d as usize) < 21 {
        // fixed notation with the point inside or right after the digits
        let ipart = d as usize + 1;
        if ipart <= digits.len() {
            let (i, f) = digits.split_at(ipart);
            if f.is_empty() {
                format!("{sign}{i}")
            } else {
                format!("{sign}{i}.{f}")
            }
        } else {
            format!("{sign}{digits}{}", "0".repeat(ipart - digits.len()))
        }
    } else if d < 0 && d >= -5 {
        format!("{sign}0.{}{digits}", "0".repeat((-d - 1) as usize))
    } else {
        let (first, rest) = digits.split_at(1);
        if rest.is_empty() {
            format!("{sign}{first}e{d}")
        } else {
            format!("{sign}{first}.{rest}e{d}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat2};

    #[test]
    fn basic_arithmetic() {
        let p = 128;
        let a = BigFloat::from_rat(&rat2(1, 3), p);
        let b = BigFloat::from_rat(&rat2(1, 6), p);
        let s = a.add(&b); // 1/2 exactly representable
        let half = BigFloat::from_rat(&rat2(1, 2), p);
        assert!(s.sub(&half).negligible_vs(&half, 120));
    }

    #[test]
    fn division_and_sqrt() {
        let p = 192;
        let two = BigFloat::from_i64(2, p);
        let r = two.sqrt().unwrap();
        let back = r.mul(&r);
        assert!(back.sub(&two).negligible_vs(&two, p as i64 - 16));
        let q = BigFloat::one(p).div(&r).unwrap();
        let prod = q.mul(&r);
        let one = BigFloat::one(p);
        assert!(prod.sub(&one).negligible_vs(&one, p as i64 - 16));
    }

    #[test]
    fn decimal_output() {
        let p = 128;
        let x = BigFloat::from_rat(&rat2(1, 4), p);
        assert_eq!(x.to_decimal(3), "0.250");
        let y = BigFloat::from_i64(1234, p);
        assert_eq!(y.to_decimal(4), "1234");
        assert_eq!(y.to_decimal(2), "1200");
        let z = BigFloat::from_rat(&rat2(-1, 65536), p);
        assert_eq!(z.to_decimal(6), "-0.0000152588");
    }

    #[test]
    fn round_int_ties() {
        let p = 64;
        assert_eq!(BigFloat::from_rat(&rat2(7, 2), p).round_int(), Int::from(4));
        assert_eq!(BigFloat::from_rat(&rat2(-7, 2), p).round_int(), Int::from(-4));
        assert_eq!(BigFloat::from_rat(&rat2(10, 4), p).round_int(), Int::from(3));
    }

    #[test]
    fn from_f64_exact() {
        let x = BigFloat::from_f64(0.5, 64).unwrap();
        assert_eq!(x.to_rat(), rat2(1, 2));
        let y = BigFloat::from_f64(-3.25, 64).unwrap();
        assert_eq!(y.to_rat(), rat2(-13, 4));
    }

    #[test]
    fn negligibility_cutoff_addition() {
        let p = 64;
        let big = BigFloat::from_i64(1, p).shift(100000);
        let one = BigFloat::one(p);
        let s = big.add(&one);
        assert_eq!(s.cmp_value(&big), Ordering::Equal);
        let _ = rat(0);
    }
}
