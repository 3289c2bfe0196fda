//! Dense univariate polynomials over Q.

use super::rat::{rat, Int, Rat};
use crate::error::{Error, Result};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Variable tag carried by every polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Var {
    /// Integration variable.
    X,
    /// Recurrence index.
    N,
    /// Shift symbol of characteristic polynomials.
    BigN,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X => write!(f, "x"),
            Var::N => write!(f, "n"),
            Var::BigN => write!(f, "N"),
        }
    }
}

/// Dense polynomial: `coeffs[i]` is the coefficient of `var^i`.
/// Invariant: the last stored coefficient is nonzero; the zero polynomial
/// stores no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    var: Var,
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(var: Var, mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { var, coeffs }
    }

    pub fn zero(var: Var) -> Self {
        Poly { var, coeffs: Vec::new() }
    }

    pub fn one(var: Var) -> Self {
        Poly::constant(var, Rat::one())
    }

    pub fn constant(var: Var, c: Rat) -> Self {
        Poly::new(var, vec![c])
    }

    /// c * var^k
    pub fn monomial(var: Var, c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero(var);
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly { var, coeffs }
    }

    /// The polynomial `var`.
    pub fn var_poly(var: Var) -> Self {
        Poly::monomial(var, Rat::one(), 1)
    }

    pub fn from_i64(var: Var, coeffs: &[i64]) -> Self {
        Poly::new(var, coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree with deg(0) = 0, for size arithmetic.
    pub fn deg0(&self) -> usize {
        self.deg().unwrap_or(0)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    fn same_var(&self, other: &Poly) -> Var {
        debug_assert_eq!(self.var, other.var, "polynomial variable mismatch");
        self.var
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let var = self.same_var(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Poly::new(var, out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let var = self.same_var(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(var);
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::new(var, out)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.var);
        }
        Poly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut out = Poly::one(self.var);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Long division: returns (quotient, remainder).
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let var = self.same_var(d);
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.deg().unwrap();
        if self.deg().map_or(true, |n| n < dd) {
            return (Poly::zero(var), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let n = rem.len() - 1;
        let mut quot = vec![Rat::zero(); n - dd + 1];
        let lead = d.leading();
        for k in (0..=n - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for j in 0..=dd {
                    let sub = &c * &d.coeffs[j];
                    rem[k + j] -= sub;
                }
            }
            quot[k] = c;
        }
        (Poly::new(var, quot), Poly::new(var, rem))
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InternalCheck(format!(
                "inexact polynomial division: {self} by {d}"
            )))
        }
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(self.var);
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat(i as i64))
            .collect();
        Poly::new(self.var, out)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> Rat {
        self.eval(&rat(x))
    }

    /// Positive rational c with self = c * P, P integer-primitive with positive
    /// leading coefficient; the sign is carried by c.
    pub fn content(&self) -> Rat {
        if self.is_zero() {
            return Rat::zero();
        }
        let mut den_lcm = Int::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = Int::zero();
        for c in &self.coeffs {
            let scaled = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&scaled);
        }
        let mut content = Rat::new(num_gcd, den_lcm);
        if self.leading().is_negative() {
            content = -content;
        }
        content
    }

    /// Integer-primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        self.scale(&c.recip())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }

    /// Greatest common divisor (monic), by a primitive remainder sequence.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let var = self.same_var(other);
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.is_zero() {
            return b.monic();
        }
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.primitive();
        }
        let _ = var;
        a.monic()
    }

    /// Extended gcd: returns (g, u, v) with u*self + v*other = g, g monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let var = self.same_var(other);
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = Poly::one(var);
        let mut s1 = Poly::zero(var);
        let mut t0 = Poly::zero(var);
        let mut t1 = Poly::one(var);
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lc = r0.leading().recip();
        (r0.scale(&lc), s0.scale(&lc), t0.scale(&lc))
    }

    /// self / gcd(self, self'): same roots, all simple.
    pub fn squarefree_part(&self) -> Poly {
        if self.is_zero() || self.deg() == Some(0) {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g.scale(&self.leading().recip()).monic())
            .unwrap_or_else(|_| self.clone())
            .monic()
    }

    pub fn is_squarefree(&self) -> bool {
        if self.deg().map_or(true, |d| d <= 1) {
            return true;
        }
        self.gcd(&self.derivative()).deg() == Some(0)
    }

    /// Substitute var -> var + k.
    pub fn shift_arg(&self, k: i64) -> Poly {
        if self.coeffs.len() <= 1 || k == 0 {
            return self.clone();
        }
        let lin = Poly::new(self.var, vec![rat(k), Rat::one()]);
        let mut acc = Poly::zero(self.var);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin);
            acc = acc.add(&Poly::constant(self.var, c.clone()));
        }
        acc
    }

    /// Multiplicity of `d` in `self` by trial division (`d` nonconstant).
    pub fn multiplicity_of(&self, d: &Poly) -> usize {
        let mut m = 0;
        let mut f = self.clone();
        loop {
            if f.is_zero() {
                return m;
            }
            let (q, r) = f.divrem(d);
            if r.is_zero() {
                m += 1;
                f = q;
            } else {
                return m;
            }
        }
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if i == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                if i == 1 {
                    write!(f, "{}", self.var)?;
                } else {
                    write!(f, "{}^{}", self.var, i)?;
                }
            }
            first = false;
        }
        Ok(())
    }
}

/// Monic gcd; errors on variable mismatch.
pub fn poly_gcd(p: &Poly, q: &Poly) -> Result<Poly> {
    if p.var() != q.var() {
        return Err(Error::VariableMismatch(p.var(), q.var()));
    }
    Ok(p.gcd(q))
}

/// Yun's squarefree factorization: returns (unit, factors) with
/// `p = unit * prod factor_i ^ mult_i`, factors monic, squarefree, pairwise coprime.
pub fn squarefree_factorization(p: &Poly) -> Result<(Rat, Vec<(Poly, usize)>)> {
    if p.is_zero() {
        return Err(Error::ZeroInput("squarefree_factorization"));
    }
    let unit = p.leading();
    let f = p.monic();
    if f.deg() == Some(0) {
        return Ok((unit, Vec::new()));
    }
    let fp = f.derivative();
    let g = f.gcd(&fp);
    if g.deg() == Some(0) {
        return Ok((unit, vec![(f, 1)]));
    }
    let mut out = Vec::new();
    let mut c = f.div_exact(&g)?;
    let mut d = fp.div_exact(&g)?.sub(&c.derivative());
    let mut i = 1usize;
    while c.deg() != Some(0) {
        let a = c.gcd(&d);
        if a.deg().is_some_and(|dg| dg > 0) {
            out.push((a.clone(), i));
        }
        c = c.div_exact(&a)?;
        d = d.div_exact(&a)?.sub(&c.derivative());
        i += 1;
    }
    Ok((unit, out))
}
