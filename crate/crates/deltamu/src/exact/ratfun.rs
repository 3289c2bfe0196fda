//! Rational functions num/den over Q in canonical form.

use super::poly::{Poly, Var};
use super::rat::Rat;
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::fmt;

/// Reduced rational function. Canonical form: gcd(num, den) = 1 and den is
/// integer-primitive with positive leading coefficient, so equality is
/// structural.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if num.var() != den.var() {
            return Err(Error::VariableMismatch(num.var(), den.var()));
        }
        if den.is_zero() {
            return Err(Error::ZeroInput("rational function denominator"));
        }
        Ok(Self::canon(num, den))
    }

    fn canon(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFun {
                num,
                den: Poly::one(den.var()),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.deg().is_some_and(|d| d > 0) {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        } else {
            (num, den)
        };
        let c = den.content();
        RatFun {
            num: num.scale(&c.recip()),
            den: den.scale(&c.recip()),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        let var = p.var();
        RatFun {
            num: p,
            den: Poly::one(var),
        }
    }

    pub fn zero(var: Var) -> Self {
        RatFun::from_poly(Poly::zero(var))
    }

    pub fn one(var: Var) -> Self {
        RatFun::from_poly(Poly::one(var))
    }

    pub fn constant(var: Var, c: Rat) -> Self {
        RatFun::from_poly(Poly::constant(var, c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn var(&self) -> Var {
        self.num.var()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.deg() == Some(0)
    }

    pub fn add(&self, other: &RatFun) -> RatFun {
        RatFun::canon(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &RatFun) -> RatFun {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFun {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFun) -> RatFun {
        RatFun::canon(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &RatFun) -> Result<RatFun> {
        if other.is_zero() {
            return Err(Error::ZeroInput("rational function division"));
        }
        Ok(RatFun::canon(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn scale(&self, c: &Rat) -> RatFun {
        RatFun::canon(self.num.scale(c), self.den.clone())
    }

    pub fn recip(&self) -> Result<RatFun> {
        RatFun::one(self.var()).div(self)
    }

    pub fn pow(&self, e: usize) -> RatFun {
        let mut out = RatFun::one(self.var());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Quotient-rule derivative, reduced.
    pub fn derivative(&self) -> RatFun {
        let n = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        RatFun::canon(n, self.den.mul(&self.den))
    }

    /// Exact evaluation; errors at a pole.
    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::PoleOnPath(format!("{x}")));
        }
        Ok(self.num.eval(x) / d)
    }

    /// Order of vanishing at a rational point: multiplicity of (v - x0) in num
    /// minus multiplicity in den (negative at a pole).
    pub fn order_at(&self, x0: &Rat) -> i64 {
        if self.is_zero() {
            return i64::MAX;
        }
        let lin = Poly::new(self.var(), vec![-x0.clone(), Rat::one()]);
        self.num.multiplicity_of(&lin) as i64 - self.den.multiplicity_of(&lin) as i64
    }

    /// Logarithmic derivative f'/f, reduced. All poles are simple.
    pub fn log_derivative(&self) -> Result<RatFun> {
        if self.is_zero() {
            return Err(Error::ZeroInput("log derivative of zero"));
        }
        // f = num/den -> f'/f = num'/num - den'/den
        let a = RatFun::canon(self.num.derivative(), self.num.clone());
        let b = RatFun::canon(self.den.derivative(), self.den.clone());
        Ok(a.sub(&b))
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            let c = self.den.leading();
            write!(f, "{}", self.num.scale(&c.recip()))
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat2};

    fn px(coeffs: &[i64]) -> Poly {
        Poly::from_i64(Var::X, coeffs)
    }

    #[test]
    fn canonical_reduction() {
        // (x^2-1)/(2x-2) -> (x+1)/2
        let f = RatFun::new(px(&[-1, 0, 1]), px(&[-2, 2])).unwrap();
        assert_eq!(f.num(), &px(&[1, 1]).scale(&rat2(1, 2)));
        assert_eq!(f.den(), &px(&[1]));
    }

    #[test]
    fn canon_idempotent() {
        let f = RatFun::new(px(&[0, 2, 4]), px(&[-6, 0, 2])).unwrap();
        let g = RatFun::new(f.num().clone(), f.den().clone()).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn arithmetic() {
        let f = RatFun::new(px(&[1]), px(&[0, 1])).unwrap(); // 1/x
        let g = RatFun::new(px(&[1]), px(&[1, 1])).unwrap(); // 1/(1+x)
        let h = f.sub(&g); // 1/(x(1+x))
        assert_eq!(h, RatFun::new(px(&[1]), px(&[0, 1, 1])).unwrap());
        assert_eq!(h.eval(&rat(1)).unwrap(), rat2(1, 2));
        assert!(h.eval(&rat(0)).is_err());
    }

    #[test]
    fn derivative_reduces() {
        // d/dx (1/(1+x)) = -1/(1+x)^2
        let f = RatFun::new(px(&[1]), px(&[1, 1])).unwrap();
        let d = f.derivative();
        assert_eq!(d, RatFun::new(px(&[-1]), px(&[1, 2, 1])).unwrap());
    }

    #[test]
    fn log_derivative_simple_poles() {
        // R = x(1-x)/(1+x): R'/R = 1/x - 1/(1-x)... combined has simple poles only
        let r = RatFun::new(px(&[0, 1, -1]), px(&[1, 1])).unwrap();
        let ld = r.log_derivative().unwrap();
        let den = ld.den();
        assert!(den.is_squarefree());
    }

    #[test]
    fn order_at_points() {
        let r = RatFun::new(px(&[0, 1, -1]), px(&[1, 1])).unwrap(); // x(1-x)/(1+x)
        assert_eq!(r.order_at(&rat(0)), 1);
        assert_eq!(r.order_at(&rat(1)), 1);
        assert_eq!(r.order_at(&rat(-1)), -1);
        assert_eq!(r.order_at(&rat(2)), 0);
    }
}
