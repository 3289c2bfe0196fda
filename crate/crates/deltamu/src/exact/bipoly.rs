//! Polynomials in x whose coefficients are polynomials in n; the working ring
//! of the telescoper's certificate identities.

use super::poly::{Poly, Var};
use super::rat::Rat;
use crate::error::{Error, Result};
use std::fmt;

/// Element of Q[n][x]: `coeffs[i]` (a polynomial in n) multiplies x^i.
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly {
    coeffs: Vec<Poly>,
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<Poly>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.var() == Var::N));
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    /// Lift an x-polynomial with rational coefficients.
    pub fn from_xpoly(p: &Poly) -> Self {
        debug_assert_eq!(p.var(), Var::X);
        BiPoly::new(
            p.coeffs()
                .iter()
                .map(|c| Poly::constant(Var::N, c.clone()))
                .collect(),
        )
    }

    /// x-polynomial whose each coefficient is a0 + a1*n for given rational pairs.
    pub fn from_linear_in_n(coeffs: &[(Rat, Rat)]) -> Self {
        BiPoly::new(
            coeffs
                .iter()
                .map(|(c0, c1)| Poly::new(Var::N, vec![c0.clone(), c1.clone()]))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg_x(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> Poly {
        self.coeffs.get(k).cloned().unwrap_or_else(|| Poly::zero(Var::N))
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn max_deg_n(&self) -> usize {
        self.coeffs.iter().map(|c| c.deg0()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let out = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        BiPoly::new(out)
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() || other.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![Poly::zero(Var::N); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        BiPoly::new(out)
    }

    /// Multiply every x-coefficient by an n-polynomial.
    pub fn scale_n(&self, c: &Poly) -> BiPoly {
        BiPoly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn derivative_x(&self) -> BiPoly {
        if self.coeffs.len() <= 1 {
            return BiPoly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&super::rat::rat(i as i64)))
            .collect();
        BiPoly::new(out)
    }

    /// Exact division by an x-polynomial with rational coefficients.
    pub fn div_exact_xpoly(&self, d: &Poly) -> Result<BiPoly> {
        debug_assert_eq!(d.var(), Var::X);
        if d.is_zero() {
            return Err(Error::ZeroInput("bipoly division"));
        }
        if self.is_zero() {
            return Ok(BiPoly::zero());
        }
        let dd = d.deg().unwrap();
        let nd = self.deg_x().unwrap();
        if nd < dd {
            return Err(Error::InternalCheck("inexact bipoly division".into()));
        }
        let lead = d.leading();
        let mut rem: Vec<Poly> = self.coeffs.clone();
        let mut quot = vec![Poly::zero(Var::N); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = rem[k + dd].scale(&lead.recip());
            if !c.is_zero() {
                for j in 0..=dd {
                    let sub = c.scale(&d.coeff(j));
                    rem[k + j] = rem[k + j].sub(&sub);
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|r| !r.is_zero()) {
            return Err(Error::InternalCheck("inexact bipoly division".into()));
        }
        Ok(BiPoly::new(quot))
    }

    /// Substitute n -> n + k in every coefficient.
    pub fn shift_n(&self, k: i64) -> BiPoly {
        BiPoly::new(self.coeffs.iter().map(|c| c.shift_arg(k)).collect())
    }

    /// Substitute a rational value for n, giving an x-polynomial.
    pub fn eval_n(&self, n: &Rat) -> Poly {
        Poly::new(Var::X, self.coeffs.iter().map(|c| c.eval(n)).collect())
    }

    /// Generic order of vanishing at rational x0: index of the first x-power,
    /// after recentering at x0, whose n-coefficient is not identically zero.
    pub fn order_at_x(&self, x0: &Rat) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        // evaluate successive derivatives at x0 until one is nonzero
        let mut cur = self.clone();
        let mut k = 0usize;
        loop {
            let v = Poly::new(
                Var::N,
                {
                    // value at x = x0: sum coeffs[i] * x0^i
                    let mut acc = Poly::zero(Var::N);
                    let mut p = Rat::from_integer(num_bigint::BigInt::from(1));
                    for c in &cur.coeffs {
                        acc = acc.add(&c.scale(&p));
                        p *= x0;
                    }
                    acc.coeffs().to_vec()
                },
            );
            if !v.is_zero() {
                return Some(k);
            }
            cur = cur.derivative_x();
            k += 1;
            if cur.is_zero() {
                return None;
            }
        }
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})*x^{i}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn mul_div_roundtrip() {
        let a = BiPoly::new(vec![
            Poly::from_i64(Var::N, &[1, 2]),
            Poly::from_i64(Var::N, &[0, 1]),
            Poly::from_i64(Var::N, &[3]),
        ]);
        let d = Poly::from_i64(Var::X, &[1, 0, 2]);
        let prod = a.mul(&BiPoly::from_xpoly(&d));
        let q = prod.div_exact_xpoly(&d).unwrap();
        assert_eq!(q, a);
    }

    #[test]
    fn eval_matches() {
        let a = BiPoly::new(vec![
            Poly::from_i64(Var::N, &[1, 1]),
            Poly::from_i64(Var::N, &[2]),
        ]);
        let p = a.eval_n(&rat(3));
        assert_eq!(p, Poly::from_i64(Var::X, &[4, 2]));
    }

    #[test]
    fn order_at_zero() {
        // x^2 * (n + x)
        let a = BiPoly::new(vec![
            Poly::zero(Var::N),
            Poly::zero(Var::N),
            Poly::from_i64(Var::N, &[0, 1]),
            Poly::from_i64(Var::N, &[1]),
        ]);
        assert_eq!(a.order_at_x(&rat(0)), Some(2));
    }
}
