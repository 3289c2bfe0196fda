//! Certified real-root isolation for rational polynomials: Sturm chains for
//! counting, bisection for isolation and refinement.

use crate::error::{Error, Result};
use crate::exact::{rat, rat2, Poly, Rat};
use crate::hiprec::{bits_for_digits, BigFloat};
use num_traits::{One, Signed, Zero};

/// A certified enclosure lo <= root <= hi; `lo == hi` marks an exact rational
/// root. `value` is the midpoint at working precision.
#[derive(Clone, Debug)]
pub struct RootEnclosure {
    pub lo: Rat,
    pub hi: Rat,
    pub value: BigFloat,
}

impl RootEnclosure {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// Certified sign of the enclosed root; None when the enclosure straddles 0.
    pub fn sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    /// Enclosure of |root|, requiring a determined sign.
    pub fn abs_interval(&self) -> Option<(Rat, Rat)> {
        match self.sign()? {
            0 => Some((Rat::zero(), Rat::zero())),
            1 => Some((self.lo.clone(), self.hi.clone())),
            _ => Some((-self.hi.clone(), -self.lo.clone())),
        }
    }
}

/// Scale a polynomial by a positive constant so coefficients are primitive
/// integers; sign structure is preserved (unlike `Poly::primitive`).
fn pos_primitive(p: &Poly) -> Poly {
    if p.is_zero() {
        return p.clone();
    }
    let c = p.content().abs();
    p.scale(&c.recip())
}

/// Sturm chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k).
fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![pos_primitive(p), pos_primitive(&p.derivative())];
    loop {
        let k = chain.len();
        if chain[k - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[k - 2].divrem(&chain[k - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push(pos_primitive(&r.neg()));
    }
}

fn sign_variations(chain: &[Poly], x: &Rat) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None;
    for p in chain {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let neg = v.is_negative();
        if let Some(l) = last {
            if l != neg {
                count += 1;
            }
        }
        last = Some(neg);
    }
    count
}

/// Number of distinct real roots in the half-open interval (lo, hi].
pub fn count_roots_half_open(p: &Poly, lo: &Rat, hi: &Rat) -> usize {
    let sf = p.squarefree_part();
    if sf.deg().map_or(true, |d| d == 0) {
        return 0;
    }
    let chain = sturm_chain(&sf);
    sign_variations(&chain, lo).saturating_sub(sign_variations(&chain, hi))
}

/// Number of distinct real roots in the closed interval [lo, hi].
pub fn count_roots_closed(p: &Poly, lo: &Rat, hi: &Rat) -> usize {
    let mut c = count_roots_half_open(p, lo, hi);
    if p.eval(lo).is_zero() {
        c += 1;
    }
    c
}

/// Cauchy bound: all real roots lie in (-m, m).
fn root_bound(p: &Poly) -> Rat {
    let lead = p.leading();
    let mut m = Rat::zero();
    for c in p.coeffs() {
        let t = (c / &lead).abs();
        if t > m {
            m = t;
        }
    }
    m + rat(1)
}

/// Pick a subdivision point in (a, b) where p does not vanish.
fn split_point(p: &Poly, a: &Rat, b: &Rat) -> Rat {
    let mid = (a + b) * rat2(1, 2);
    if !p.eval(&mid).is_zero() {
        return mid;
    }
    // p has at most deg roots; one of deg+2 distinct interior points survives
    let w = b - a;
    let deg = p.deg0() as i64;
    for k in 3..=deg + 4 {
        let cand = a + &w * rat2(1, k);
        if !p.eval(&cand).is_zero() {
            return cand;
        }
    }
    unreachable!("more vanishing points than the degree allows");
}

/// Isolate all real roots of a squarefree polynomial into disjoint rational
/// intervals, refined to roughly `digits` significant digits. Results are
/// ordered increasingly.
pub fn isolate_real_roots(p: &Poly, digits: u32) -> Result<Vec<RootEnclosure>> {
    if p.deg().map_or(true, |d| d < 1) {
        return Err(Error::InvalidInput("root isolation needs degree >= 1".into()));
    }
    if !p.is_squarefree() {
        return Err(Error::InvalidInput(
            "root isolation requires a squarefree polynomial (take squarefree_part first)".into(),
        ));
    }
    let chain = sturm_chain(p);
    let m = root_bound(p);
    let lo = -&m;
    let hi = m.clone();
    // p(±m) != 0 since all roots are inside (-m, m)
    let total = sign_variations(&chain, &lo).saturating_sub(sign_variations(&chain, &hi));
    let mut isolated: Vec<(Rat, Rat)> = Vec::new();
    let mut stack = vec![(lo, hi, total)];
    while let Some((a, b, cnt)) = stack.pop() {
        match cnt {
            0 => {}
            1 => isolated.push((a, b)),
            _ => {
                let mid = split_point(p, &a, &b);
                let va = sign_variations(&chain, &a);
                let vm = sign_variations(&chain, &mid);
                let vb = sign_variations(&chain, &b);
                stack.push((a, mid.clone(), va - vm));
                stack.push((mid, b, vm - vb));
            }
        }
    }
    isolated.sort_by(|x, y| x.0.cmp(&y.0));

    let prec = bits_for_digits(digits) + 16;
    let mut out = Vec::with_capacity(isolated.len());
    for (mut a, mut b) in isolated {
        // ensure a strict sign change for plain bisection
        let mut exact: Option<Rat> = None;
        if p.eval(&a).is_zero() {
            exact = Some(a.clone());
        } else if p.eval(&b).is_zero() {
            exact = Some(b.clone());
        }
        if exact.is_none() {
            debug_assert!(p.eval(&a).is_negative() != p.eval(&b).is_negative());
            let tol_of = |x: &Rat, y: &Rat| {
                let scale = x.abs().max(y.abs()) + Rat::one();
                scale * rat2(1, 10).pow(digits as i32)
            };
            while &b - &a > tol_of(&a, &b) {
                let mid = (&a + &b) * rat2(1, 2);
                let v = p.eval(&mid);
                if v.is_zero() {
                    exact = Some(mid);
                    break;
                }
                if v.is_negative() == p.eval(&a).is_negative() {
                    a = mid;
                } else {
                    b = mid;
                }
            }
        }
        let enc = match exact {
            Some(r) => RootEnclosure {
                value: BigFloat::from_rat(&r, prec),
                lo: r.clone(),
                hi: r,
            },
            None => RootEnclosure {
                value: BigFloat::from_rat(&((&a + &b) * rat2(1, 2)), prec),
                lo: a,
                hi: b,
            },
        };
        out.push(enc);
    }
    Ok(out)
}

/// Refine an enclosure of a simple root of `p` down to the given width.
pub fn refine_enclosure(p: &Poly, enc: &RootEnclosure, width: &Rat, prec: u32) -> RootEnclosure {
    if enc.is_exact() {
        return enc.clone();
    }
    let (mut a, mut b) = (enc.lo.clone(), enc.hi.clone());
    let neg_a = p.eval(&a).is_negative();
    while &b - &a > *width {
        let mid = (&a + &b) * rat2(1, 2);
        let v = p.eval(&mid);
        if v.is_zero() {
            return RootEnclosure {
                value: BigFloat::from_rat(&mid, prec),
                lo: mid.clone(),
                hi: mid,
            };
        }
        if v.is_negative() == neg_a {
            a = mid;
        } else {
            b = mid;
        }
    }
    RootEnclosure {
        value: BigFloat::from_rat(&((&a + &b) * rat2(1, 2)), prec),
        lo: a,
        hi: b,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Var;

    fn pn(coeffs: &[i64]) -> Poly {
        Poly::from_i64(Var::BigN, coeffs)
    }

    #[test]
    fn warmup_indicial_roots() {
        // N^2 - 6N + 1: roots 3 +- 2 sqrt 2
        let p = pn(&[1, -6, 1]);
        let roots = isolate_real_roots(&p, 30).unwrap();
        assert_eq!(roots.len(), 2);
        let small = &roots[0];
        let large = &roots[1];
        // 3 - 2 sqrt2 = 0.17157287525381..., 3 + 2 sqrt2 = 5.82842712474619...
        let s = small.value.to_decimal(15);
        let l = large.value.to_decimal(15);
        assert!(s.starts_with("0.171572875253"), "{s}");
        assert!(l.starts_with("5.82842712474"), "{l}");
        for r in &roots {
            assert!(r.lo <= r.hi);
            let vr = r.value.to_rat();
            assert!(r.lo <= vr && vr <= r.hi);
        }
    }

    #[test]
    fn exact_rational_root() {
        // N - 1
        let p = pn(&[-1, 1]);
        let roots = isolate_real_roots(&p, 10).unwrap();
        assert_eq!(roots.len(), 1);
        assert!(roots[0].is_exact());
        assert_eq!(roots[0].lo, rat(1));
    }

    #[test]
    fn salikhov_a1_cubic_roots() {
        // 3N^3 - 4325N^2 - 79N + 1
        let p = pn(&[1, -79, -4325, 3]);
        let roots = isolate_real_roots(&p, 20).unwrap();
        assert_eq!(roots.len(), 3);
        assert!(roots[0].value.to_decimal(4).starts_with("-0.02687"));
        assert!(roots[1].value.to_decimal(4).starts_with("0.008604") || roots[1].value.to_decimal(4).starts_with("0.008605"));
        assert!(roots[2].value.to_decimal(6).starts_with("1441.68"));
    }

    #[test]
    fn no_real_roots() {
        let p = pn(&[1, 0, 1]); // N^2 + 1
        let roots = isolate_real_roots(&p, 10).unwrap();
        assert!(roots.is_empty());
    }

    #[test]
    fn counting() {
        let p = pn(&[0, -1, 0, 1]); // N^3 - N = N(N-1)(N+1)
        assert_eq!(count_roots_half_open(&p, &rat(-2), &rat(2)), 3);
        assert_eq!(count_roots_half_open(&p, &rat(0), &rat(2)), 1);
        assert_eq!(count_roots_closed(&p, &rat(0), &rat(2)), 2);
        assert_eq!(count_roots_closed(&p, &rat(-1), &rat(1)), 3);
    }

    #[test]
    fn refinement_shrinks_and_contains() {
        let p = pn(&[-2, 0, 1]); // N^2 - 2
        let roots = isolate_real_roots(&p, 5).unwrap();
        let pos = roots.iter().find(|r| r.lo.is_positive()).unwrap();
        let fine = refine_enclosure(&p, pos, &rat2(1, 1_000_000_000), 96);
        assert!(fine.hi.clone() - fine.lo.clone() <= rat2(1, 1_000_000_000));
        assert!(fine.lo >= pos.lo && fine.hi <= pos.hi);
        let s = fine.value.to_decimal(9);
        assert!(s.starts_with("1.41421356"), "{s}");
    }
}
