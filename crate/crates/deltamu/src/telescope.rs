//! Creative telescoping for hyperexponential integrands F(n,x) = R(x)^n S(x):
//! find polynomials p_0(n)..p_L(n) and a rational certificate Q(n,x) with
//!
//!   sum_i p_i(n) F(n+i, x) = d/dx [ Q(n,x) F(n,x) ],
//!
//! which, once boundary terms vanish, transfers the recurrence to the integral
//! I(n) = int R^n S dx.
//!
//! Dividing by F turns the telescoping identity into a first-order ODE over
//! Q(n)(x): Q' + L Q = sum_i a_i R^i with L = n R'/R + S'/S. The solver bounds
//! the denominator of Q by a universal-denominator computation from the pole
//! multiplicities of L and of the right-hand side, substitutes Q = P(x)/D(x)
//! with a degree bound on P, and solves the resulting linear system over Q(n).
//! Every returned result carries its certificate and passes
//! [`verify_certificate`] exactly.

use crate::error::{Error, Result};
use crate::exact::{
    nullspace, parse_rat, rat, rat_string, BiPoly, Poly, Rat, RatFun, Var,
};
use crate::recurrence::roots::count_roots_closed;
use crate::recurrence::LinearRecurrence;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// The integral family (R(x), S(x), [lo, hi]); F(n,x) = R(x)^n S(x).
///
/// Construction rejects kernels whose R or S has a pole on the closed
/// interval; endpoint vanishing of R is checked separately by
/// [`boundary_vanishing_check`] since the telescoped identity itself does not
/// need it.
#[derive(Clone, Debug)]
pub struct HyperexponentialKernel {
    r: RatFun,
    s: RatFun,
    lo: Rat,
    hi: Rat,
}

impl HyperexponentialKernel {
    pub fn new(r: RatFun, s: RatFun, lo: Rat, hi: Rat) -> Result<Self> {
        if r.var() != Var::X || s.var() != Var::X {
            return Err(Error::InvalidInput("kernel must be in the variable x".into()));
        }
        if lo >= hi {
            return Err(Error::InvalidInput(format!("empty interval [{lo}, {hi}]")));
        }
        if r.is_zero() {
            return Err(Error::ZeroInput("kernel R"));
        }
        if s.is_zero() {
            return Err(Error::ZeroInput("kernel S"));
        }
        for (name, f) in [("R", &r), ("S", &s)] {
            if count_roots_closed(f.den(), &lo, &hi) > 0 {
                return Err(Error::PoleOnPath(format!(
                    "denominator of {name} vanishes on [{lo}, {hi}]"
                )));
            }
        }
        Ok(HyperexponentialKernel { r, s, lo, hi })
    }

    pub fn r(&self) -> &RatFun {
        &self.r
    }

    pub fn s(&self) -> &RatFun {
        &self.s
    }

    pub fn interval(&self) -> (&Rat, &Rat) {
        (&self.lo, &self.hi)
    }

    /// R(x)^n S(x) as a rational function, for a concrete n.
    pub fn integrand(&self, n: usize) -> RatFun {
        self.r.pow(n).mul(&self.s)
    }

    /// F(n, x) at a rational point.
    pub fn eval(&self, n: usize, x: &Rat) -> Result<Rat> {
        self.integrand(n).eval(x)
    }
}

/// Q(n,x) = num(n,x) / (den_n(n) * den_x(x)).
#[derive(Clone, Debug)]
pub struct Certificate {
    pub num: BiPoly,
    pub den_x: Poly,
    pub den_n: Poly,
}

/// A derived recurrence together with its exactly checkable certificate.
#[derive(Clone, Debug)]
pub struct TelescoperResult {
    pub recurrence: LinearRecurrence,
    pub certificate: Certificate,
    /// Smallest n from which boundary terms provably vanish so the recurrence
    /// holds for the integral; None when they never vanish.
    pub min_valid_n: Option<u32>,
}

/// n R'/R + S'/S as (numerator BiPoly linear in n, denominator x-polynomial),
/// reduced.
fn log_derivative_parts(kernel: &HyperexponentialKernel) -> Result<(BiPoly, Poly)> {
    let r_ld = kernel.r.log_derivative()?; // rational function, simple poles
    let s_ld = kernel.s.log_derivative()?;
    // common denominator
    let den = {
        let g = r_ld.den().gcd(s_ld.den());
        r_ld.den().mul(&s_ld.den().div_exact(&g)?)
    };
    let n_part = r_ld.num().mul(&den.div_exact(r_ld.den())?);
    let c_part = if s_ld.is_zero() {
        Poly::zero(Var::X)
    } else {
        s_ld.num().mul(&den.div_exact(s_ld.den())?)
    };
    // numerator = c_part + n * n_part
    let deg = n_part.deg0().max(c_part.deg0());
    let mut cols = Vec::with_capacity(deg + 1);
    for k in 0..=deg {
        cols.push(Poly::new(Var::N, vec![c_part.coeff(k), n_part.coeff(k)]));
    }
    Ok((BiPoly::new(cols), den))
}

/// Pairwise-coprime squarefree family covering all factors of the inputs.
fn coprime_squarefree_basis(polys: &[&Poly]) -> Vec<Poly> {
    let mut basis: Vec<Poly> = Vec::new();
    let mut work: Vec<Poly> = polys
        .iter()
        .filter(|p| p.deg().is_some_and(|d| d > 0))
        .map(|p| p.squarefree_part().primitive())
        .collect();
    while let Some(d) = work.pop() {
        if d.deg().map_or(true, |dg| dg == 0) {
            continue;
        }
        let mut split = false;
        for i in 0..basis.len() {
            let g = d.gcd(&basis[i]);
            if g.deg().is_some_and(|dg| dg > 0) {
                let b = basis.swap_remove(i);
                let b_rest = b.div_exact(&g).expect("gcd divides");
                let d_rest = d.div_exact(&g).expect("gcd divides");
                work.push(g);
                work.push(b_rest);
                work.push(d_rest);
                split = true;
                break;
            }
        }
        if !split {
            basis.push(d.primitive());
        }
    }
    basis.sort_by(|a, b| (a.deg0(), format!("{a}")).cmp(&(b.deg0(), format!("{b}"))));
    basis
}

/// Universal denominator for Q at order L, from pole multiplicities of the
/// logarithmic derivative and of the right-hand side sum a_i R^i.
fn universal_denominator(kernel: &HyperexponentialKernel, order: usize) -> Poly {
    let r1 = kernel.r.num().primitive();
    let r2 = kernel.r.den().primitive();
    let s1 = kernel.s.num().primitive();
    let s2 = kernel.s.den().primitive();
    let basis = coprime_squarefree_basis(&[&r1, &r2, &s1, &s2]);
    let mut d = Poly::one(Var::X);
    for f in &basis {
        let m1 = r1.multiplicity_of(f) as i64;
        let m2 = r2.multiplicity_of(f) as i64;
        let t1 = s1.multiplicity_of(f) as i64;
        let t2 = s2.multiplicity_of(f) as i64;
        let alpha = m1 - m2;
        let beta = t1 - t2;
        let mut e = (order as i64 * m2 - 1).max(0);
        if alpha == 0 && beta > 0 {
            // residue of L here is the n-free integer beta; a pole of Q of
            // that exact order can hide from the leading-term balance
            e = e.max(beta);
        }
        if e > 0 {
            d = d.mul(&f.pow(e as usize));
        }
    }
    d
}

struct OrderAttempt {
    p: Vec<Poly>,     // recurrence coefficients, cleared to Q[n]
    q_num: BiPoly,    // certificate numerator
    q_den_n: Poly,    // certificate denominator, n-part
    q_den_x: Poly,    // certificate denominator, x-part
}

/// Candidate solutions at a fixed order with a given degree slack, in
/// tie-break order.
fn try_order(
    kernel: &HyperexponentialKernel,
    order: usize,
    slack: usize,
) -> Result<Vec<OrderAttempt>> {
    let r1 = kernel.r.num().clone();
    let r2 = kernel.r.den().clone();
    let (l_num, l_den) = log_derivative_parts(kernel)?;
    let d = universal_denominator(kernel, order);

    // polynomial identity: P' * (D ld) + P * (l_num D - D' ld) = N_a * (D^2 ld / r2^L)
    let a_poly = d.mul(&l_den);
    let b_bi = l_num
        .mul(&BiPoly::from_xpoly(&d))
        .sub(&BiPoly::from_xpoly(&d.derivative().mul(&l_den)));
    let e_poly = d
        .mul(&d)
        .mul(&l_den)
        .div_exact(&r2.pow(order))
        .expect("universal denominator covers r2^L");
    let c_polys: Vec<Poly> = (0..=order)
        .map(|i| r1.pow(i).mul(&r2.pow(order - i)).mul(&e_poly))
        .collect();

    let dc = c_polys.iter().map(|c| c.deg0()).max().unwrap_or(0);
    let delta = (a_poly.deg0().saturating_sub(1)).max(b_bi.deg_x().unwrap_or(0));
    let dp = dc.saturating_sub(delta) + slack;

    // rows: coefficients of x^t; columns: P_0..P_dp then a_0..a_order
    let n_unknowns = dp + 1 + order + 1;
    let t_max = (dp + a_poly.deg0()).max(dp + b_bi.deg_x().unwrap_or(0)).max(dc) + 1;
    let mut m: Vec<Vec<Poly>> = vec![vec![Poly::zero(Var::N); n_unknowns]; t_max + 1];
    for t in 0..=t_max {
        for k in 0..=dp {
            // from P'·A: P_k contributes k * A_{t-k+1}
            let mut entry = Poly::zero(Var::N);
            if k >= 1 {
                let idx = t as i64 - k as i64 + 1;
                if idx >= 0 {
                    let c = a_poly.coeff(idx as usize).clone() * rat(k as i64);
                    if !c.is_zero() {
                        entry = entry.add(&Poly::constant(Var::N, c));
                    }
                }
            }
            // from P·B: P_k contributes B_{t-k}(n)
            if t >= k {
                let b = b_bi.coeff(t - k);
                if !b.is_zero() {
                    entry = entry.add(&b);
                }
            }
            m[t][k] = entry;
        }
        for i in 0..=order {
            let c = c_polys[i].coeff(t);
            if !c.is_zero() {
                m[t][dp + 1 + i] = Poly::constant(Var::N, -c);
            }
        }
    }

    let basis = nullspace(&m)?;
    // Candidate solutions: single basis vectors in tie-break order (minimal
    // total degree of the recurrence part first), then small subset sums --
    // individual basis vectors can have degenerate a-parts (a_0 or a_L
    // identically zero) even when the solution space contains full-order
    // recurrences.
    let mut vectors: Vec<Vec<Poly>> = Vec::new();
    for v in &basis {
        vectors.push(v.clone());
    }
    let dim = vectors.len();
    if dim >= 2 {
        for i in 0..dim {
            for j in i + 1..dim {
                let sum: Vec<Poly> = vectors[i]
                    .iter()
                    .zip(&vectors[j])
                    .map(|(a, b)| a.add(b))
                    .collect();
                vectors.push(sum);
            }
        }
    }
    if dim >= 3 {
        let mut all = vectors[0].clone();
        for v in &basis[1..] {
            all = all.iter().zip(v).map(|(a, b)| a.add(b)).collect();
        }
        vectors.push(all);
    }
    let mut candidates: Vec<(usize, usize, Vec<Poly>, Vec<Poly>)> = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        let a_part = &v[dp + 1..];
        if a_part.iter().all(|p| p.is_zero()) {
            continue;
        }
        let total_deg: usize = a_part.iter().map(|p| p.deg0()).sum();
        let full_order = !a_part.last().unwrap().is_zero() && !a_part[0].is_zero();
        // prefer full-order candidates, then minimal degree, then input order
        candidates.push((
            if full_order { total_deg } else { total_deg + 1000 },
            idx,
            v[..=dp].to_vec(),
            a_part.to_vec(),
        ));
    }
    candidates.sort_by_key(|(td, idx, _, _)| (*td, *idx));

    let out = candidates
        .into_iter()
        .map(|(_, _, p_coeffs, a_part)| {
            // divide the a-vector by its own gcd and content; fold the
            // cofactor into the certificate denominator so the identity
            // stays exact
            let mut g: Option<Poly> = None;
            for p in &a_part {
                if p.is_zero() {
                    continue;
                }
                g = Some(match g {
                    None => p.clone(),
                    Some(acc) => acc.gcd(p),
                });
            }
            let g = g.expect("nontrivial a-part");
            let mut p_final: Vec<Poly> = a_part
                .iter()
                .map(|p| {
                    if p.is_zero() {
                        Poly::zero(Var::N)
                    } else {
                        p.div_exact(&g).expect("gcd divides")
                    }
                })
                .collect();
            let mut scale = Rat::from_integer(1.into());
            let mut content: Option<Rat> = None;
            for p in &p_final {
                if p.is_zero() {
                    continue;
                }
                let c = p.content().abs();
                content = Some(match content {
                    None => c,
                    Some(acc) => {
                        use num_integer::Integer;
                        Rat::new(acc.numer().gcd(c.numer()), acc.denom().lcm(c.denom()))
                    }
                });
            }
            if let Some(c) = content {
                p_final = p_final.iter().map(|p| p.scale(&c.recip())).collect();
                scale = c;
            }
            if p_final.last().is_some_and(|p| p.leading().is_negative()) {
                p_final = p_final.iter().map(|p| p.neg()).collect();
                scale = -scale;
            }
            // p_i = a_i / (g * scale) => Q_new = P / (scale * g(n) * D(x))
            OrderAttempt {
                p: p_final,
                q_num: BiPoly::new(p_coeffs),
                q_den_n: g.scale(&scale),
                q_den_x: d.clone(),
            }
        })
        .collect();
    Ok(out)
}

/// Find the minimal-order telescoped recurrence with certificate, searching
/// orders 1..=max_order, retrying each order once with a larger degree slack.
pub fn derive_recurrence(
    kernel: &HyperexponentialKernel,
    max_order: usize,
) -> Result<TelescoperResult> {
    if max_order < 1 {
        return Err(Error::InvalidInput("max_order must be >= 1".into()));
    }
    for order in 1..=max_order {
        for slack in [2usize, 8] {
            for att in try_order(kernel, order, slack)? {
                // trailing zero coefficients mean the true order is lower
                let mut p = att.p;
                let mut q_num = att.q_num;
                let mut q_den_n = att.q_den_n;
                let mut q_den_x = att.q_den_x;
                while p.last().is_some_and(|c| c.is_zero()) {
                    p.pop();
                }
                // a vanishing p_0 shift-normalizes: p_j := p_{j+1}(n-1) and
                // Q(n,x) := Q(n-1,x)/R(x)
                while p.len() >= 2 && p.first().is_some_and(|c| c.is_zero()) {
                    p.remove(0);
                    for c in p.iter_mut() {
                        *c = c.shift_arg(-1);
                    }
                    q_num = q_num.shift_n(-1).mul(&BiPoly::from_xpoly(kernel.r.den()));
                    q_den_n = q_den_n.shift_arg(-1);
                    q_den_x = q_den_x.mul(kernel.r.num());
                }
                if p.len() < 2 {
                    // order-zero identity; not a recurrence
                    continue;
                }
                let recurrence = LinearRecurrence::new(p)?;
                let certificate = Certificate {
                    num: q_num,
                    den_x: q_den_x,
                    den_n: q_den_n,
                };
                let mut result = TelescoperResult {
                    recurrence,
                    certificate,
                    min_valid_n: None,
                };
                if !verify_certificate(kernel, &result) {
                    return Err(Error::InternalCheck(
                        "telescoper produced a non-verifying certificate".into(),
                    ));
                }
                result.min_valid_n = boundary_vanishing_check(kernel, &result).ok();
                return Ok(result);
            }
        }
    }
    Err(Error::NoRecurrenceFound(max_order))
}

/// Exact check of the certificate identity
/// Q' + Q (n R'/R + S'/S) = sum_i p_i(n) R^i in Q(n)(x), by clearing
/// denominators in Q[n][x]. Returns false on any failure.
pub fn verify_certificate(kernel: &HyperexponentialKernel, result: &TelescoperResult) -> bool {
    fn check(kernel: &HyperexponentialKernel, result: &TelescoperResult) -> Result<bool> {
        let order = result.recurrence.order();
        let r1 = kernel.r.num();
        let r2 = kernel.r.den();
        let (l_num, l_den) = log_derivative_parts(kernel)?;
        let q = &result.certificate;
        // identity * den_n * den_x^2 * l_den * r2^L:
        //   (num' den_x - num den_x') * l_den * r2^L
        // + num * l_num * den_x * r2^L
        // - (sum_i p_i r1^i r2^(L-i)) * den_n * den_x^2 * l_den  == 0
        let r2l = BiPoly::from_xpoly(&r2.pow(order));
        let t1 = q
            .num
            .derivative_x()
            .mul(&BiPoly::from_xpoly(&q.den_x))
            .sub(&q.num.mul(&BiPoly::from_xpoly(&q.den_x.derivative())))
            .mul(&BiPoly::from_xpoly(&l_den))
            .mul(&r2l);
        let t2 = q
            .num
            .mul(&l_num)
            .mul(&BiPoly::from_xpoly(&q.den_x))
            .mul(&r2l);
        let mut rhs_sum = BiPoly::zero();
        for (i, p) in result.recurrence.coeffs().iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let xterm = r1.pow(i).mul(&r2.pow(order - i));
            rhs_sum = rhs_sum.add(&BiPoly::from_xpoly(&xterm).scale_n(p));
        }
        let t3 = rhs_sum
            .scale_n(&q.den_n)
            .mul(&BiPoly::from_xpoly(&q.den_x.mul(&q.den_x)))
            .mul(&BiPoly::from_xpoly(&l_den));
        Ok(t1.add(&t2).sub(&t3).is_zero())
    }
    check(kernel, result).unwrap_or(false)
}

/// Smallest n0 >= 0 such that Q(n,x) R(x)^n S(x) extends continuously to
/// [lo, hi] with value 0 at both endpoints for all n >= n0, from vanishing
/// orders of R at the endpoints against pole orders of Q and S there.
pub fn boundary_vanishing_check(
    kernel: &HyperexponentialKernel,
    result: &TelescoperResult,
) -> Result<u32> {
    let mut n0 = 0i64;
    for x0 in [&kernel.lo, &kernel.hi] {
        let z_r = kernel.r.order_at(x0);
        if z_r <= 0 {
            return Err(Error::NeverVanishes(format!(
                "R does not vanish at the endpoint x = {x0}"
            )));
        }
        let z_s = kernel.s.order_at(x0);
        let q = &result.certificate;
        let z_q = match q.num.order_at_x(x0) {
            None => continue, // Q identically zero
            Some(k) => {
                let lin = Poly::new(Var::X, vec![-x0.clone(), Rat::from_integer(1.into())]);
                k as i64 - q.den_x.multiplicity_of(&lin) as i64
            }
        };
        // need n z_r + z_s + z_q >= 1
        let need = 1 - z_s - z_q;
        let cand = if need <= 0 { 0 } else { (need + z_r - 1) / z_r };
        n0 = n0.max(cand);
    }
    Ok(n0 as u32)
}

// ---- JSON schemas ----

#[derive(Serialize, Deserialize)]
pub struct RatFunJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

#[derive(Serialize, Deserialize)]
pub struct KernelJson {
    #[serde(rename = "R")]
    pub r: RatFunJson,
    #[serde(rename = "S")]
    pub s: RatFunJson,
    pub interval: [String; 2],
}

fn ratfun_to_json(f: &RatFun) -> RatFunJson {
    // scale num and den jointly so both have integer coefficients (the den is
    // already integer-primitive in canonical form)
    let l = |p: &Poly| -> Vec<String> { p.coeffs().iter().map(rat_string).collect() };
    let mut num_p = f.num().clone();
    let mut den_p = f.den().clone();
    let cn = num_p.content();
    if !cn.is_zero() && !cn.denom().is_one() {
        let m = Rat::from_integer(cn.denom().clone());
        num_p = num_p.scale(&m);
        den_p = den_p.scale(&m);
    }
    RatFunJson { num: l(&num_p), den: l(&den_p) }
}

fn ratfun_from_json(j: &RatFunJson) -> Result<RatFun> {
    let parse = |v: &[String]| -> Result<Poly> {
        let cs: Result<Vec<Rat>> = v.iter().map(|s| parse_rat(s)).collect();
        Ok(Poly::new(Var::X, cs?))
    };
    RatFun::new(parse(&j.num)?, parse(&j.den)?)
}

impl HyperexponentialKernel {
    pub fn to_json(&self) -> KernelJson {
        KernelJson {
            r: ratfun_to_json(&self.r),
            s: ratfun_to_json(&self.s),
            interval: [rat_string(&self.lo), rat_string(&self.hi)],
        }
    }

    pub fn from_json(j: &KernelJson) -> Result<Self> {
        HyperexponentialKernel::new(
            ratfun_from_json(&j.r)?,
            ratfun_from_json(&j.s)?,
            parse_rat(&j.interval[0])?,
            parse_rat(&j.interval[1])?,
        )
    }
}

#[derive(Serialize, Deserialize)]
pub struct CertificateJson {
    /// numerator coefficients: [x-degree][n-degree] as rational strings
    pub num: Vec<Vec<String>>,
    pub den_x: Vec<String>,
    pub den_n: Vec<String>,
}

#[derive(Serialize, Deserialize)]
pub struct TelescoperResultJson {
    pub order: usize,
    pub coeffs: Vec<Vec<String>>,
    pub certificate: CertificateJson,
    pub min_valid_n: Option<u32>,
}

impl TelescoperResult {
    pub fn to_json(&self) -> TelescoperResultJson {
        let rj = self.recurrence.to_json();
        TelescoperResultJson {
            order: rj.order,
            coeffs: rj.coeffs,
            certificate: CertificateJson {
                num: self
                    .certificate
                    .num
                    .coeffs()
                    .iter()
                    .map(|p| p.coeffs().iter().map(rat_string).collect())
                    .collect(),
                den_x: self.certificate.den_x.coeffs().iter().map(rat_string).collect(),
                den_n: self.certificate.den_n.coeffs().iter().map(rat_string).collect(),
            },
            min_valid_n: self.min_valid_n,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat2;

    fn px(c: &[i64]) -> Poly {
        Poly::from_i64(Var::X, c)
    }

    fn warmup_kernel() -> HyperexponentialKernel {
        // R = x(1-x)/(1+x), S = 1/(1+x) on [0,1]
        HyperexponentialKernel::new(
            RatFun::new(px(&[0, 1, -1]), px(&[1, 1])).unwrap(),
            RatFun::new(px(&[1]), px(&[1, 1])).unwrap(),
            rat(0),
            rat(1),
        )
        .unwrap()
    }

    #[test]
    fn warmup_order_two() {
        let res = derive_recurrence(&warmup_kernel(), 6).unwrap();
        assert_eq!(res.recurrence.order(), 2);
        let p = res.recurrence.coeffs();
        assert_eq!(p[0], Poly::from_i64(Var::N, &[1, 1]));
        assert_eq!(p[1], Poly::from_i64(Var::N, &[-9, -6]));
        assert_eq!(p[2], Poly::from_i64(Var::N, &[2, 1]));
        assert!(verify_certificate(&warmup_kernel(), &res));
        assert_eq!(
            res.recurrence.characteristic_poly(),
            Poly::from_i64(Var::BigN, &[1, -6, 1])
        );
        assert!(res.min_valid_n.is_some());
        assert!(res.min_valid_n.unwrap() <= 1);
    }

    #[test]
    fn warmup_no_order_one() {
        let e = {
            // force the search to stop at order 1
            derive_recurrence(&warmup_kernel(), 1)
        };
        assert!(matches!(e, Err(Error::NoRecurrenceFound(1))));
    }

    #[test]
    fn beta_kernel_order_one() {
        // R = x(1-x), S = 1: I(n+1)/I(n) = (n+1)^2/((2n+2)(2n+3))
        let k = HyperexponentialKernel::new(
            RatFun::from_poly(px(&[0, 1, -1])),
            RatFun::from_poly(px(&[1])),
            rat(0),
            rat(1),
        )
        .unwrap();
        let res = derive_recurrence(&k, 4).unwrap();
        assert_eq!(res.recurrence.order(), 1);
        // normalized: (n+1) u(n) - 2(2n+3) u(n+1) = 0 up to overall sign
        let p = res.recurrence.coeffs();
        // ratio check: p0/p1 = -(n+1)^2/((2n+2)(2n+3)) as rational functions
        let expect_p0 = Poly::from_i64(Var::N, &[1, 2, 1]); // (n+1)^2
        let expect_p1 = Poly::from_i64(Var::N, &[6, 10, 4]); // (2n+2)(2n+3)
        assert!(p[0].mul(&expect_p1) == p[1].neg().mul(&expect_p0));
        assert!(verify_certificate(&k, &res));
    }

    #[test]
    fn perturbed_certificate_fails() {
        let k = warmup_kernel();
        let mut res = derive_recurrence(&k, 6).unwrap();
        assert!(verify_certificate(&k, &res));
        // perturb p_1 by +1
        let mut coeffs = res.recurrence.coeffs().to_vec();
        coeffs[1] = coeffs[1].add(&Poly::one(Var::N));
        res.recurrence = LinearRecurrence::new(coeffs).unwrap();
        assert!(!verify_certificate(&k, &res));
    }

    #[test]
    fn pole_on_path_rejected() {
        // S = 1/(x - 1/2) has a pole inside [0,1]
        let e = HyperexponentialKernel::new(
            RatFun::from_poly(px(&[0, 1, -1])),
            RatFun::new(px(&[1]), Poly::new(Var::X, vec![rat2(-1, 2), rat(1)])).unwrap(),
            rat(0),
            rat(1),
        );
        assert!(matches!(e, Err(Error::PoleOnPath(_))));
    }

    #[test]
    fn never_vanishing_boundary() {
        // R = 1/(1+x): no endpoint zeros
        let k = HyperexponentialKernel::new(
            RatFun::new(px(&[1]), px(&[1, 1])).unwrap(),
            RatFun::from_poly(px(&[1])),
            rat(0),
            rat(1),
        )
        .unwrap();
        let res = derive_recurrence(&k, 4).unwrap();
        assert!(res.min_valid_n.is_none());
        let e = boundary_vanishing_check(&k, &res);
        assert!(matches!(e, Err(Error::NeverVanishes(_))));
    }

    #[test]
    fn salikhov_a1_kernel() {
        // R = x^2(x^2-9)(x^2-25)/(x^2-225)^2, S = 1/(x^2-225) on [0,3]
        let r_num = px(&[0, 0, 1]).mul(&px(&[-9, 0, 1])).mul(&px(&[-25, 0, 1]));
        let r_den = px(&[-225, 0, 1]).pow(2);
        let k = HyperexponentialKernel::new(
            RatFun::new(r_num, r_den).unwrap(),
            RatFun::new(px(&[1]), px(&[-225, 0, 1])).unwrap(),
            rat(0),
            rat(3),
        )
        .unwrap();
        let res = derive_recurrence(&k, 3).unwrap();
        assert_eq!(res.recurrence.order(), 3);
        assert_eq!(
            res.recurrence.characteristic_poly(),
            Poly::from_i64(Var::BigN, &[1, -79, -4325, 3])
        );
        assert!(verify_certificate(&k, &res));
        assert!(res.min_valid_n.is_some());
    }

    #[test]
    fn kernel_json_roundtrip() {
        let k = warmup_kernel();
        let j = serde_json::to_string(&k.to_json()).unwrap();
        let k2 = HyperexponentialKernel::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(k2.r(), k.r());
        assert_eq!(k2.s(), k.s());
    }
}
