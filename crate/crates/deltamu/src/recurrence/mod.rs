//! Linear recurrences with polynomial coefficients: exact forward evaluation,
//! the constant-coefficient (indicial) approximation, and growth analysis from
//! isolated characteristic roots.

pub mod roots;

use crate::error::{Error, Result};
use crate::exact::{rat, rat2, squarefree_factorization, Poly, Rat, Var};
use crate::hiprec::{bits_for_digits, ln, BigFloat};
use num_traits::{Signed, Zero};
use roots::{isolate_real_roots, refine_enclosure, RootEnclosure};
use serde::{Deserialize, Serialize};

/// sum_{i=0..L} p_i(n) u(n+i) = 0 with p_i in Q[n].
///
/// Normalized so that p_0 and p_L are not identically zero, the coefficient
/// gcd over Q[n] is 1, content is integer-primitive, and the leading
/// coefficient of p_L has a positive leading rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRecurrence {
    coeffs: Vec<Poly>,
}

impl LinearRecurrence {
    pub fn new(coeffs: Vec<Poly>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidInput("recurrence needs order >= 1".into()));
        }
        for c in &coeffs {
            if c.var() != Var::N {
                return Err(Error::VariableMismatch(c.var(), Var::N));
            }
        }
        if coeffs.first().unwrap().is_zero() || coeffs.last().unwrap().is_zero() {
            return Err(Error::InvalidInput(
                "p_0 and p_L must not be identically zero".into(),
            ));
        }
        Ok(LinearRecurrence { coeffs: normalize_coeffs(coeffs) })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Shift-reverse the coefficient association: p_i -> p_{L-i}. This is the
    /// alternative printed orientation some sources use; exact initial values
    /// decide which one holds.
    pub fn transposed(&self) -> LinearRecurrence {
        let mut c = self.coeffs.clone();
        c.reverse();
        LinearRecurrence { coeffs: normalize_coeffs(c) }
    }

    /// Check p_L(n) != 0 for 0 <= n <= n_hi.
    fn check_leading_nonvanishing(&self, n_hi: i64) -> Result<()> {
        let p_l = self.coeffs.last().unwrap();
        for n in 0..=n_hi {
            if p_l.eval_i64(n).is_zero() {
                return Err(Error::SingularLeadingCoefficient(n));
            }
        }
        Ok(())
    }

    /// Exact forward evaluation of one rational coordinate sequence:
    /// u(0..L-1) given, u(n) returned for 0 <= n <= n_max.
    pub fn evaluate(&self, initial: &[Rat], n_max: usize) -> Result<Vec<Rat>> {
        let l = self.order();
        if initial.len() != l {
            return Err(Error::InvalidInput(format!(
                "need {l} initial values, got {}",
                initial.len()
            )));
        }
        if n_max + 1 <= l {
            return Ok(initial[..=n_max].to_vec());
        }
        self.check_leading_nonvanishing(n_max as i64 - l as i64)?;
        let mut u: Vec<Rat> = initial.to_vec();
        u.reserve(n_max + 1 - l);
        for n in 0..=(n_max - l) {
            let nv = rat(n as i64);
            let mut acc = Rat::from_integer(0.into());
            for i in 0..l {
                let c = self.coeffs[i].eval(&nv);
                if !c.is_zero() {
                    acc += c * &u[n + i];
                }
            }
            let lead = self.coeffs[l].eval(&nv);
            u.push(-acc / lead);
        }
        Ok(u)
    }

    /// Exact residual sum_i p_i(n) u(n+i) for a window of a sequence.
    pub fn residual(&self, u: &[Rat], n: usize) -> Option<Rat> {
        let l = self.order();
        if n + l >= u.len() {
            return None;
        }
        let nv = rat(n as i64);
        let mut acc = Rat::from_integer(0.into());
        for i in 0..=l {
            acc += self.coeffs[i].eval(&nv) * &u[n + i];
        }
        Some(acc)
    }

    /// Constant-coefficient (indicial) approximation: with d = max_i deg p_i,
    /// chi(N) = sum_i [n^d] p_i * N^i, content-normalized with positive leading
    /// coefficient.
    pub fn characteristic_poly(&self) -> Poly {
        let d = self.coeffs.iter().map(|p| p.deg0()).max().unwrap_or(0);
        let chi = Poly::new(
            Var::BigN,
            self.coeffs.iter().map(|p| p.coeff(d)).collect(),
        );
        chi.primitive()
    }
}

fn normalize_coeffs(coeffs: Vec<Poly>) -> Vec<Poly> {
    // divide by the common polynomial gcd, strip content, fix the sign so the
    // leading coefficient of p_L is positive
    let mut g: Option<Poly> = None;
    for c in &coeffs {
        if c.is_zero() {
            continue;
        }
        g = Some(match g {
            None => c.clone(),
            Some(acc) => acc.gcd(c),
        });
        if g.as_ref().unwrap().deg() == Some(0) {
            break;
        }
    }
    let mut out = coeffs;
    if let Some(g) = g {
        if g.deg().is_some_and(|d| d > 0) {
            out = out
                .iter()
                .map(|c| c.div_exact(&g).expect("gcd divides"))
                .collect();
        }
    }
    // joint integer-primitive content
    let mut content: Option<Rat> = None;
    for c in &out {
        if c.is_zero() {
            continue;
        }
        let cc = c.content().abs();
        content = Some(match content {
            None => cc,
            Some(acc) => {
                use num_integer::Integer;
                Rat::new(acc.numer().gcd(cc.numer()), acc.denom().lcm(cc.denom()))
            }
        });
    }
    if let Some(c) = content {
        if !num_traits::Zero::is_zero(&c) {
            out = out.iter().map(|p| p.scale(&c.recip())).collect();
        }
    }
    if out.last().unwrap().leading().is_negative() {
        out = out.iter().map(|p| p.neg()).collect();
    }
    out
}

/// How to pick the decaying-solution root among the characteristic roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubdominantRule {
    /// Smallest modulus strictly above zero (the default).
    SmallestPositiveModulus,
    /// k-th smallest nonzero modulus (0-based); rank 0 equals the default.
    ModulusRank(usize),
}

/// Characteristic polynomial, isolated real roots, and the dominant /
/// subdominant exponential rates.
#[derive(Clone, Debug)]
pub struct GrowthAnalysis {
    pub char_poly: Poly,
    /// All real roots ordered by increasing |root| (multiplicities collapsed;
    /// the analysis rejects non-distinct-modulus configurations).
    pub roots: Vec<RootEnclosure>,
    pub dominant_log: BigFloat,
    pub subdominant_log: BigFloat,
    pub dominant_index: usize,
    pub subdominant_index: usize,
}

/// Growth analysis of a recurrence: isolate all characteristic roots (they
/// must all be real with pairwise distinct moduli), then report
/// dominant_log = log max|root| and the subdominant rate per `rule`.
pub fn growth_rates(
    rec: &LinearRecurrence,
    digits: u32,
    rule: SubdominantRule,
) -> Result<GrowthAnalysis> {
    let chi = rec.characteristic_poly();
    let deg = chi.deg().ok_or_else(|| Error::InvalidInput("zero characteristic polynomial".into()))?;
    let (_, factors) = squarefree_factorization(&chi)?;
    let mut enclosures: Vec<(RootEnclosure, Poly)> = Vec::new();
    let mut real_with_mult = 0usize;
    for (f, m) in &factors {
        let rs = isolate_real_roots(f, digits)?;
        real_with_mult += rs.len() * m;
        for r in rs {
            enclosures.push((r, f.clone()));
        }
    }
    if real_with_mult != deg {
        return Err(Error::ComplexRootsPresent { real: real_with_mult, degree: deg });
    }

    // refine until all moduli are strictly separated and signs determined
    let prec = bits_for_digits(digits) + 32;
    let mut attempt = 0u32;
    loop {
        let done = moduli_separated(&enclosures);
        if done {
            break;
        }
        attempt += 1;
        if attempt > 6 {
            return Err(Error::ModulusTie);
        }
        let width = rat2(1, 10).pow((digits * (attempt + 1)) as i32);
        for (enc, f) in enclosures.iter_mut() {
            *enc = refine_enclosure(f, enc, &width, prec);
        }
    }

    let mut order: Vec<usize> = (0..enclosures.len()).collect();
    order.sort_by(|&i, &j| {
        let (ai, _) = enclosures[i].0.abs_interval().expect("signs determined");
        let (aj, _) = enclosures[j].0.abs_interval().expect("signs determined");
        ai.cmp(&aj)
    });
    let roots: Vec<RootEnclosure> = order.iter().map(|&i| enclosures[i].0.clone()).collect();

    let nonzero: Vec<usize> = roots
        .iter()
        .enumerate()
        .filter(|(_, r)| r.sign() != Some(0))
        .map(|(i, _)| i)
        .collect();
    if nonzero.is_empty() {
        return Err(Error::InvalidInput("all characteristic roots are zero".into()));
    }
    let dominant_index = *nonzero.last().unwrap();
    let subdominant_index = match rule {
        SubdominantRule::SmallestPositiveModulus => nonzero[0],
        SubdominantRule::ModulusRank(k) => *nonzero.get(k).ok_or_else(|| {
            Error::InvalidInput(format!("modulus rank {k} out of range"))
        })?,
    };
    let dominant_log = ln(&roots[dominant_index].value.abs(), prec)?;
    let subdominant_log = ln(&roots[subdominant_index].value.abs(), prec)?;
    Ok(GrowthAnalysis {
        char_poly: chi,
        roots,
        dominant_log,
        subdominant_log,
        dominant_index,
        subdominant_index,
    })
}

fn moduli_separated(enclosures: &[(RootEnclosure, Poly)]) -> bool {
    let mut ivs: Vec<(Rat, Rat)> = Vec::with_capacity(enclosures.len());
    for (enc, _) in enclosures {
        match enc.abs_interval() {
            None => return false,
            Some(iv) => ivs.push(iv),
        }
    }
    for i in 0..ivs.len() {
        for j in i + 1..ivs.len() {
            let (alo, ahi) = &ivs[i];
            let (blo, bhi) = &ivs[j];
            let disjoint = ahi < blo || bhi < alo;
            let both_zero = ahi.is_zero() && bhi.is_zero();
            if !disjoint && !both_zero {
                return false;
            }
        }
    }
    true
}

/// JSON shape for recurrences: coefficient arrays of `p/q` strings, index =
/// degree, outer index = shift.
#[derive(Serialize, Deserialize)]
pub struct RecurrenceJson {
    pub order: usize,
    pub coeffs: Vec<Vec<String>>,
}

impl LinearRecurrence {
    pub fn to_json(&self) -> RecurrenceJson {
        RecurrenceJson {
            order: self.order(),
            coeffs: self
                .coeffs
                .iter()
                .map(|p| p.coeffs().iter().map(crate::exact::rat_string).collect())
                .collect(),
        }
    }

    pub fn from_json(j: &RecurrenceJson) -> Result<Self> {
        let coeffs = j
            .coeffs
            .iter()
            .map(|cs| {
                let parsed: Result<Vec<Rat>> =
                    cs.iter().map(|s| crate::exact::parse_rat(s)).collect();
                Ok(Poly::new(Var::N, parsed?))
            })
            .collect::<Result<Vec<_>>>()?;
        LinearRecurrence::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn warmup() -> LinearRecurrence {
        // (n+1) u(n) - (6n+9) u(n+1) + (n+2) u(n+2) = 0
        LinearRecurrence::new(vec![
            Poly::from_i64(Var::N, &[1, 1]),
            Poly::from_i64(Var::N, &[-9, -6]),
            Poly::from_i64(Var::N, &[2, 1]),
        ])
        .unwrap()
    }

    #[test]
    fn b_sequence_start() {
        let rec = warmup();
        let b = rec.evaluate(&[rat(1), rat(3)], 8).unwrap();
        assert_eq!(
            b[..5],
            [rat(1), rat(3), rat(13), rat(63), rat(321)]
        );
    }

    #[test]
    fn paper_values_at_50() {
        let rec = warmup();
        let b = rec.evaluate(&[rat(1), rat(3)], 50).unwrap();
        assert_eq!(
            b[50],
            Rat::from_integer(
                "15310086199495855930932559804210504653".parse().unwrap()
            )
        );
        let a = rec.evaluate(&[rat(0), rat(-2)], 50).unwrap();
        let expected = Rat::new(
            "-1827083538922494024488153994990786998947102154393958429773"
                .parse()
                .unwrap(),
            "172169139124777594800".parse().unwrap(),
        );
        assert_eq!(a[50], expected);
    }

    #[test]
    fn zero_initial_gives_zero() {
        let rec = warmup();
        let u = rec.evaluate(&[rat(0), rat(0)], 20).unwrap();
        assert!(u.iter().all(|v| v.is_zero()));
    }

    #[test]
    fn linearity() {
        let rec = warmup();
        let v = rec.evaluate(&[rat(1), rat(0)], 15).unwrap();
        let w = rec.evaluate(&[rat(0), rat(1)], 15).unwrap();
        let combo = rec.evaluate(&[rat2(2, 3), rat(5)], 15).unwrap();
        for n in 0..=15 {
            assert_eq!(combo[n], &v[n] * rat2(2, 3) + &w[n] * rat(5));
        }
    }

    #[test]
    fn characteristic_polynomials() {
        assert_eq!(
            warmup().characteristic_poly(),
            Poly::from_i64(Var::BigN, &[1, -6, 1])
        );
        // constant-coefficient: u(n) - 2u(n+1) = 0 -> 1 - 2N up to normalization
        let rec = LinearRecurrence::new(vec![
            Poly::from_i64(Var::N, &[-1]),
            Poly::from_i64(Var::N, &[2]),
        ])
        .unwrap();
        assert_eq!(rec.characteristic_poly(), Poly::from_i64(Var::BigN, &[-1, 2]));
    }

    #[test]
    fn singular_leading_detected() {
        // p_L = n - 3 vanishes at n = 3
        let rec = LinearRecurrence::new(vec![
            Poly::from_i64(Var::N, &[1]),
            Poly::from_i64(Var::N, &[-3, 1]),
        ])
        .unwrap();
        let e = rec.evaluate(&[rat(1)], 10).unwrap_err();
        assert!(matches!(e, Error::SingularLeadingCoefficient(3)));
    }

    #[test]
    fn growth_warmup() {
        let g = growth_rates(&warmup(), 25, SubdominantRule::SmallestPositiveModulus).unwrap();
        // log(3 + 2 sqrt 2) = 1.76274717403908...
        let dl = g.dominant_log.to_decimal(14);
        assert!(dl.starts_with("1.762747174039"), "{dl}");
        let sl = g.subdominant_log.to_decimal(14);
        assert!(sl.starts_with("-1.762747174039"), "{sl}");
        assert_eq!(g.roots.len(), 2);
    }

    #[test]
    fn growth_single_root() {
        // u(n+1) = 2 u(n): -2 u(n) + u(n+1)... as p0 + p1 N convention:
        // -2u(n) + u(n+1) = 0: chi = N - 2, root 2
        let rec = LinearRecurrence::new(vec![
            Poly::from_i64(Var::N, &[-2]),
            Poly::from_i64(Var::N, &[1]),
        ])
        .unwrap();
        let g = growth_rates(&rec, 20, SubdominantRule::SmallestPositiveModulus).unwrap();
        assert_eq!(g.dominant_index, g.subdominant_index);
        let dl = g.dominant_log.to_decimal(10);
        assert!(dl.starts_with("0.693147180"), "{dl}");
    }

    #[test]
    fn growth_complex_rejected() {
        // chi = N^2 + 1
        let rec = LinearRecurrence::new(vec![
            Poly::from_i64(Var::N, &[1]),
            Poly::zero(Var::N),
            Poly::from_i64(Var::N, &[1]),
        ])
        .unwrap();
        let e = growth_rates(&rec, 10, SubdominantRule::SmallestPositiveModulus);
        assert!(matches!(e, Err(Error::ComplexRootsPresent { .. })));
    }

    #[test]
    fn json_roundtrip() {
        let rec = warmup();
        let j = rec.to_json();
        let s = serde_json::to_string(&j).unwrap();
        let j2: RecurrenceJson = serde_json::from_str(&s).unwrap();
        let rec2 = LinearRecurrence::from_json(&j2).unwrap();
        assert_eq!(rec, rec2);
        let _ = int(0);
    }
}
