//! Nullspace of matrices over Q(n), entries given as polynomials in n.
//!
//! Forward elimination is fraction-free with per-row primitive normalization;
//! back-substitution runs over rational functions in n and the result is
//! cleared to polynomial entries.

use super::poly::{Poly, Var};
use super::ratfun::RatFun;
use crate::error::Result;

/// Basis of the right nullspace of `m` (rows of equal length, entries in Q[n]),
/// each vector cleared to Q[n] entries with overall content removed.
/// Deterministic: vectors come out ordered by free column index.
pub fn nullspace(m: &[Vec<Poly>]) -> Result<Vec<Vec<Poly>>> {
    let rows = m.len();
    if rows == 0 {
        return Ok(Vec::new());
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<Poly>> = m.to_vec();

    // forward elimination to row echelon form
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        // pivot: nonzero entry of minimal degree for size control
        let mut best: Option<(usize, usize)> = None;
        for i in r..rows {
            if let Some(d) = a[i][c].deg() {
                if best.is_none() || d < best.unwrap().1 {
                    best = Some((i, d));
                }
            }
        }
        let Some((pi, _)) = best else { continue };
        a.swap(r, pi);
        let piv = a[r][c].clone();
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            // row_i = row_i * piv - row_r * f, then primitive-normalize
            for j in 0..cols {
                let t = a[i][j].mul(&piv).sub(&a[r][j].mul(&f));
                a[i][j] = t;
            }
            normalize_row(&mut a[i]);
        }
        pivot_cols.push(c);
        r += 1;
    }
    let rank = pivot_cols.len();

    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::with_capacity(free_cols.len());
    let one = RatFun::one(Var::N);
    let zero = RatFun::zero(Var::N);

    for &fc in &free_cols {
        // back-substitute with x_fc = 1, other free vars = 0
        let mut x: Vec<RatFun> = vec![zero.clone(); cols];
        x[fc] = one.clone();
        for k in (0..rank).rev() {
            let pc = pivot_cols[k];
            let mut s = RatFun::zero(Var::N);
            for j in pc + 1..cols {
                if a[k][j].is_zero() || x[j].is_zero() {
                    continue;
                }
                s = s.add(&RatFun::from_poly(a[k][j].clone()).mul(&x[j]));
            }
            let piv = RatFun::from_poly(a[k][pc].clone());
            x[pc] = s.neg().div(&piv)?;
        }
        basis.push(clear_denominators(&x));
    }
    Ok(basis)
}

fn normalize_row(row: &mut [Poly]) {
    let mut g: Option<Poly> = None;
    for e in row.iter() {
        if e.is_zero() {
            continue;
        }
        g = Some(match g {
            None => e.primitive(),
            Some(acc) => acc.gcd(e),
        });
        if g.as_ref().is_some_and(|p| p.deg() == Some(0)) {
            break;
        }
    }
    if let Some(g) = g {
        if g.deg().is_some_and(|d| d > 0) {
            for e in row.iter_mut() {
                *e = e.div_exact(&g).expect("row gcd divides");
            }
        }
        // strip rational content
        let mut content: Option<crate::exact::Rat> = None;
        for e in row.iter() {
            if !e.is_zero() {
                let c = e.content();
                content = Some(match content {
                    None => c,
                    Some(acc) => {
                        // gcd of rationals a/b, c/d = gcd(a,c)/lcm(b,d)
                        use num_integer::Integer;
                        crate::exact::Rat::new(
                            acc.numer().gcd(c.numer()),
                            acc.denom().lcm(c.denom()),
                        )
                    }
                });
            }
        }
        if let Some(c) = content {
            if !num_traits::Zero::is_zero(&c) {
                for e in row.iter_mut() {
                    *e = e.scale(&c.recip());
                }
            }
        }
    }
}

/// Scale a Q(n)-vector to Q[n] entries and remove common polynomial/rational content.
fn clear_denominators(x: &[RatFun]) -> Vec<Poly> {
    // den := lcm of entry denominators
    let mut den = Poly::one(Var::N);
    for e in x {
        if !e.is_zero() {
            let g = den.gcd(e.den());
            let extra = e.den().div_exact(&g).unwrap_or_else(|_| e.den().clone());
            den = den.mul(&extra);
        }
    }
    let mut row: Vec<Poly> = x
        .iter()
        .map(|e| {
            if e.is_zero() {
                Poly::zero(Var::N)
            } else {
                e.num().mul(&den.div_exact(e.den()).expect("den is a common multiple"))
            }
        })
        .collect();
    normalize_row(&mut row);
    row
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pn(coeffs: &[i64]) -> Poly {
        Poly::from_i64(Var::N, coeffs)
    }

    #[test]
    fn simple_nullspace() {
        // [n, -1, 0; 0, n, -1] -> kernel spanned by (1, n, n^2)
        let m = vec![
            vec![pn(&[0, 1]), pn(&[-1]), pn(&[0])],
            vec![pn(&[0]), pn(&[0, 1]), pn(&[-1])],
        ];
        let ns = nullspace(&m).unwrap();
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        // check m * v = 0
        for row in &m {
            let mut s = Poly::zero(Var::N);
            for (a, b) in row.iter().zip(v) {
                s = s.add(&a.mul(b));
            }
            assert!(s.is_zero());
        }
        // normalized: first entry constant 1
        assert_eq!(v[0], pn(&[1]));
        assert_eq!(v[1], pn(&[0, 1]));
        assert_eq!(v[2], pn(&[0, 0, 1]));
    }

    #[test]
    fn full_rank_no_kernel() {
        let m = vec![vec![pn(&[1]), pn(&[0])], vec![pn(&[0]), pn(&[0, 1])]];
        assert!(nullspace(&m).unwrap().is_empty());
    }

    #[test]
    fn rational_back_substitution() {
        // single row [n+1, n+2]: kernel spanned by (n+2, -(n+1)) up to sign
        let m = vec![vec![pn(&[1, 1]), pn(&[2, 1])]];
        let ns = nullspace(&m).unwrap();
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        let s = m[0][0].mul(&v[0]).add(&m[0][1].mul(&v[1]));
        assert!(s.is_zero());
        assert!(v[0] == pn(&[2, 1]) || v[0] == pn(&[-2, -1]));
    }
}
