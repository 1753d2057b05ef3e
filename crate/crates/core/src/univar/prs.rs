//! Subresultant remainder sequences and resultants over an integral domain.

use num_bigint::BigInt;

use super::upoly::{Coeff, UPoly};
use crate::error::{Error, Result};
use crate::poly::SparsePoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqKind {
    Sturm,
    Subresultant,
}

/// Subresultant remainder sequence `r_0 = f, r_1 = g, ...` with
/// `r_{i+1} = prem(r_{i-1}, r_i) / beta_i`.
///
/// `betas[i-1]` and `deltas[i-1]` belong to the step producing `r_{i+1}`;
/// `deltas[i-1] = deg r_{i-1} - deg r_i`.
#[derive(Clone, Debug)]
pub struct SubresultantSeq<C: Coeff> {
    pub polys: Vec<UPoly<C>>,
    pub betas: Vec<C>,
    pub deltas: Vec<usize>,
}

/// Subresultant PRS of `f`, `g` with `deg f >= deg g >= 0`.
pub fn subresultant_seq<C: Coeff>(f: &UPoly<C>, g: &UPoly<C>) -> Result<SubresultantSeq<C>> {
    let (df, dg) = match (f.degree(), g.degree()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::ZeroPolynomial),
    };
    if df < dg {
        return Err(Error::precondition("subresultant sequence needs deg f >= deg g"));
    }
    let minus_one = f.lc().one_like().neg_c();
    let mut polys = vec![f.clone(), g.clone()];
    let mut betas = Vec::new();
    let mut deltas = Vec::new();
    let mut psi = minus_one.clone();
    let mut i = 1;
    loop {
        let ri = &polys[i];
        if ri.degree().map_or(true, |d| d == 0) {
            break;
        }
        let prev = &polys[i - 1];
        let delta = prev.degree().unwrap() - ri.degree().unwrap();
        let beta = if i == 1 {
            if (delta + 1) % 2 == 0 {
                minus_one.one_like()
            } else {
                minus_one.clone()
            }
        } else {
            let prev_delta = deltas[i - 2];
            let neg_lc = prev.lc().neg_c();
            // psi_i = (-lc r_{i-1})^{delta_{i-1}} * psi_{i-1}^{1 - delta_{i-1}}
            psi = if prev_delta == 0 {
                psi.mul_c(&neg_lc.pow_c(0))
            } else {
                neg_lc
                    .pow_c(prev_delta)
                    .div_exact_c(&psi.pow_c(prev_delta - 1))
                    .ok_or_else(|| Error::precondition("inexact division in subresultant psi"))?
            };
            neg_lc.mul_c(&psi.pow_c(delta))
        };
        let r = prev.prem(ri);
        let next = r
            .div_scalar(&beta)
            .ok_or_else(|| Error::precondition("inexact division in subresultant step"))?;
        betas.push(beta);
        deltas.push(delta);
        let stop = next.is_zero();
        polys.push(next);
        if stop {
            polys.pop();
            break;
        }
        i += 1;
    }
    Ok(SubresultantSeq { polys, betas, deltas })
}

/// Resultant with the Sylvester determinant sign convention.
pub fn resultant<C: Coeff>(f: &UPoly<C>, g: &UPoly<C>) -> Result<C> {
    let zero = f.zero_template().clone();
    let (mut da, mut db) = match (f.degree(), g.degree()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Ok(zero),
    };
    if da == 0 {
        return Ok(f.lc().pow_c(db));
    }
    if db == 0 {
        return Ok(g.lc().pow_c(da));
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    let one = zero.one_like();
    let mut s = one.clone();
    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        if da % 2 == 1 && db % 2 == 1 {
            s = s.neg_c();
        }
    }
    let mut g_ = one.clone();
    let mut h = one.clone();
    loop {
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = s.neg_c();
        }
        let r = a.prem(&b);
        a = b;
        let denom = g_.mul_c(&h.pow_c(delta));
        b = r
            .div_scalar(&denom)
            .ok_or_else(|| Error::precondition("inexact division in resultant"))?;
        g_ = a.lc().clone();
        h = if delta == 0 {
            h
        } else {
            g_.pow_c(delta)
                .div_exact_c(&h.pow_c(delta - 1))
                .ok_or_else(|| Error::precondition("inexact division in resultant"))?
        };
        da = a.degree().unwrap();
        match b.degree() {
            None => return Ok(zero),
            Some(0) => {
                let lb = b.lc().clone();
                let hh = if da == 0 {
                    h.mul_c(&lb.pow_c(0))
                } else {
                    lb.pow_c(da)
                        .div_exact_c(&h.pow_c(da - 1))
                        .ok_or_else(|| Error::precondition("inexact division in resultant"))?
                };
                return Ok(s.mul_c(&hh));
            }
            Some(d) => db = d,
        }
    }
}

/// Determinant of the Sylvester matrix by fraction-free elimination.
pub fn sylvester_resultant<C: Coeff>(f: &UPoly<C>, g: &UPoly<C>) -> Result<C> {
    let zero = f.zero_template().clone();
    let (m, n) = match (f.degree(), g.degree()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Ok(zero),
    };
    let size = m + n;
    if size == 0 {
        return Ok(zero.one_like());
    }
    let mut mat = vec![vec![zero.clone(); size]; size];
    for r in 0..n {
        for k in 0..=m {
            mat[r][r + k] = f.coeff(m - k).clone();
        }
    }
    for r in 0..m {
        for k in 0..=n {
            mat[n + r][r + k] = g.coeff(n - k).clone();
        }
    }
    bareiss_det(mat)
}

/// Bareiss determinant with row pivoting.
pub fn bareiss_det<C: Coeff>(mut mat: Vec<Vec<C>>) -> Result<C> {
    let n = mat.len();
    let zero = match mat.first().and_then(|r| r.first()) {
        Some(c) => c.zero_like(),
        None => return Err(Error::precondition("empty matrix")),
    };
    let mut sign_flip = false;
    let mut prev = zero.one_like();
    for k in 0..n {
        if mat[k][k].is_zero_c() {
            match (k + 1..n).find(|&r| !mat[r][k].is_zero_c()) {
                Some(r) => {
                    mat.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return Ok(zero),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = mat[i][j].mul_c(&mat[k][k]).sub_c(&mat[i][k].mul_c(&mat[k][j]));
                mat[i][j] = v
                    .div_exact_c(&prev)
                    .ok_or_else(|| Error::precondition("inexact Bareiss division"))?;
            }
            mat[i][k] = zero.clone();
        }
        prev = mat[k][k].clone();
    }
    let d = mat[n - 1][n - 1].clone();
    Ok(if sign_flip { d.neg_c() } else { d })
}

/// Remainder sequence of sparse polynomials viewed in one variable.
#[derive(Clone, Debug)]
pub struct SignedRemainderSeq {
    pub polys: Vec<SparsePoly>,
    pub var: usize,
    pub kind: SeqKind,
}

/// Subresultant sequence of `f`, `g` in variable `var`, with multivariate
/// coefficients.
pub fn subresultant_prs(f: &SparsePoly, g: &SparsePoly, var: usize) -> Result<SignedRemainderSeq> {
    let (uf, ug) = (f.to_univariate(var)?, g.to_univariate(var)?);
    let (a, b) = if uf.degree() >= ug.degree() { (uf, ug) } else { (ug, uf) };
    let seq = subresultant_seq(&a, &b)?;
    Ok(SignedRemainderSeq {
        polys: seq.polys.iter().map(|p| SparsePoly::from_univariate(p, var)).collect(),
        var,
        kind: SeqKind::Subresultant,
    })
}

/// `res_var(f, g)` as a polynomial in the remaining variables (the
/// `var` exponent is zero throughout).
pub fn resultant_in(f: &SparsePoly, g: &SparsePoly, var: usize) -> Result<SparsePoly> {
    if f.nvars() != g.nvars() {
        return Err(Error::DimensionMismatch { expected: f.nvars(), found: g.nvars() });
    }
    resultant(&f.to_univariate(var)?, &g.to_univariate(var)?)
}

/// Integer resultant of two univariate integer polynomials.
pub fn resultant_int(f: &UPoly<BigInt>, g: &UPoly<BigInt>) -> Result<BigInt> {
    resultant(f, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn circle_line_resultant() {
        let f = parse_poly("1:2,0;1:0,2;-2:0,0", 2).unwrap();
        let g = parse_poly("1:1,0;-1:0,1", 2).unwrap();
        let r = resultant_in(&f, &g, 1).unwrap();
        let expect = parse_poly("2:2,0;-2:0,0", 2).unwrap();
        assert!(r == expect || r == -&expect, "{r}");
    }

    #[test]
    fn self_resultant_vanishes() {
        let f = UPoly::from_ints(&[-2, 0, 1]);
        assert_eq!(resultant(&f, &f).unwrap(), BigInt::from(0));
    }

    #[test]
    fn linear_resultant() {
        // res_x(x - a, x - b) in Z[a, b][x] with variables (x, a, b)
        let f = parse_poly("1:1,0,0;-1:0,1,0", 3).unwrap();
        let g = parse_poly("1:1,0,0;-1:0,0,1", 3).unwrap();
        let r = resultant_in(&f, &g, 0).unwrap();
        let d = parse_poly("1:0,1,0;-1:0,0,1", 3).unwrap();
        assert!(r == d || r == -&d);
    }

    #[test]
    fn agrees_with_sylvester_on_small_cases() {
        let cases: [(&[i64], &[i64]); 5] = [
            (&[1, 2, 3], &[4, 5]),
            (&[-1, 0, 0, 2], &[3, 1, 1]),
            (&[2, -3, 1], &[1, 0, -7, 2]),
            (&[5], &[1, 1]),
            (&[0, 1, 1, 1], &[-1, 1]),
        ];
        for (a, b) in cases {
            let (fa, fb) = (UPoly::from_ints(a), UPoly::from_ints(b));
            assert_eq!(resultant(&fa, &fb).unwrap(), sylvester_resultant(&fa, &fb).unwrap());
            assert_eq!(resultant(&fb, &fa).unwrap(), sylvester_resultant(&fb, &fa).unwrap());
        }
    }

    #[test]
    fn subresultant_chain_of_a_classic_pair() {
        let f = UPoly::from_ints(&[-5, 2, 8, -3, -3, 0, 1, 0, 1]);
        let g = UPoly::from_ints(&[21, -9, -4, 0, 5, 0, 3]);
        let seq = subresultant_seq(&f, &g).unwrap();
        let degs: Vec<_> = seq.polys.iter().map(|p| p.degree().unwrap()).collect();
        assert_eq!(degs, vec![8, 6, 4, 2, 1, 0]);
        assert_eq!(seq.polys[2], UPoly::from_ints(&[9, 0, -3, 0, 15]));
        assert_eq!(*seq.polys[5].lc(), BigInt::from(260_708));
    }
}
