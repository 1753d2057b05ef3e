//! Volume function `V = u + (x - a)(y - b)` eliminated against `f(a, b)`,
//! `g(a, b)`, and the subresultant sequence of the result in `u`.

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::Rational;
use crate::poly::SparsePoly;
use crate::univar::{resultant_in, subresultant_seq};

/// Variable order of the elimination ring.
const X: usize = 0;
const Y: usize = 1;
const U: usize = 2;
const A: usize = 3;
const B: usize = 4;

/// Eliminant and its generic subresultant sequence in `u`.
///
/// All stored polynomials live in `Z[x, y, u]`; `lcs`, `betas` and
/// `sturm_at_zero` have zero `u` exponent.
#[derive(Clone, Debug)]
pub struct VolumeFunctionData {
    /// `res_a(f(a, b), V)` in `(x, y, u, a, b)`.
    pub h1: SparsePoly,
    /// `res_a(g(a, b), V)` in `(x, y, u, a, b)`.
    pub h2: SparsePoly,
    /// `res_b(h1, h2)` with `u^k` and the integer content removed.
    pub milne_h: SparsePoly,
    /// The removed power `k` of `u`.
    pub u_power: u32,
    pub content: BigInt,
    /// `S_0 = milne_h, S_1 = d milne_h / du, ...`.
    pub seq: Vec<SparsePoly>,
    pub lcs: Vec<SparsePoly>,
    pub degrees: Vec<usize>,
    pub betas: Vec<SparsePoly>,
    pub deltas: Vec<usize>,
    /// `S_k(x, y, 0)`.
    pub sturm_at_zero: Vec<SparsePoly>,
}

/// Drops trailing variables whose exponents are all zero.
pub(crate) fn truncate_vars(p: &SparsePoly, k: usize) -> SparsePoly {
    SparsePoly::from_terms(
        k,
        p.terms().map(|(m, c)| {
            debug_assert!(m.0[k..].iter().all(|&e| e == 0));
            (c.clone(), m.0[..k].to_vec())
        }),
    )
    .expect("truncated exponent vectors have the right length")
}

fn volume_poly() -> SparsePoly {
    // u + xy - xb - ay + ab
    let t = |c: i64, e: [i32; 5]| (BigInt::from(c), e.to_vec());
    SparsePoly::from_terms(
        5,
        [
            t(1, [0, 0, 1, 0, 0]),
            t(1, [1, 1, 0, 0, 0]),
            t(-1, [1, 0, 0, 0, 1]),
            t(-1, [0, 1, 0, 1, 0]),
            t(1, [0, 0, 0, 1, 1]),
        ],
    )
    .unwrap()
}

impl VolumeFunctionData {
    pub fn build(f: &SparsePoly, g: &SparsePoly) -> Result<Self> {
        for p in [f, g] {
            if p.nvars() != 2 {
                return Err(Error::DimensionMismatch { expected: 2, found: p.nvars() });
            }
            if p.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
        }
        let f = f.clear_negative_exponents().0;
        let g = g.clear_negative_exponents().0;
        if resultant_in(&f, &g, Y)?.is_zero() || resultant_in(&f, &g, X)?.is_zero() {
            return Err(Error::PositiveDimensional("f and g share a common factor".into()));
        }
        let v = volume_poly();
        let fab = f.embed(5, &[A, B])?;
        let gab = g.embed(5, &[A, B])?;
        let h1 = resultant_in(&fab, &v, A)?;
        let h2 = resultant_in(&gab, &v, A)?;
        let h = truncate_vars(&resultant_in(&h1, &h2, B)?, 3);
        if h.is_zero() {
            return Err(Error::PositiveDimensional("eliminant vanishes identically".into()));
        }
        let k = h.min_degree_in(U).unwrap_or(0);
        let shifted = SparsePoly::from_terms(
            3,
            h.terms().map(|(m, c)| (c.clone(), vec![m.0[0], m.0[1], m.0[2] - k])),
        )?;
        let content = shifted.content();
        let milne_h = shifted.primitive();
        if milne_h.degree_in(U).unwrap_or(0) == 0 {
            return Err(Error::Degenerate("eliminant is constant in u".into()));
        }
        let hu = milne_h.derivative(U);
        let seq_u = subresultant_seq(&milne_h.to_univariate(U)?, &hu.to_univariate(U)?)?;
        let seq: Vec<SparsePoly> = seq_u.polys.iter().map(|p| SparsePoly::from_univariate(p, U)).collect();
        let lcs = seq_u.polys.iter().map(|p| p.lc().clone()).collect();
        let degrees = seq_u.polys.iter().map(|p| p.degree().unwrap()).collect();
        let sturm_at_zero = seq_u.polys.iter().map(|p| p.coeff(0).clone()).collect();
        Ok(VolumeFunctionData {
            h1,
            h2,
            milne_h,
            u_power: k as u32,
            content,
            seq,
            lcs,
            degrees,
            betas: seq_u.betas,
            deltas: seq_u.deltas,
            sturm_at_zero,
        })
    }

    /// `sigma = 2 V(0) - V(+inf) - V(-inf)` of the specialized sequence at
    /// `(x, y)`, or `None` when the specialization is not regular.
    pub fn vertex_signature(&self, x: &Rational, y: &Rational) -> Result<Option<i64>> {
        let pt = [x.clone(), y.clone(), Rational::zero()];
        let sign = |p: &SparsePoly| -> Result<Sign> {
            let v = p.eval_rational(&pt)?;
            Ok(if v.is_zero() {
                Sign::NoSign
            } else if v.is_positive() {
                Sign::Plus
            } else {
                Sign::Minus
            })
        };
        let m = self.seq.len();
        let mut lc = Vec::with_capacity(m);
        let mut at0 = Vec::with_capacity(m);
        for k in 0..m {
            let l = sign(&self.lcs[k])?;
            let z = sign(&self.sturm_at_zero[k])?;
            if l == Sign::NoSign || z == Sign::NoSign {
                return Ok(None);
            }
            lc.push(l);
            at0.push(z);
        }
        let mut beta = Vec::with_capacity(self.betas.len());
        for b in &self.betas {
            let s = sign(b)?;
            if s == Sign::NoSign {
                return Ok(None);
            }
            beta.push(s);
        }
        // T_k = c_k S_k is the signed remainder sequence at this point
        let mut cs = vec![Sign::Plus; m];
        for k in 1..m.saturating_sub(1) {
            let mut s = -cs[k - 1] * beta[k - 1];
            if (self.deltas[k - 1] + 1) % 2 == 1 {
                s = s * lc[k];
            }
            cs[k + 1] = s;
        }
        let var = |signs: &mut dyn Iterator<Item = Sign>| -> i64 {
            let mut last = Sign::NoSign;
            let mut n = 0;
            for s in signs {
                if s != Sign::NoSign {
                    if last != Sign::NoSign && s != last {
                        n += 1;
                    }
                    last = s;
                }
            }
            n
        };
        let v0 = var(&mut (0..m).map(|k| cs[k] * at0[k]));
        let vpos = var(&mut (0..m).map(|k| cs[k] * lc[k]));
        let vneg = var(&mut (0..m).map(|k| {
            let s = cs[k] * lc[k];
            if self.degrees[k] % 2 == 1 {
                -s
            } else {
                s
            }
        }));
        Ok(Some(2 * v0 - vpos - vneg))
    }

    /// Real roots strictly inside the box from the four vertex signatures
    /// (`ll`, `hl`, `hh`, `lh` for `(x_lo, y_lo)`, `(x_hi, y_lo)`, ...).
    pub fn count_from_signatures(ll: i64, hl: i64, hh: i64, lh: i64) -> Result<u64> {
        let s = -(ll - hl + hh - lh);
        if s < 0 || s % 4 != 0 {
            return Err(Error::Degenerate(format!("variation sum {s} is not a nonnegative multiple of 4")));
        }
        Ok((s / 4) as u64)
    }
}
