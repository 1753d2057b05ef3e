//! Independent real root oracle for bivariate systems.
//!
//! Roots are found by projection: `x` ranges over the real roots of
//! `res_y(f, g)`, and over each such `x = a` the fiber gcd of `f(a, y)` and
//! `g(a, y)` is computed exactly in `Q(a)[y]` by a Euclidean algorithm whose
//! zero tests are decided through `gcd(c, m_a)`, `m_a` the square-free
//! projection. Candidate `y` values are the real roots of `res_x(f, g)`;
//! a Sturm count of the fiber gcd over each candidate interval decides
//! membership. Nothing here shares code with the volume-function oracle.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{int, RatInterval, Rational};
use crate::poly::SparsePoly;
use crate::univar::{gcd, isolate_squarefree, primitive, resultant_in, sign_at, squarefree_part, RootInterval, UPoly};

const MAX_REFINE: usize = 4096;

/// One real root, as a product of isolating intervals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleRoot {
    pub x: RootInterval,
    pub y: RootInterval,
}

impl OracleRoot {
    pub fn x_interval(&self) -> RatInterval {
        RatInterval::new(self.x.lo.clone(), self.x.hi.clone())
    }

    pub fn y_interval(&self) -> RatInterval {
        RatInterval::new(self.y.lo.clone(), self.y.hi.clone())
    }

    /// Whether the first (second) coordinate is exactly zero.
    pub fn zero_coords(&self) -> [bool; 2] {
        let z = |r: &RootInterval| r.exact_point.as_ref().map_or(false, Zero::is_zero);
        [z(&self.x), z(&self.y)]
    }
}

/// Real roots with the square-free projections needed to refine them.
#[derive(Clone, Debug)]
pub struct OracleRoots {
    pub x_poly: UPoly<BigInt>,
    pub y_poly: UPoly<BigInt>,
    pub roots: Vec<OracleRoot>,
}

impl OracleRoots {
    /// Refines every coordinate interval to width at most `w`.
    pub fn refine(&mut self, w: &Rational) {
        for r in &mut self.roots {
            r.x.refine(&self.x_poly, w);
            r.y.refine(&self.y_poly, w);
        }
    }
}

/// Integer polynomial in the surviving variable of a two-variable
/// polynomial free of the other one.
fn project(p: &SparsePoly, keep: usize) -> UPoly<BigInt> {
    let top = p.degree_in(keep).unwrap_or(0).max(0) as usize;
    let mut v = vec![BigInt::zero(); top + 1];
    for (m, c) in p.terms() {
        v[m.0[keep] as usize] += c;
    }
    UPoly::new(v, BigInt::zero())
}

fn rat_poly(p: &UPoly<BigInt>) -> UPoly<Rational> {
    p.map(Rational::zero(), |c| Rational::from_integer(c.clone()))
}

/// Primitive integer multiple of a rational polynomial.
fn int_poly(p: &UPoly<Rational>) -> UPoly<BigInt> {
    let den = p.coeffs().iter().fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
    let v = p.coeffs().iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    primitive(&UPoly::new(v, BigInt::zero()))
}

fn eval_interval(p: &UPoly<Rational>, iv: &RatInterval) -> RatInterval {
    let mut acc = RatInterval::point(Rational::zero());
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * iv) + &RatInterval::point(c.clone());
    }
    acc
}

/// A real algebraic number `a`: the unique root of the square-free `m`
/// in an isolating interval. Arithmetic happens in `Q[x]/(m)`; only the
/// value at `a` matters.
struct AlgPoint {
    m: UPoly<BigInt>,
    monic: UPoly<Rational>,
    iv: RootInterval,
}

impl AlgPoint {
    fn new(m: &UPoly<BigInt>, iv: &RootInterval) -> Self {
        let mq = rat_poly(m);
        let lc = mq.lc().clone();
        let monic = mq.map(Rational::zero(), |c| c / &lc);
        AlgPoint { m: m.clone(), monic, iv: iv.clone() }
    }

    fn reduce(&self, c: &UPoly<Rational>) -> UPoly<Rational> {
        if c.degree().map_or(true, |d| d < self.monic.degree().unwrap()) {
            c.clone()
        } else {
            // prem by a monic divisor is the remainder
            c.prem(&self.monic)
        }
    }

    fn is_zero(&self, c: &UPoly<Rational>) -> bool {
        if c.is_zero() {
            return true;
        }
        if let Some(a) = &self.iv.exact_point {
            return c.eval(a).is_zero();
        }
        let g = gcd(&int_poly(c), &self.m);
        if g.degree().unwrap_or(0) == 0 {
            return false;
        }
        // g divides the square-free m, so a is a simple root of g when it
        // is a root at all
        sign_at(&g, &self.iv.lo) != sign_at(&g, &self.iv.hi)
    }

    fn sign(&mut self, c: &UPoly<Rational>) -> Result<Sign> {
        if self.is_zero(c) {
            return Ok(Sign::NoSign);
        }
        if let Some(a) = &self.iv.exact_point {
            return Ok(if c.eval(a).is_positive() { Sign::Plus } else { Sign::Minus });
        }
        for _ in 0..MAX_REFINE {
            let v = eval_interval(c, &RatInterval::new(self.iv.lo.clone(), self.iv.hi.clone()));
            if let Some(s) = v.sign() {
                if s != Sign::NoSign {
                    return Ok(s);
                }
            }
            let w = self.iv.width() / int(2);
            self.iv.refine(&self.m, &w);
            if let Some(a) = &self.iv.exact_point {
                return Ok(if c.eval(a).is_positive() { Sign::Plus } else { Sign::Minus });
            }
        }
        Err(Error::Oracle("sign at an algebraic point did not resolve".into()))
    }
}

/// Polynomial in `y` with coefficients in `Q[x]/(m)`, ascending degree.
type YPoly = Vec<UPoly<Rational>>;

fn y_coeffs(p: &SparsePoly) -> YPoly {
    let top = p.degree_in(1).unwrap_or(0).max(0) as usize;
    let mut v: Vec<Vec<BigInt>> = vec![Vec::new(); top + 1];
    for (m, c) in p.terms() {
        let (i, j) = (m.0[0] as usize, m.0[1] as usize);
        if v[j].len() <= i {
            v[j].resize(i + 1, BigInt::zero());
        }
        v[j][i] += c;
    }
    v.into_iter().map(|c| rat_poly(&UPoly::new(c, BigInt::zero()))).collect()
}

fn strip(a: &AlgPoint, mut p: YPoly) -> YPoly {
    for c in p.iter_mut() {
        *c = a.reduce(c);
    }
    while p.last().map_or(false, |c| a.is_zero(c)) {
        p.pop();
    }
    p
}

fn scale_y(a: &AlgPoint, p: &YPoly, c: &UPoly<Rational>) -> YPoly {
    p.iter().map(|t| a.reduce(&t.mul(c))).collect()
}

/// `lc(b)^k a - q b` with `deg < deg b`, and the sign of `lc(b)^k` at `a`.
fn prem_y(pt: &mut AlgPoint, a: &YPoly, b: &YPoly) -> Result<(YPoly, Sign)> {
    let db = b.len() - 1;
    let lcb = b[db].clone();
    let mut r = a.clone();
    let mut steps = 0u32;
    while r.len() > db {
        let dr = r.len() - 1;
        let lcr = r[dr].clone();
        let mut next = scale_y(pt, &r, &lcb);
        for (k, bk) in b.iter().enumerate() {
            next[dr - db + k] = pt.reduce(&next[dr - db + k].sub(&bk.mul(&lcr)));
        }
        next.pop();
        r = strip(pt, next);
        steps += 1;
    }
    let s = pt.sign(&lcb)?;
    let sign = if s == Sign::Minus && steps % 2 == 1 { Sign::Minus } else { Sign::Plus };
    Ok((r, sign))
}

fn neg_y(p: &YPoly) -> YPoly {
    p.iter().map(UPoly::neg).collect()
}

fn deriv_y(pt: &AlgPoint, p: &YPoly) -> YPoly {
    let v = p.iter().enumerate().skip(1).map(|(k, c)| c.scale(&int(k as i64))).collect();
    strip(pt, v)
}

fn eval_y(pt: &AlgPoint, p: &YPoly, y: &Rational) -> UPoly<Rational> {
    let mut acc = UPoly::zero(Rational::zero());
    for c in p.iter().rev() {
        acc = pt.reduce(&acc.scale(y).add(c));
    }
    acc
}

/// Exact gcd of `f(a, y)` and `g(a, y)`, or `None` when both vanish.
fn fiber_gcd(pt: &mut AlgPoint, f: &SparsePoly, g: &SparsePoly) -> Result<Option<YPoly>> {
    let mut a = strip(pt, y_coeffs(f));
    let mut b = strip(pt, y_coeffs(g));
    if a.is_empty() && b.is_empty() {
        return Ok(None);
    }
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let (r, _) = prem_y(pt, &a, &b)?;
        a = b;
        b = r;
    }
    Ok(Some(a))
}

/// Sturm sequence of `p(a, y)` with every element a positive multiple of
/// the signed remainder.
fn sturm_y(pt: &mut AlgPoint, p: &YPoly) -> Result<Vec<YPoly>> {
    let mut seq = vec![p.clone(), deriv_y(pt, p)];
    while seq.last().map_or(false, |s| s.len() > 1) {
        let n = seq.len();
        let (r, s) = prem_y(pt, &seq[n - 2], &seq[n - 1])?;
        if r.is_empty() {
            break;
        }
        seq.push(if s == Sign::Plus { neg_y(&r) } else { r });
    }
    Ok(seq)
}

fn variations(pt: &mut AlgPoint, seq: &[YPoly], y: &Rational) -> Result<usize> {
    let mut last = Sign::NoSign;
    let mut n = 0;
    for s in seq {
        let v = pt.sign(&eval_y(pt, s, y))?;
        if v != Sign::NoSign {
            if last != Sign::NoSign && v != last {
                n += 1;
            }
            last = v;
        }
    }
    Ok(n)
}

/// All real roots of the bivariate system `f = g = 0`.
pub fn oracle_roots_2d(f: &SparsePoly, g: &SparsePoly) -> Result<OracleRoots> {
    for p in [f, g] {
        if p.nvars() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: p.nvars() });
        }
    }
    let f = f.clear_negative_exponents().0;
    let g = g.clear_negative_exponents().0;
    let rx = resultant_in(&f, &g, 1)?;
    let ry = resultant_in(&f, &g, 0)?;
    if rx.is_zero() || ry.is_zero() {
        return Err(Error::PositiveDimensional("a projection resultant vanishes".into()));
    }
    let x_poly = squarefree_part(&project(&rx, 0))?;
    let y_poly = squarefree_part(&project(&ry, 1))?;
    let xs = isolate_squarefree(&x_poly)?;
    let ys = isolate_squarefree(&y_poly)?;
    let mut roots = Vec::new();
    for xi in &xs {
        let mut pt = AlgPoint::new(&x_poly, xi);
        let fiber = fiber_gcd(&mut pt, &f, &g)?
            .ok_or_else(|| Error::PositiveDimensional("a vertical line lies on both curves".into()))?;
        if fiber.len() < 2 {
            continue;
        }
        let seq = sturm_y(&mut pt, &fiber)?;
        for yi in ys.iter() {
            let hit = match &yi.exact_point {
                Some(b) => pt.is_zero(&eval_y(&pt, &fiber, b)),
                None => {
                    let lo = variations(&mut pt, &seq, &yi.lo)?;
                    let hi = variations(&mut pt, &seq, &yi.hi)?;
                    lo > hi
                }
            };
            if hit {
                roots.push(OracleRoot { x: pt.iv.clone(), y: yi.clone() });
            }
        }
    }
    Ok(OracleRoots { x_poly, y_poly, roots })
}
