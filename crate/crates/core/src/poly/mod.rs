//! Sparse multivariate Laurent polynomials with integer coefficients.

mod text;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{RatInterval, Rational};
use crate::univar::UPoly;

pub use text::{format_poly, parse_poly};
pub(crate) use text::parse_poly_at;

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `Z[x_1^{±1}, ..., x_n^{±1}]`.
///
/// Terms live in a map keyed by [`Monomial`], so no exponent repeats, no
/// stored coefficient is zero, and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

/// Scalar measures of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMeasures {
    /// `None` stands for the degree of the zero polynomial.
    pub total_degree: Option<i64>,
    pub degrees: Vec<i32>,
    pub inf_norm: BigInt,
    pub two_norm_sq: BigInt,
    /// One plus the bit length of the largest coefficient magnitude.
    pub bitsize: u64,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = SparsePoly::zero(nvars);
        p.add_term(vec![0; nvars], c.into());
        p
    }

    pub fn one(nvars: usize) -> Self {
        SparsePoly::constant(nvars, 1)
    }

    /// The variable `x_i` (zero based).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = SparsePoly::zero(nvars);
        p.add_term(e, BigInt::one());
        p
    }

    pub fn monomial(nvars: usize, coeff: impl Into<BigInt>, exps: Vec<i32>) -> Result<Self> {
        SparsePoly::from_terms(nvars, [(coeff.into(), exps)])
    }

    /// Builds a polynomial from `(coeff, exponents)` pairs; repeated
    /// exponents are summed and zero coefficients dropped.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BigInt, Vec<i32>)>,
    {
        let mut p = SparsePoly::zero(nvars);
        for (c, e) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Vec<i32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = Monomial(e);
        let remove = match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                v.is_zero()
            }
            None => {
                self.terms.insert(key.clone(), c);
                false
            }
        };
        if remove {
            self.terms.remove(&key);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i32]) -> BigInt {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Graded-lex largest term.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.0.iter().all(|&e| e == 0))
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&vec![0; self.nvars])
    }

    fn check_dims(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            Err(Error::DimensionMismatch { expected: self.nvars, found: other.nvars })
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.0.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.0.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        let mut e = vec![0i32; self.nvars];
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                for k in 0..self.nvars {
                    e[k] = ma.0[k] + mb.0[k];
                }
                let prod = ca * cb;
                match acc.get_mut(&Monomial(e.clone())) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(Monomial(e.clone()), prod);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(SparsePoly { nvars: self.nvars, terms: acc })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = SparsePoly::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    pub fn min_degree_in(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.0[var]).min()
    }

    pub fn measures(&self) -> PolyMeasures {
        let mut inf = BigInt::zero();
        let mut two = BigInt::zero();
        for c in self.terms.values() {
            let a = c.abs();
            two += &a * &a;
            if a > inf {
                inf = a;
            }
        }
        let degrees = (0..self.nvars)
            .map(|v| self.degree_in(v).unwrap_or(0))
            .collect();
        PolyMeasures {
            total_degree: self.total_degree(),
            degrees,
            bitsize: 1 + inf.bits(),
            inf_norm: inf,
            two_norm_sq: two,
        }
    }

    pub fn support(&self) -> Result<Vec<Vec<i32>>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.terms.keys().map(|m| m.0.clone()).collect())
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(|m| m.0.iter().any(|&e| e < 0))
    }

    /// Exact value at a rational point.
    pub fn eval_rational(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: point.len() });
        }
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        for v in 0..self.nvars {
            if point[v].is_zero() && self.min_degree_in(v).unwrap_or(0) < 0 {
                return Err(Error::ZeroToNegativePower(v));
            }
        }
        if self.has_negative_exponents() {
            let mut acc = Rational::zero();
            for (m, c) in &self.terms {
                let mut t = Rational::from_integer(c.clone());
                for (v, &e) in m.0.iter().enumerate() {
                    if e != 0 {
                        t *= point[v].pow(e);
                    }
                }
                acc += t;
            }
            return Ok(acc);
        }
        // common denominator evaluation: one division at the end
        let mut num_pows: Vec<Vec<BigInt>> = Vec::with_capacity(self.nvars);
        let mut den_pows: Vec<Vec<BigInt>> = Vec::with_capacity(self.nvars);
        let mut top = Vec::with_capacity(self.nvars);
        for v in 0..self.nvars {
            let dv = self.degree_in(v).unwrap_or(0).max(0) as usize;
            top.push(dv);
            num_pows.push(powers(point[v].numer(), dv));
            den_pows.push(powers(point[v].denom(), dv));
        }
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in 0..self.nvars {
                let e = m.0[v] as usize;
                if e > 0 {
                    t *= &num_pows[v][e];
                }
                if top[v] > e {
                    t *= &den_pows[v][top[v] - e];
                }
            }
            acc += t;
        }
        let mut den = BigInt::one();
        for v in 0..self.nvars {
            den *= &den_pows[v][top[v]];
        }
        Ok(Rational::new(acc, den))
    }

    /// Enclosure of the range over a box.
    pub fn eval_interval(&self, boxes: &[RatInterval]) -> Result<RatInterval> {
        if boxes.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: boxes.len() });
        }
        let mut acc = RatInterval::point(Rational::zero());
        for (m, c) in &self.terms {
            let mut t = RatInterval::point(Rational::from_integer(c.clone()));
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &boxes[v].pow(e as u32);
                } else if e < 0 {
                    let r = boxes[v].recip().ok_or(Error::ZeroToNegativePower(v))?;
                    t = &t * &r.pow((-e) as u32);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Positive gcd of the coefficients, zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides by the content; the sign is kept.
    pub fn primitive(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c / &g)).collect(),
        }
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = SparsePoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e != 0 {
                let mut ne = m.0.clone();
                ne[var] -= 1;
                out.add_term(ne, c * BigInt::from(e));
            }
        }
        out
    }

    /// Multiplies by the smallest monomial making every exponent
    /// nonnegative; returns the product and the applied shift.
    pub fn clear_negative_exponents(&self) -> (Self, Vec<i32>) {
        let shift: Vec<i32> = (0..self.nvars)
            .map(|v| (-self.min_degree_in(v).unwrap_or(0)).max(0))
            .collect();
        if shift.iter().all(|&s| s == 0) {
            return (self.clone(), shift);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let e = m.0.iter().zip(&shift).map(|(a, b)| a + b).collect();
                (Monomial(e), c.clone())
            })
            .collect();
        (SparsePoly { nvars: self.nvars, terms }, shift)
    }

    /// Re-indexes variables: variable `i` becomes variable `map[i]` of a
    /// ring with `new_nvars` variables.
    pub fn embed(&self, new_nvars: usize, map: &[usize]) -> Result<Self> {
        if map.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: map.len() });
        }
        if map.iter().any(|&t| t >= new_nvars) {
            return Err(Error::precondition("variable map points outside the target ring"));
        }
        let mut out = SparsePoly::zero(new_nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; new_nvars];
            for (i, &t) in map.iter().enumerate() {
                e[t] += m.0[i];
            }
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    /// Substitutes a rational for one variable. Returns an integer
    /// polynomial `p` and a positive `den` with `self|_{var=value} = p/den`;
    /// `var` keeps a zero exponent in `p`.
    pub fn partial_eval(&self, var: usize, value: &Rational) -> Result<(Self, BigInt)> {
        if self.min_degree_in(var).unwrap_or(0) < 0 {
            return Err(Error::precondition("partial evaluation needs nonnegative exponents"));
        }
        let top = self.degree_in(var).unwrap_or(0) as usize;
        let np = powers(value.numer(), top);
        let dp = powers(value.denom(), top);
        let mut out = SparsePoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            let mut ne = m.0.clone();
            ne[var] = 0;
            out.add_term(ne, c * &np[e] * &dp[top - e]);
        }
        Ok((out, dp[top].clone()))
    }

    /// View as a polynomial in `var` whose coefficients live in the same
    /// ring with the `var` exponent zeroed.
    pub fn to_univariate(&self, var: usize) -> Result<UPoly<SparsePoly>> {
        if self.min_degree_in(var).unwrap_or(0) < 0 {
            return Err(Error::precondition("univariate view needs nonnegative exponents"));
        }
        let top = self.degree_in(var).unwrap_or(0) as usize;
        let mut coeffs = vec![SparsePoly::zero(self.nvars); top + 1];
        for (m, c) in &self.terms {
            let k = m.0[var] as usize;
            let mut e = m.0.clone();
            e[var] = 0;
            coeffs[k].add_term(e, c.clone());
        }
        Ok(UPoly::new(coeffs, SparsePoly::zero(self.nvars)))
    }

    pub fn from_univariate(u: &UPoly<SparsePoly>, var: usize) -> Self {
        let nvars = u.zero_template().nvars;
        let mut out = SparsePoly::zero(nvars);
        for (k, c) in u.coeffs().iter().enumerate() {
            for (m, a) in &c.terms {
                let mut e = m.0.clone();
                e[var] += k as i32;
                out.add_term(e, a.clone());
            }
        }
        out
    }

    /// Dense integer view of a univariate polynomial.
    pub fn to_upoly_int(&self) -> Result<UPoly<BigInt>> {
        if self.nvars != 1 {
            return Err(Error::DimensionMismatch { expected: 1, found: self.nvars });
        }
        if self.has_negative_exponents() {
            return Err(Error::precondition("dense view needs nonnegative exponents"));
        }
        let top = self.degree_in(0).unwrap_or(0) as usize;
        let mut coeffs = vec![BigInt::zero(); top + 1];
        for (m, c) in &self.terms {
            coeffs[m.0[0] as usize] = c.clone();
        }
        Ok(UPoly::new(coeffs, BigInt::zero()))
    }

    pub fn from_upoly_int(u: &UPoly<BigInt>) -> Self {
        let mut out = SparsePoly::zero(1);
        for (k, c) in u.coeffs().iter().enumerate() {
            out.add_term(vec![k as i32], c.clone());
        }
        out
    }

    /// Exact quotient when `divisor` divides `self` in the polynomial ring.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() || self.nvars != divisor.nvars {
            return None;
        }
        if divisor.len() == 1 {
            let (dm, dc) = divisor.leading_term()?;
            let mut out = SparsePoly::zero(self.nvars);
            for (m, c) in &self.terms {
                let (q, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                let e: Vec<i32> = m.0.iter().zip(&dm.0).map(|(a, b)| a - b).collect();
                out.add_term(e, q);
            }
            return Some(out);
        }
        let (dm, dc) = divisor.leading_term()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = SparsePoly::zero(self.nvars);
        while let Some((rm, rc)) = rem.leading_term() {
            let e: Vec<i32> = rm.0.iter().zip(&dm.0).map(|(a, b)| a - b).collect();
            if e.iter().any(|&x| x < 0) {
                return None;
            }
            let (q, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let t = SparsePoly::monomial(self.nvars, q, e).ok()?;
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Some(quot)
    }
}

fn powers(base: &BigInt, top: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(top + 1);
    out.push(BigInt::one());
    for k in 1..=top {
        let next = &out[k - 1] * base;
        out.push(next);
    }
    out
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self))
    }
}

// Operator forms panic on mismatched rings; the `try_*` methods report it.
impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, o: &SparsePoly) -> SparsePoly {
        self.try_add(o).expect("polynomials from different rings")
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, o: &SparsePoly) -> SparsePoly {
        self.try_sub(o).expect("polynomials from different rings")
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, o: &SparsePoly) -> SparsePoly {
        self.try_mul(o).expect("polynomials from different rings")
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, ratio};

    fn p(s: &str, n: usize) -> SparsePoly {
        parse_poly(s, n).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let a = p("1:1;1:0", 1);
        let b = p("1:1;-1:0", 1);
        assert_eq!(&a * &b, p("1:2;-1:0", 1));
        assert!((&a * &SparsePoly::zero(1)).is_zero());
    }

    #[test]
    fn sum_of_squared_lines() {
        let l1 = p("1:1,0;2:0,1;-3:0,0", 2);
        let l2 = p("1:1,0;2:0,1;-4:0,0", 2);
        let s = &l1.pow(2) + &l2.pow(2);
        assert_eq!(s, p("2:2,0;8:1,1;8:0,2;-14:1,0;-28:0,1;25:0,0", 2));
        let m = s.measures();
        assert_eq!(m.total_degree, Some(2));
        assert_eq!(m.inf_norm, BigInt::from(28));
        assert_eq!(m.bitsize, 6);
    }

    #[test]
    fn measures_of_a_variable() {
        let m = SparsePoly::var(1, 0).measures();
        assert_eq!((m.total_degree, m.inf_norm.clone(), m.bitsize), (Some(1), BigInt::one(), 2));
        let u = p("1:1,0,0;1:0,1,0;1:0,0,1", 3).measures();
        assert_eq!((u.total_degree, u.inf_norm), (Some(1), BigInt::one()));
        let z = SparsePoly::zero(2).measures();
        assert_eq!(z.total_degree, None);
        assert!(z.inf_norm.is_zero());
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let err = SparsePoly::var(1, 0).try_add(&SparsePoly::var(2, 0)).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 1, found: 2 });
    }

    #[test]
    fn supports() {
        assert_eq!(p("1:2;-1:0", 1).support().unwrap(), vec![vec![0], vec![2]]);
        let s = p("1:1,1;1:1,0;1:0,0", 2).support().unwrap();
        assert_eq!(s.len(), 3);
        assert!(s.contains(&vec![1, 1]) && s.contains(&vec![1, 0]) && s.contains(&vec![0, 0]));
        let l = p("1:-1,1;1:0,0", 2).support().unwrap();
        assert!(l.contains(&vec![-1, 1]));
        assert_eq!(SparsePoly::zero(1).support(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn rational_evaluation() {
        let f = p("1:2;-1:0", 1);
        assert_eq!(f.eval_rational(&[int(3)]).unwrap(), int(8));
        assert_eq!(f.eval_rational(&[ratio(1, 2)]).unwrap(), ratio(-3, 4));
        assert_eq!(p("2:2;-2:0", 1).eval_rational(&[int(1)]).unwrap(), int(0));
        let l = p("1:-1;1:0", 1);
        assert_eq!(l.eval_rational(&[int(0)]), Err(Error::ZeroToNegativePower(0)));
        assert_eq!(l.eval_rational(&[int(2)]).unwrap(), ratio(3, 2));
    }

    #[test]
    fn exact_division() {
        let a = p("1:1,0;1:0,1;-1:0,0", 2);
        let b = p("1:1,0;-1:0,1", 2);
        let ab = &a * &b;
        assert_eq!(ab.div_exact(&b), Some(a.clone()));
        assert_eq!(ab.div_exact(&a), Some(b));
        assert_eq!(a.div_exact(&p("2:0,0", 2)), None);
    }

    #[test]
    fn univariate_round_trip() {
        let f = p("3:2,1;-1:0,2;5:1,0", 2);
        let u = f.to_univariate(0).unwrap();
        assert_eq!(u.degree(), Some(2));
        assert_eq!(SparsePoly::from_univariate(&u, 0), f);
    }

    #[test]
    fn partial_evaluation_scales_to_integers() {
        let f = p("1:2,0;1:0,2;-2:0,0", 2);
        let (g, den) = f.partial_eval(0, &ratio(1, 2)).unwrap();
        assert_eq!(den, BigInt::from(4));
        assert_eq!(g, p("4:0,2;-7:0,0", 2));
    }

    #[test]
    fn interval_evaluation_encloses_values() {
        let f = p("1:2,0;-3:1,1;1:0,0", 2);
        let b = [RatInterval::new(int(-1), int(2)), RatInterval::new(int(0), int(1))];
        let r = f.eval_interval(&b).unwrap();
        for x in [int(-1), int(0), ratio(3, 2), int(2)] {
            for y in [int(0), ratio(1, 3), int(1)] {
                let v = f.eval_rational(&[x.clone(), y.clone()]).unwrap();
                assert!(r.contains(&v));
            }
        }
    }

    #[test]
    fn clearing_laurent_exponents() {
        let f = p("1:-1,1;1:0,0", 2);
        let (g, s) = f.clear_negative_exponents();
        assert_eq!(s, vec![1, 0]);
        assert_eq!(g, p("1:0,1;1:1,0", 2));
    }
}
