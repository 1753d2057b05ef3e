use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::numeric::Rational;
use crate::poly::SparsePoly;

/// Coefficient domain of a dense univariate polynomial: an integral domain
/// whose exact divisions can be tested.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_c(&self) -> bool;
    fn add_c(&self, o: &Self) -> Self;
    fn sub_c(&self, o: &Self) -> Self;
    fn mul_c(&self, o: &Self) -> Self;
    fn neg_c(&self) -> Self;
    fn mul_int(&self, k: i64) -> Self;
    /// `Some(q)` with `q * o == self`, `None` if no such `q` exists.
    fn div_exact_c(&self, o: &Self) -> Option<Self>;

    fn pow_c(&self, e: usize) -> Self {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = acc.mul_c(self);
        }
        acc
    }
}

impl Coeff for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero_c(&self) -> bool {
        self.is_zero()
    }
    fn add_c(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_c(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_c(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_c(&self) -> Self {
        -self
    }
    fn mul_int(&self, k: i64) -> Self {
        self * BigInt::from(k)
    }
    fn div_exact_c(&self, o: &Self) -> Option<Self> {
        if o.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(o);
        r.is_zero().then_some(q)
    }
    fn pow_c(&self, e: usize) -> Self {
        num_traits::pow(self.clone(), e)
    }
}

impl Coeff for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_c(&self) -> bool {
        self.is_zero()
    }
    fn add_c(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_c(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_c(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_c(&self) -> Self {
        -self
    }
    fn mul_int(&self, k: i64) -> Self {
        self * Rational::from_integer(BigInt::from(k))
    }
    fn div_exact_c(&self, o: &Self) -> Option<Self> {
        (!o.is_zero()).then(|| self / o)
    }
}

impl Coeff for SparsePoly {
    fn zero_like(&self) -> Self {
        SparsePoly::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        SparsePoly::one(self.nvars())
    }
    fn is_zero_c(&self) -> bool {
        self.is_zero()
    }
    fn add_c(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_c(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_c(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_c(&self) -> Self {
        -self
    }
    fn mul_int(&self, k: i64) -> Self {
        self.scale(&BigInt::from(k))
    }
    fn div_exact_c(&self, o: &Self) -> Option<Self> {
        self.div_exact(o)
    }
    fn pow_c(&self, e: usize) -> Self {
        self.pow(e as u32)
    }
}

/// Dense univariate polynomial, coefficients stored from degree 0 upward
/// with no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct UPoly<C: Coeff> {
    coeffs: Vec<C>,
    zero: C,
}

impl<C: Coeff> UPoly<C> {
    pub fn new(mut coeffs: Vec<C>, zero: C) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero_c()) {
            coeffs.pop();
        }
        UPoly { coeffs, zero }
    }

    pub fn zero(zero: C) -> Self {
        UPoly { coeffs: Vec::new(), zero }
    }

    pub fn constant(c: C) -> Self {
        let z = c.zero_like();
        UPoly::new(vec![c], z)
    }

    /// The polynomial `c * t^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        let z = c.zero_like();
        let mut v = vec![z.clone(); k];
        v.push(c);
        UPoly::new(v, z)
    }

    pub fn zero_template(&self) -> &C {
        &self.zero
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &C {
        self.coeffs.get(k).unwrap_or(&self.zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient; the zero template for the zero polynomial.
    pub fn lc(&self) -> &C {
        self.coeffs.last().unwrap_or(&self.zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n).map(|k| self.coeff(k).add_c(o.coeff(k))).collect();
        UPoly::new(v, self.zero.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n).map(|k| self.coeff(k).sub_c(o.coeff(k))).collect();
        UPoly::new(v, self.zero.clone())
    }

    pub fn neg(&self) -> Self {
        UPoly::new(self.coeffs.iter().map(C::neg_c).collect(), self.zero.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero(self.zero.clone());
        }
        let mut v = vec![self.zero.clone(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_c() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero_c() {
                    v[i + j] = v[i + j].add_c(&a.mul_c(b));
                }
            }
        }
        UPoly::new(v, self.zero.clone())
    }

    pub fn scale(&self, c: &C) -> Self {
        UPoly::new(self.coeffs.iter().map(|a| a.mul_c(c)).collect(), self.zero.clone())
    }

    /// Divides every coefficient exactly by `c`.
    pub fn div_scalar(&self, c: &C) -> Option<Self> {
        let v = self
            .coeffs
            .iter()
            .map(|a| a.div_exact_c(c))
            .collect::<Option<Vec<_>>>()?;
        Some(UPoly::new(v, self.zero.clone()))
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![self.zero.clone(); k];
        v.extend(self.coeffs.iter().cloned());
        UPoly::new(v, self.zero.clone())
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul_int(k as i64))
            .collect();
        UPoly::new(v, self.zero.clone())
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn prem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-division by zero");
        let da = match self.degree() {
            Some(d) if d >= db => d,
            _ => return self.clone(),
        };
        let lcb = b.lc().clone();
        let mut r = self.clone();
        let mut e = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let t = UPoly::monomial(r.lc().clone(), dr - db);
            r = r.scale(&lcb).sub(&t.mul(b));
            e -= 1;
        }
        r.scale(&lcb.pow_c(e))
    }

    /// Exact quotient by `b` when the division leaves no remainder.
    pub fn div_exact(&self, b: &Self) -> Option<Self> {
        let db = b.degree()?;
        let mut r = self.clone();
        let mut q = vec![self.zero.clone(); self.coeffs.len().saturating_sub(db)];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let c = r.lc().div_exact_c(b.lc())?;
            q[dr - db] = c.clone();
            r = r.sub(&UPoly::monomial(c, dr - db).mul(b));
        }
        Some(UPoly::new(q, self.zero.clone()))
    }

    /// Horner evaluation inside the coefficient domain.
    pub fn eval(&self, t: &C) -> C {
        let mut acc = self.zero.clone();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_c(t).add_c(c);
        }
        acc
    }

    pub fn map<D: Coeff>(&self, zero: D, f: impl Fn(&C) -> D) -> UPoly<D> {
        UPoly::new(self.coeffs.iter().map(f).collect(), zero)
    }
}

impl UPoly<BigInt> {
    pub fn from_ints(v: &[i64]) -> Self {
        UPoly::new(v.iter().map(|&c| BigInt::from(c)).collect(), BigInt::zero())
    }

    /// Polynomial with the given integer roots and leading coefficient 1.
    pub fn from_roots(roots: &[i64]) -> Self {
        let mut acc = UPoly::from_ints(&[1]);
        for &r in roots {
            acc = acc.mul(&UPoly::from_ints(&[-r, 1]));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pseudo_remainder_identity() {
        let a = UPoly::from_ints(&[1, 0, 3, 2]);
        let b = UPoly::from_ints(&[-1, 3]);
        let r = a.prem(&b);
        // 3^3 * a(1/3) = 27 + 9 + 2 = 38
        assert_eq!(r, UPoly::from_ints(&[38]));
    }

    #[test]
    fn exact_quotient() {
        let a = UPoly::from_roots(&[1, 2, -3]);
        let b = UPoly::from_roots(&[2]);
        assert_eq!(a.div_exact(&b), Some(UPoly::from_roots(&[1, -3])));
        assert_eq!(a.div_exact(&UPoly::from_roots(&[5])), None);
    }

    #[test]
    fn derivative_and_eval() {
        let a = UPoly::from_ints(&[5, 0, 1]);
        assert_eq!(a.derivative(), UPoly::from_ints(&[0, 2]));
        assert_eq!(a.eval(&BigInt::from(3)), BigInt::from(14));
    }
}
