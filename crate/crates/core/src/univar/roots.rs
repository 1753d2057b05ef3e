//! Sturm sequences and certified real root isolation over `Z[x]`.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::prs::resultant;
use super::upoly::UPoly;
use crate::error::{Error, Result};
use crate::numeric::{fmt_rational, int, Rational};

/// Point of the extended real line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtPoint {
    NegInf,
    At(Rational),
    PosInf,
}

pub fn content(f: &UPoly<BigInt>) -> BigInt {
    f.coeffs().iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with a positive leading coefficient.
pub fn primitive(f: &UPoly<BigInt>) -> UPoly<BigInt> {
    let g = content(f);
    if g.is_zero() {
        return f.clone();
    }
    let g = if f.lc().is_negative() { -g } else { g };
    f.div_scalar(&g).expect("content divides every coefficient")
}

/// Sign of `f(x)` from a single integer evaluation.
pub fn sign_at(f: &UPoly<BigInt>, x: &Rational) -> Sign {
    let d = match f.degree() {
        Some(d) => d,
        None => return Sign::NoSign,
    };
    let (n, q) = (x.numer(), x.denom());
    // sum c_k n^k q^(d-k), same sign as f(n/q) because q > 0
    let mut acc = BigInt::zero();
    let mut qpow = BigInt::one();
    for k in (0..=d).rev() {
        acc = acc * n + f.coeff(k) * &qpow;
        if k > 0 {
            qpow *= q;
        }
    }
    acc.sign()
}

pub fn eval_rat(f: &UPoly<BigInt>, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in f.coeffs().iter().rev() {
        acc = acc * x + Rational::from_integer(c.clone());
    }
    acc
}

pub fn sign_at_ext(f: &UPoly<BigInt>, p: &ExtPoint) -> Sign {
    match p {
        ExtPoint::At(x) => sign_at(f, x),
        ExtPoint::PosInf => f.lc().sign(),
        ExtPoint::NegInf => {
            let s = f.lc().sign();
            if f.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }
    }
}

/// Sturm sequence `f, f', -rem, ...` kept in `Z[x]` by positive scaling.
pub fn sturm_sequence(f: &UPoly<BigInt>) -> Vec<UPoly<BigInt>> {
    let mut seq = vec![f.clone()];
    if f.degree().unwrap_or(0) == 0 {
        return seq;
    }
    let d = f.derivative();
    seq.push(d);
    loop {
        let n = seq.len();
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        if b.degree().unwrap_or(0) == 0 {
            break;
        }
        let delta = a.degree().unwrap() - b.degree().unwrap();
        let r = a.prem(b);
        if r.is_zero() {
            break;
        }
        // prem = lc(b)^(delta+1) * rem; fix the sign so the scale is positive
        let neg_lc = b.lc().is_negative() && (delta + 1) % 2 == 1;
        let r = if neg_lc { r } else { r.neg() };
        let c = content(&r);
        seq.push(r.div_scalar(&c).expect("content divides"));
    }
    seq
}

pub fn sign_variations(seq: &[UPoly<BigInt>], at: &ExtPoint) -> usize {
    let mut last = Sign::NoSign;
    let mut v = 0;
    for p in seq {
        let s = sign_at_ext(p, at);
        if s == Sign::NoSign {
            continue;
        }
        if last != Sign::NoSign && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

/// Number of distinct real roots of `f` in `(a, b]`; neither endpoint may be
/// a root.
pub fn sturm_count(f: &UPoly<BigInt>, a: &Rational, b: &Rational) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    for e in [a, b] {
        if sign_at(f, e) == Sign::NoSign {
            return Err(Error::EndpointRoot(fmt_rational(e)));
        }
    }
    if a >= b {
        return Ok(0);
    }
    let seq = sturm_sequence(f);
    Ok(count_with(&seq, &ExtPoint::At(a.clone()), &ExtPoint::At(b.clone())))
}

fn count_with(seq: &[UPoly<BigInt>], a: &ExtPoint, b: &ExtPoint) -> usize {
    let va = sign_variations(seq, a);
    let vb = sign_variations(seq, b);
    va.saturating_sub(vb)
}

/// Number of distinct real roots.
pub fn count_real_roots(f: &UPoly<BigInt>) -> usize {
    if f.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let seq = sturm_sequence(f);
    count_with(&seq, &ExtPoint::NegInf, &ExtPoint::PosInf)
}

/// Greatest common divisor in `Z[x]`, positive leading coefficient.
pub fn gcd(a: &UPoly<BigInt>, b: &UPoly<BigInt>) -> UPoly<BigInt> {
    if a.is_zero() {
        return primitive(b).scale(&content(b));
    }
    if b.is_zero() {
        return primitive(a).scale(&content(a));
    }
    let c = content(a).gcd(&content(b));
    let (mut x, mut y) = (primitive(a), primitive(b));
    if x.degree() < y.degree() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() && y.degree() != Some(0) {
        let r = x.prem(&y);
        x = y;
        y = if r.is_zero() { r } else { primitive(&r) };
    }
    if y.is_zero() {
        primitive(&x).scale(&c)
    } else {
        UPoly::constant(c)
    }
}

/// `f / gcd(f, f')`, primitive with positive leading coefficient.
pub fn squarefree_part(f: &UPoly<BigInt>) -> Result<UPoly<BigInt>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() == Some(0) {
        return Ok(UPoly::constant(BigInt::one()));
    }
    let g = gcd(f, &f.derivative());
    let q = primitive(f).div_exact(&primitive(&g)).expect("gcd divides f");
    Ok(primitive(&q))
}

/// Every complex root satisfies `|z| <= 1 + ||f||_inf / |lc(f)|`.
pub fn cauchy_bound(f: &UPoly<BigInt>) -> Result<Rational> {
    match f.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::precondition("Cauchy bound of a constant")),
        Some(_) => {
            let m = f.coeffs().iter().map(|c| c.abs()).max().unwrap();
            Ok(int(1) + Rational::new(m, f.lc().abs()))
        }
    }
}

/// `(-1)^(d(d-1)/2) res(f, f') / lc(f)`.
pub fn discriminant(f: &UPoly<BigInt>) -> Result<BigInt> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if d < 2 {
        return Err(Error::precondition("discriminant needs degree >= 2"));
    }
    let r = resultant(f, &f.derivative())?;
    let q = r / f.lc();
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -q } else { q })
}

/// Isolating interval of one real root. When `exact_point` is set,
/// `lo == hi` equals the root; otherwise the root lies strictly inside
/// `(lo, hi)` and neither endpoint is a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub exact_point: Option<Rational>,
}

impl RootInterval {
    pub fn exact(r: Rational) -> Self {
        RootInterval { lo: r.clone(), hi: r.clone(), exact_point: Some(r) }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        match &self.exact_point {
            Some(r) => r == x,
            None => &self.lo < x && x < &self.hi,
        }
    }

    /// Bisects with the sign of the square-free polynomial `sqf` until the
    /// width is at most `max_width`.
    pub fn refine(&mut self, sqf: &UPoly<BigInt>, max_width: &Rational) {
        if self.exact_point.is_some() {
            return;
        }
        let mut s_lo = sign_at(sqf, &self.lo);
        while &self.width() > max_width {
            let m = self.midpoint();
            let s = sign_at(sqf, &m);
            if s == Sign::NoSign {
                *self = RootInterval::exact(m);
                return;
            }
            if s == s_lo {
                self.lo = m;
                s_lo = s;
            } else {
                self.hi = m;
            }
        }
    }

    /// Compares two disjoint intervals; overlapping ones are `Equal`.
    pub fn cmp_disjoint(&self, other: &Self) -> Ordering {
        if self.hi < other.lo || (self.hi == other.lo && self.exact_point.is_none()) {
            Ordering::Less
        } else if other.hi < self.lo || (other.hi == self.lo && other.exact_point.is_none()) {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    }
}

/// Isolates all distinct real roots of `f`, in increasing order.
pub fn isolate_real_roots(f: &UPoly<BigInt>) -> Result<Vec<RootInterval>> {
    let g = squarefree_part(f)?;
    isolate_squarefree(&g)
}

/// Isolation for a polynomial already known to be square-free.
pub fn isolate_squarefree(g: &UPoly<BigInt>) -> Result<Vec<RootInterval>> {
    if g.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let seq = sturm_sequence(g);
    let mut bound = cauchy_bound(g)?;
    while sign_at(g, &bound) == Sign::NoSign || sign_at(g, &-&bound) == Sign::NoSign {
        bound = bound * int(2);
    }
    let mut out = Vec::new();
    let lo = -&bound;
    let total = count_with(&seq, &ExtPoint::At(lo.clone()), &ExtPoint::At(bound.clone()));
    bisect(g, &seq, lo, bound, total, &mut out);
    Ok(out)
}

fn count_open(seq: &[UPoly<BigInt>], a: &Rational, b: &Rational) -> usize {
    count_with(seq, &ExtPoint::At(a.clone()), &ExtPoint::At(b.clone()))
}

// Endpoints are never roots of `g`; `n` roots lie in (a, b).
fn bisect(
    g: &UPoly<BigInt>,
    seq: &[UPoly<BigInt>],
    a: Rational,
    b: Rational,
    n: usize,
    out: &mut Vec<RootInterval>,
) {
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push(RootInterval { lo: a, hi: b, exact_point: None });
        return;
    }
    let m = (&a + &b) / int(2);
    if sign_at(g, &m) != Sign::NoSign {
        let left = count_open(seq, &a, &m);
        bisect(g, seq, a, m.clone(), left, out);
        bisect(g, seq, m, b, n - left, out);
        return;
    }
    // m is a root: carve out a neighbourhood holding no other root
    let mut eps = (&b - &a) / int(3);
    loop {
        let (l, r) = (&m - &eps, &m + &eps);
        if sign_at(g, &l) != Sign::NoSign
            && sign_at(g, &r) != Sign::NoSign
            && count_open(seq, &l, &r) == 1
        {
            let left = count_open(seq, &a, &l);
            bisect(g, seq, a, l, left, out);
            out.push(RootInterval::exact(m));
            bisect(g, seq, r, b, n - left - 1, out);
            return;
        }
        eps = eps / int(2);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::ratio;

    fn up(v: &[i64]) -> UPoly<BigInt> {
        UPoly::from_ints(v)
    }

    #[test]
    fn sturm_counts() {
        let f = up(&[-2, 0, 1]);
        assert_eq!(sturm_count(&f, &int(0), &int(2)).unwrap(), 1);
        assert_eq!(sturm_count(&f, &int(-2), &int(2)).unwrap(), 2);
        let sq = squarefree_part(&up(&[-1, 0, 1]).mul(&up(&[-1, 0, 1]))).unwrap();
        assert_eq!(sq, up(&[-1, 0, 1]));
        assert_eq!(sturm_count(&sq, &int(0), &int(3)).unwrap(), 1);
        assert!(matches!(sturm_count(&sq, &int(1), &int(3)), Err(Error::EndpointRoot(_))));
    }

    #[test]
    fn sign_evaluation_matches_rational_evaluation() {
        let f = up(&[3, -7, 0, 2]);
        for x in [ratio(-5, 3), ratio(1, 2), int(0), ratio(7, 4)] {
            let v = eval_rat(&f, &x);
            let s = if v.is_zero() { Sign::NoSign } else if v.is_positive() { Sign::Plus } else { Sign::Minus };
            assert_eq!(sign_at(&f, &x), s);
        }
    }

    #[test]
    fn isolates_sqrt_two() {
        let r = isolate_real_roots(&up(&[-2, 0, 1])).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r[0].hi <= int(0) && r[1].lo >= int(0));
        let mut a = r[1].clone();
        a.refine(&up(&[-2, 0, 1]), &ratio(1, 1000));
        assert!(a.lo < ratio(1415, 1000) && a.hi > ratio(1414, 1000));
    }

    #[test]
    fn rational_roots_become_exact() {
        let r = isolate_real_roots(&up(&[-2, 0, 2])).unwrap();
        assert_eq!(r.len(), 2);
        let sq = squarefree_part(&up(&[-2, 0, 2])).unwrap();
        let mut pts = Vec::new();
        for mut iv in r {
            iv.refine(&sq, &ratio(1, 1 << 20));
            assert!(iv.contains(&int(-1)) || iv.contains(&int(1)) || iv.exact_point.is_some());
            pts.push(iv);
        }
        assert!(pts[0].lo <= int(-1) && int(-1) <= pts[0].hi);
        assert!(pts[1].lo <= int(1) && int(1) <= pts[1].hi);
    }

    #[test]
    fn wilkinson_five() {
        let f = UPoly::from_roots(&[1, 2, 3, 4, 5]);
        let r = isolate_real_roots(&f).unwrap();
        assert_eq!(r.len(), 5);
        for (k, iv) in r.iter().enumerate() {
            let root = int(k as i64 + 1);
            assert!(iv.lo <= root && root <= iv.hi);
        }
        for w in r.windows(2) {
            assert_eq!(w[0].cmp_disjoint(&w[1]), Ordering::Less);
        }
    }

    #[test]
    fn cauchy_bounds() {
        assert!(cauchy_bound(&up(&[-2, 0, 1])).unwrap() >= ratio(3, 2));
        assert_eq!(cauchy_bound(&up(&[28, -5, 1])).unwrap(), int(29));
        assert!(cauchy_bound(&up(&[4])).is_err());
    }

    #[test]
    fn discriminants() {
        assert_eq!(discriminant(&up(&[-1, 0, 1])).unwrap(), BigInt::from(4));
        assert_eq!(discriminant(&up(&[1, 0, 1])).unwrap(), BigInt::from(-4));
        assert_eq!(discriminant(&up(&[0, -1, 0, 1])).unwrap(), BigInt::from(4));
    }

    #[test]
    fn gcd_of_shared_factors() {
        let a = UPoly::from_roots(&[1, 2, 2]);
        let b = UPoly::from_roots(&[2, 3]).scale(&BigInt::from(6));
        assert_eq!(gcd(&a, &b), UPoly::from_roots(&[2]));
        assert_eq!(gcd(&up(&[4, 6]), &up(&[6, 9])), up(&[2, 3]));
    }
}
