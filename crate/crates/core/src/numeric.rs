//! Exact scalars and outward-rounded logarithms.
//!
//! Every logarithm in the crate is produced here as a rational bracket
//! `[lo, hi]` with `lo <= lg(x) <= hi`; nothing is routed through floats.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary precision rational, always reduced with a positive denominator.
pub type Rational = BigRational;

/// Guard bits carried by the fixed point squaring loop in [`lg_bracket`].
const GUARD_BITS: u64 = 24;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn big(v: &BigInt) -> Rational {
    Rational::from_integer(v.clone())
}

/// `2^k` for a signed exponent.
pub fn pow2(k: i64) -> Rational {
    if k >= 0 {
        Rational::from_integer(BigInt::one() << (k as usize))
    } else {
        Rational::new(BigInt::one(), BigInt::one() << ((-k) as usize))
    }
}

/// Largest integer `<= x`.
pub fn floor(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

/// Smallest integer `>= x`.
pub fn ceil(x: &Rational) -> BigInt {
    x.ceil().to_integer()
}

/// Number of significant bits of `|v|` (0 for zero).
pub fn bit_length(v: &BigInt) -> u64 {
    v.magnitude().bits()
}

/// Rational approximation for display only.
pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Formats a rational as `p/q`, or `p` when integral.
pub fn fmt_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// floor(lg x) for x > 0.
fn floor_lg(x: &Rational) -> i64 {
    let n = x.numer().magnitude();
    let d = x.denom().magnitude();
    let mut k = n.bits() as i64 - d.bits() as i64;
    // 2^k <= n/d < 2^(k+1) after at most one correction
    if compare_scaled(n, d, k) == Ordering::Less {
        k -= 1;
    }
    k
}

/// Compares n/d with 2^k.
fn compare_scaled(n: &BigUint, d: &BigUint, k: i64) -> Ordering {
    if k >= 0 {
        n.cmp(&(d << (k as usize)))
    } else {
        (n << ((-k) as usize)).cmp(d)
    }
}

/// Outward bracket of `lg x` (base 2) for a positive rational, with width
/// at most `2^-bits`. Exact powers of two give a degenerate bracket.
pub fn lg_bracket(x: &Rational, bits: u32) -> (Rational, Rational) {
    assert!(x.is_positive(), "lg of a non-positive value");
    let k = floor_lg(x);
    let y = x / pow2(k);
    if y.is_one() {
        return (int(k), int(k));
    }
    let p = bits as u64 + GUARD_BITS;
    let scale = BigInt::one() << p as usize;
    let two = &scale << 1usize;
    let scaled = &y * Rational::from_integer(scale.clone());
    let mut lo = scaled.floor().to_integer();
    let mut hi = scaled.ceil().to_integer();
    let mut frac_lo = BigInt::zero();
    let mut frac_hi = BigInt::zero();
    for _ in 0..bits {
        lo = (&lo * &lo) >> p as usize;
        let sq = &hi * &hi;
        hi = ceil_shift(&sq, p);
        frac_lo <<= 1usize;
        frac_hi <<= 1usize;
        if lo >= two {
            frac_lo += 1;
            lo >>= 1usize;
        }
        if hi >= two {
            frac_hi += 1;
            hi = ceil_shift(&hi, 1);
        }
    }
    let den = BigInt::one() << bits as usize;
    let lower = int(k) + Rational::new(frac_lo, den.clone());
    let upper = int(k) + Rational::new(frac_hi + 1, den);
    (lower, upper)
}

fn ceil_shift(v: &BigInt, s: u64) -> BigInt {
    let (q, r) = v.div_mod_floor(&(BigInt::one() << s as usize));
    if r.is_zero() {
        q
    } else {
        q + 1
    }
}

/// Bracket of Euler's number from the factorial series, width below `2^-bits`.
pub fn e_bracket(bits: u32) -> (Rational, Rational) {
    let target = pow2(-(bits as i64) - 2);
    let mut sum = Rational::zero();
    let mut term = Rational::one();
    let mut k: i64 = 0;
    loop {
        sum += &term;
        k += 1;
        term = term / int(k);
        // tail after stopping here is below 2 * term
        let tail = &term * int(2);
        if tail < target {
            return (sum.clone(), sum + tail);
        }
    }
}

/// Bracket of `lg e`.
pub fn lg_e_bracket(bits: u32) -> (Rational, Rational) {
    let (e_lo, e_hi) = e_bracket(bits + 4);
    let (lo, _) = lg_bracket(&e_lo, bits + 2);
    let (_, hi) = lg_bracket(&e_hi, bits + 2);
    (lo, hi)
}

/// Closed rational interval used for certified evaluation on boxes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RatInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        RatInterval { lo, hi }
    }

    pub fn point(v: Rational) -> Self {
        RatInterval { lo: v.clone(), hi: v }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn contains(&self, v: &Rational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Smallest and largest absolute value over the interval.
    pub fn abs_range(&self) -> (Rational, Rational) {
        let a = self.lo.abs();
        let b = self.hi.abs();
        let max = if a > b { a.clone() } else { b.clone() };
        let min = if self.contains_zero() {
            Rational::zero()
        } else if a < b {
            a
        } else {
            b
        };
        (min, max)
    }

    pub fn pow(&self, e: u32) -> RatInterval {
        let mut acc = RatInterval::point(Rational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        if e % 2 == 0 && self.contains_zero() && e > 0 {
            // even powers are nonnegative; tighten the naive product bound
            let (_, m) = self.abs_range();
            let mut top = Rational::one();
            for _ in 0..e {
                top *= &m;
            }
            acc = RatInterval::new(Rational::zero(), top);
        }
        acc
    }

    /// Set of `1/x` for an interval not containing zero.
    pub fn recip(&self) -> Option<RatInterval> {
        if self.contains_zero() {
            None
        } else {
            Some(RatInterval::new(self.hi.recip(), self.lo.recip()))
        }
    }

    pub fn sign(&self) -> Option<Sign> {
        if self.lo.is_positive() {
            Some(Sign::Plus)
        } else if self.hi.is_negative() {
            Some(Sign::Minus)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Sign::NoSign)
        } else {
            None
        }
    }

    pub fn hull(&self, other: &RatInterval) -> RatInterval {
        RatInterval::new(
            self.lo.clone().min(other.lo.clone()),
            self.hi.clone().max(other.hi.clone()),
        )
    }
}

impl fmt::Display for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", fmt_rational(&self.lo), fmt_rational(&self.hi))
    }
}

impl Add for &RatInterval {
    type Output = RatInterval;
    fn add(self, o: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }
}

impl Sub for &RatInterval {
    type Output = RatInterval;
    fn sub(self, o: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }
}

impl Neg for &RatInterval {
    type Output = RatInterval;
    fn neg(self) -> RatInterval {
        RatInterval::new(-&self.hi, -&self.lo)
    }
}

impl Mul for &RatInterval {
    type Output = RatInterval;
    fn mul(self, o: &RatInterval) -> RatInterval {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        RatInterval::new(lo, hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lg_of_powers_of_two_is_exact() {
        assert_eq!(lg_bracket(&int(8), 20), (int(3), int(3)));
        assert_eq!(lg_bracket(&ratio(1, 4), 20), (int(-2), int(-2)));
    }

    #[test]
    fn lg_three_bracket_contains_value() {
        let (lo, hi) = lg_bracket(&int(3), 40);
        // 2^lo <= 3 <= 2^hi checked through lo < 1.58496250072 < hi
        assert!(lo < ratio(158_496_250_073, 100_000_000_000));
        assert!(hi > ratio(158_496_250_071, 100_000_000_000));
        assert!(&hi - &lo <= pow2(-40));
    }

    #[test]
    fn lg_brackets_tighten_with_precision() {
        for v in [3i64, 5, 6, 7, 12, 192, 1_000_003] {
            let (l1, h1) = lg_bracket(&int(v), 16);
            let (l2, h2) = lg_bracket(&int(v), 64);
            assert!(l1 <= l2 && h2 <= h1, "v = {v}");
        }
    }

    #[test]
    fn lg_of_small_fraction() {
        let (lo, hi) = lg_bracket(&ratio(3, 1024), 30);
        assert!(lo <= int(-8) && hi >= int(-9));
        assert!(lo > int(-9) && hi < int(-8));
    }

    #[test]
    fn e_bracket_is_tight() {
        let (lo, hi) = e_bracket(60);
        assert!(lo < ratio(2_718_281_828_459_046, 1_000_000_000_000_000));
        assert!(hi > ratio(2_718_281_828_459_045, 1_000_000_000_000_000));
        assert!(&hi - &lo < pow2(-60));
    }

    #[test]
    fn lg_e_contains_reciprocal_ln2() {
        let (lo, hi) = lg_e_bracket(50);
        let v = Rational::new(BigInt::from(1_442_695_040_888_963_407i64), BigInt::from(10i64.pow(18)));
        assert!(lo <= &v + pow2(-56) && &v - pow2(-56) <= hi);
        assert!(&hi - &lo <= pow2(-48));
    }

    #[test]
    fn parse_and_format_rationals() {
        assert_eq!(parse_rational("-3/6"), Some(ratio(-1, 2)));
        assert_eq!(parse_rational("17"), Some(int(17)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(fmt_rational(&ratio(4, -6)), "-2/3");
    }

    #[test]
    fn interval_product_and_abs() {
        let a = RatInterval::new(int(-2), int(3));
        let b = RatInterval::new(int(1), int(4));
        let p = &a * &b;
        assert_eq!(p, RatInterval::new(int(-8), int(12)));
        assert_eq!(a.abs_range(), (int(0), int(3)));
        assert_eq!(a.pow(2), RatInterval::new(int(0), int(9)));
    }
}
