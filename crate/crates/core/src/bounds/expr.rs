//! Symbolic exponents evaluated by outward interval arithmetic.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::numeric::{ceil, floor, int, lg_bracket, lg_e_bracket, pow2, RatInterval, Rational};

/// Initial and maximal bracket precision in bits.
const START_BITS: u32 = 32;
const MAX_BITS: u32 = 256;
/// Dyadic resolution of reported `log2_value`s.
pub const VALUE_BITS: i64 = 32;

/// Real-valued expression over rationals, `lg` of positive rationals and
/// the constant `lg e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Const(Rational),
    Lg(Rational),
    LgE,
    Sum(Vec<Expr>),
    Prod(Vec<Expr>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Lower,
    Upper,
}

pub fn c(v: i64) -> Expr {
    Expr::Const(int(v))
}

pub fn q(v: Rational) -> Expr {
    Expr::Const(v)
}

pub fn cb(v: &BigInt) -> Expr {
    Expr::Const(Rational::from_integer(v.clone()))
}

/// `lg v`; `lg 1 = 0`.
pub fn lg(v: i64) -> Expr {
    lg_q(int(v))
}

pub fn lg_big(v: &BigInt) -> Expr {
    lg_q(Rational::from_integer(v.clone()))
}

pub fn lg_q(v: Rational) -> Expr {
    assert!(v.is_positive(), "lg of a non-positive value");
    if v.is_one() {
        Expr::Const(Rational::zero())
    } else {
        Expr::Lg(v)
    }
}

pub fn lg_e() -> Expr {
    Expr::LgE
}

/// `v / 2`.
pub fn half(v: Expr) -> Expr {
    q(Rational::new(1.into(), 2.into())) * v
}

impl Expr {
    pub fn eval(&self, bits: u32) -> RatInterval {
        match self {
            Expr::Const(v) => RatInterval::point(v.clone()),
            Expr::Lg(v) => {
                let (lo, hi) = lg_bracket(v, bits);
                RatInterval::new(lo, hi)
            }
            Expr::LgE => {
                let (lo, hi) = lg_e_bracket(bits);
                RatInterval::new(lo, hi)
            }
            Expr::Sum(v) => v
                .iter()
                .fold(RatInterval::point(Rational::zero()), |acc, e| &acc + &e.eval(bits)),
            Expr::Prod(v) => v
                .iter()
                .fold(RatInterval::point(Rational::one()), |acc, e| &acc * &e.eval(bits)),
        }
    }

    /// Exact value when the expression has no transcendental part.
    pub fn exact(&self) -> Option<Rational> {
        let iv = self.eval(START_BITS);
        (iv.lo == iv.hi).then_some(iv.lo)
    }

    /// Outward-rounded integer exponent and dyadic value.
    ///
    /// Lower bounds give `floor` of the lower bracket end, upper bounds the
    /// `ceil` of the upper end; the precision doubles until the integer is
    /// the same at both ends.
    pub fn resolve(&self, dir: Direction) -> (Rational, i64) {
        let mut bits = START_BITS;
        loop {
            let iv = self.eval(bits);
            let stable = match dir {
                Direction::Lower => floor(&iv.lo) == floor(&iv.hi),
                Direction::Upper => ceil(&iv.lo) == ceil(&iv.hi),
            };
            if stable || bits >= MAX_BITS {
                let scale = pow2(VALUE_BITS);
                let (value, exp) = match dir {
                    Direction::Lower => (
                        Rational::new(floor(&(&iv.lo * &scale)), floor(&scale)),
                        floor(&iv.lo),
                    ),
                    Direction::Upper => (
                        Rational::new(ceil(&(&iv.hi * &scale)), floor(&scale)),
                        ceil(&iv.hi),
                    ),
                };
                let exp = i64::try_from(exp).expect("bound exponent fits in i64");
                return (value, exp);
            }
            bits *= 2;
        }
    }

    /// Bracket at the given precision; used to check outward rounding.
    pub fn bracket(&self, bits: u32) -> RatInterval {
        self.eval(bits)
    }
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, o: Expr) -> Expr {
        match (self, o) {
            (Expr::Sum(mut a), Expr::Sum(b)) => {
                a.extend(b);
                Expr::Sum(a)
            }
            (Expr::Sum(mut a), b) => {
                a.push(b);
                Expr::Sum(a)
            }
            (a, b) => Expr::Sum(vec![a, b]),
        }
    }
}

impl Mul for Expr {
    type Output = Expr;
    fn mul(self, o: Expr) -> Expr {
        match (self, o) {
            (Expr::Prod(mut a), Expr::Prod(b)) => {
                a.extend(b);
                Expr::Prod(a)
            }
            (Expr::Prod(mut a), b) => {
                a.push(b);
                Expr::Prod(a)
            }
            (a, b) => Expr::Prod(vec![a, b]),
        }
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        match self {
            Expr::Const(v) => Expr::Const(-v),
            e => c(-1) * e,
        }
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, o: Expr) -> Expr {
        self + (-o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::ratio;

    #[test]
    fn exact_expressions() {
        let e = c(3) * lg(8) - c(2);
        assert_eq!(e.exact(), Some(int(7)));
        assert_eq!(e.resolve(Direction::Lower), (int(7), 7));
    }

    #[test]
    fn outward_rounding() {
        // -8 lg 192 = -60.68...
        let e = -(c(8) * lg(192));
        let (v, k) = e.resolve(Direction::Lower);
        assert_eq!(k, -61);
        assert!(v <= e.eval(128).lo);
        let (v, k) = (c(8) * lg(192)).resolve(Direction::Upper);
        assert_eq!(k, 61);
        assert!(v >= (c(8) * lg(192)).eval(128).hi);
        assert_eq!(half(lg(4)).exact(), Some(int(1)));
        let e = lg_e().eval(40);
        assert!(e.lo > ratio(14_426_950_408, 10_000_000_000));
        assert!(e.hi < ratio(14_426_950_409, 10_000_000_000));
    }
}
