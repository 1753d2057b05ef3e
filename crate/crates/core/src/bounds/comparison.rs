//! Earlier coordinate bounds, kept for comparison.

use num_bigint::BigInt;
use num_traits::Signed;

use super::dmm::{check_ndt, pw};
use super::expr::{c, lg, lg_big, lg_e, Direction, Expr};
use super::report::{BoundName, BoundReport, Quantity};
use crate::error::{Error, Result};

/// Nonzero coordinates exceed `(3 d c)^{-n d^n}`.
pub fn gap_theorem_bound(n: i64, d: i64, coeff: &BigInt) -> Result<BoundReport> {
    if n < 1 || d < 1 || !coeff.is_positive() {
        return Err(Error::precondition("gap bound needs n, d, c >= 1"));
    }
    let e = -(c(n) * pw(d, n as u32) * lg_big(&(BigInt::from(3 * d) * coeff)));
    Ok(BoundReport::from_expr(
        BoundName::GapTheorem,
        Direction::Lower,
        Quantity::Coordinate,
        &e,
        "gap theorem for homogeneous systems",
    ))
}

/// Exponent of the projection-based coordinate bound with `lg e` given as
/// an expression, so the simplified form is the same builder with
/// `lg e := 1`.
fn projection_exponent(n: i64, d: i64, tau: i64, m: i64, b: i64, lge: Expr) -> Expr {
    let nu = n as u32;
    let k = n - b;
    // b^{n-b-1} is 1 for b = 0
    let lg_b_term = if b > 0 { c(k - 1) * lg(b) } else { c(0) };
    -(c(n * (n + 1)) * pw(d, nu) * (c(2) * lg(n + 1) + c(n + 2) * lge))
        - c(k) * pw(d, (k - 1) as u32) * (lg_b_term + lg(m) + c(tau))
}

/// Coordinate bound for systems with a zero-dimensional projection; `m`
/// polynomials, prime component of dimension `b < n`.
pub fn by_projection_bound(n: i64, d: i64, tau: i64, m: i64, b: i64) -> Result<BoundReport> {
    check_ndt(n, d, tau)?;
    if m < 1 || b < 0 || b >= n {
        return Err(Error::precondition(format!("need m >= 1 and 0 <= b < n, got m = {m}, b = {b}")));
    }
    Ok(BoundReport::from_expr(
        BoundName::ProjectionCoordinate,
        Direction::Lower,
        Quantity::Coordinate,
        &projection_exponent(n, d, tau, m, b, lg_e()),
        "projection coordinate bound",
    ))
}

/// The projection bound at `b = 0`, `m = n` with `lg e` replaced by 1.
pub fn by_projection_simplified(n: i64, d: i64, tau: i64) -> Result<BoundReport> {
    check_ndt(n, d, tau)?;
    Ok(BoundReport::from_expr(
        BoundName::ProjectionCoordinateSimplified,
        Direction::Lower,
        Quantity::Coordinate,
        &projection_exponent(n, d, tau, n, 0, c(1)),
        "projection coordinate bound, simplified",
    ))
}
