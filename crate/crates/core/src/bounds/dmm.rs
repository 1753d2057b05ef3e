//! Aggregate separation bounds for one polynomial and for square systems.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::expr::{c, cb, half, lg, lg_big, q, Direction, Expr};
use super::report::{BoundName as N, BoundReport, Quantity};
use crate::error::{Error, Result};
use crate::newton::SystemProfile;
use crate::numeric::ratio;
use crate::poly::SparsePoly;
use crate::univar::squarefree_part;

use Direction::{Lower, Upper};

fn report(name: N, dir: Direction, qty: Quantity, e: Expr, cite: &str) -> BoundReport {
    BoundReport::from_expr(name, dir, qty, &e, cite)
}

pub(crate) fn pw(base: i64, k: u32) -> Expr {
    cb(&BigInt::from(base).pow(k))
}

pub(crate) fn check_ndt(n: i64, d: i64, tau: i64) -> Result<()> {
    if n < 1 || d < 1 || tau < 1 {
        return Err(Error::precondition(format!("need n, d, tau >= 1, got ({n}, {d}, {tau})")));
    }
    Ok(())
}

/// Product bounds for `ell` distinct-root pairs of a univariate integer
/// polynomial: upper, lower and, for `ell <= d`, the coarse bitsize forms.
pub fn dmm1_product_bounds(f: &SparsePoly, ell: u64) -> Result<Vec<BoundReport>> {
    if f.nvars() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, found: f.nvars() });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = f.clear_negative_exponents().0;
    let m = f.measures();
    let d = m.total_degree.unwrap_or(0);
    let red = squarefree_part(&f.to_upoly_int()?)?;
    if red.degree().unwrap_or(0) < 2 {
        return Err(Error::precondition("fewer than two distinct roots"));
    }
    let pairs = d * (d - 1) / 2;
    let ell_i = ell as i64;
    if ell == 0 || ell_i > pairs {
        return Err(Error::precondition(format!("ell = {ell} outside 1..={pairs}")));
    }
    let tau = m.bitsize as i64;
    let lg_norm = half(lg_big(&m.two_norm_sq));
    let mut out = vec![
        report(
            N::Dmm1Upper,
            Upper,
            Quantity::Product,
            c(ell_i) * (c(1) + lg_norm.clone()),
            "univariate DMM bound, upper product form",
        ),
        report(
            N::Dmm1Lower,
            Lower,
            Quantity::Product,
            c(ell_i - pairs) - c(d - 1 + ell_i) * lg_norm,
            "univariate DMM bound, lower product form",
        ),
    ];
    if ell_i <= d {
        out.push(report(
            N::Dmm1CoarseUpper,
            Upper,
            Quantity::Product,
            half(c(ell_i) * lg(d)) + c(2 * ell_i * tau),
            "univariate DMM bound, integer bitsize form",
        ));
        out.push(report(
            N::Dmm1CoarseLower,
            Lower,
            Quantity::Product,
            -(c(d) * lg(d)) - c(d * d) - c(3 * tau * (ell_i + d)),
            "univariate DMM bound, integer bitsize form",
        ));
        out.push(report(
            N::Dmm1CoarseLowerUniform,
            Lower,
            Quantity::Product,
            -(c(d) * lg(d)) - c(d * d) - c(6 * d * tau),
            "univariate DMM bound, integer bitsize form independent of ell",
        ));
    }
    Ok(out)
}

/// `lg v`, with `lg` of values at most one taken as zero (`v^k := 1`).
fn lg_ge1(v: &BigInt) -> Expr {
    if v > &BigInt::one() {
        lg_big(v)
    } else {
        c(0)
    }
}

/// `lg A = sum_{M_i > 0} (lg M_i / 2 + M_i)`.
pub fn lg_a(p: &SystemProfile) -> Expr {
    let mut acc = c(0);
    for m in &p.mixed_volumes[1..] {
        if m.is_positive() {
            acc = acc + half(lg_big(m)) + cb(m);
        }
    }
    acc
}

struct ProfileNames {
    upper: N,
    lower: N,
    coord_lo: N,
    coord_hi: N,
    sep: N,
    cite: &'static str,
}

fn profile_forms(p: &SystemProfile, ell: u64, lg_extra: Expr, names: ProfileNames) -> Result<Vec<BoundReport>> {
    if ell == 0 {
        return Err(Error::precondition("ell must be positive"));
    }
    let n = p.n as i64;
    let ell = BigInt::from(ell);
    let dd = p.root_count_bound.clone();
    let lg_rho = lg_ge1(&p.rho);
    let lg_cc = lg_ge1(&p.c) + lg_extra;
    let lg_h = lg_ge1(&p.h);
    let lg_b = lg_ge1(&p.b);
    let one = BigInt::one();
    let cite = |s: &str| format!("{}, {s}", names.cite);

    let upper = cb(&ell) * (cb(&(&dd + &one)) + lg_rho.clone() + lg_cc.clone());
    let b_exp = BigInt::from(1 - n) * (&dd * &dd + &dd * (&ell - &one) + &ell);
    let lower = -cb(&ell) - q(crate::numeric::big(&((&dd - &one) * (&dd + 2u32))) * ratio(1, 2))
        + cb(&(&one - &dd - &ell)) * (lg_h + lg_cc.clone())
        + cb(&b_exp) * lg_b;
    let coord = cb(&dd) + lg_rho.clone() + lg_cc.clone();
    let sep = -q(crate::numeric::big(&((&dd * 3u32 + 2u32) * (&dd - &one))) * ratio(1, 2))
        - cb(&dd) * (half(lg_big(&(&dd + &one))) + lg_rho + lg_cc);
    Ok(vec![
        report(names.upper, Upper, Quantity::Product, upper, &cite("upper product form")),
        report(names.lower, Lower, Quantity::Product, lower, &cite("lower product form")),
        report(names.coord_lo, Lower, Quantity::Coordinate, -coord.clone(), &cite("coordinate annulus")),
        report(names.coord_hi, Upper, Quantity::Coordinate, coord, &cite("coordinate annulus")),
        report(names.sep, Lower, Quantity::Separation, sep, &cite("separation")),
    ])
}

/// Product, annulus and separation bounds of a zero-dimensional system.
pub fn dmm_n_bounds(p: &SystemProfile, ell: u64) -> Result<Vec<BoundReport>> {
    profile_forms(
        p,
        ell,
        c(0),
        ProfileNames {
            upper: N::DmmProductUpper,
            lower: N::DmmProductLower,
            coord_lo: N::DmmCoordinateLower,
            coord_hi: N::DmmCoordinateUpper,
            sep: N::DmmSeparation,
            cite: "aggregate DMM bound, system form",
        },
    )
}

/// The system bounds with `C` replaced by `A C`; valid with excess
/// components.
pub fn dmm_n_excess_bounds(p: &SystemProfile, ell: u64) -> Result<Vec<BoundReport>> {
    profile_forms(
        p,
        ell,
        lg_a(p),
        ProfileNames {
            upper: N::ExcessProductUpper,
            lower: N::ExcessProductLower,
            coord_lo: N::ExcessCoordinateLower,
            coord_hi: N::ExcessCoordinateUpper,
            sep: N::ExcessSeparation,
            cite: "aggregate DMM bound with excess components",
        },
    )
}

/// `S = sum_i M_i (tau + lg #Q_i)` with `tau` the largest bitsize.
pub fn mixed_volume_sum(p: &SystemProfile) -> Expr {
    let tau = p.tau() as i64;
    let mut s = c(0);
    for (m, lp) in p.mixed_volumes[1..].iter().zip(&p.lattice_points) {
        if m.is_positive() {
            s = s + cb(m) * (c(tau) + lg_big(lp));
        }
    }
    s
}

/// Mixed-volume forms of the system bounds.
pub fn dmm_n_mixedvol_bounds(p: &SystemProfile, ell: u64) -> Result<Vec<BoundReport>> {
    if ell == 0 {
        return Err(Error::precondition("ell must be positive"));
    }
    let n = p.n as i64;
    let m0 = p.mixed_volumes[0].clone();
    let s = mixed_volume_sum(p);
    let lg_m0 = if m0.is_zero() { c(0) } else { lg_big(&m0) };
    let cite = if p.bezout_mode {
        "aggregate DMM bound, mixed volume form (degree products)"
    } else {
        "aggregate DMM bound, mixed volume form"
    };
    let upper = cb(&m0) * (c(1) + cb(&m0) + s.clone());
    let lower = -(c(2) * cb(&m0) * s.clone())
        - c(2) * cb(&(&m0 * &m0)) * (c(1) + lg(n + 1) + c(n) * lg(n) + c(2 * n) * lg_m0.clone());
    let coord = cb(&m0) + s.clone();
    let sep = -(cb(&m0) * (q(ratio(3, 2)) * cb(&m0) + lg_m0 + s));
    Ok(vec![
        report(N::MixedVolProductUpper, Upper, Quantity::Product, upper, cite),
        report(N::MixedVolProductLower, Lower, Quantity::Product, lower, cite),
        report(N::MixedVolCoordinateLower, Lower, Quantity::Coordinate, -coord.clone(), cite),
        report(N::MixedVolCoordinateUpper, Upper, Quantity::Coordinate, coord, cite),
        report(N::MixedVolSeparation, Lower, Quantity::Separation, sep, cite),
    ])
}

/// Dense forms in terms of `n`, the degree bound `d` and the bitsize `tau`.
pub fn dmm_n_dense_bounds(n: i64, d: i64, tau: i64) -> Result<Vec<BoundReport>> {
    check_ndt(n, d, tau)?;
    let nu = n as u32;
    let lgd = lg(d);
    let cite = "aggregate DMM bound, dense form";
    let product = -((c(3) + c(4) * lg(n) + c(4 * n) * lgd.clone()) * pw(d, 2 * nu))
        - c(2 * n) * (c(1 + tau) + c(n) * lgd.clone()) * pw(d, 2 * nu - 1);
    let coord = pw(d, nu) + c(n) * (c(tau + 1) + c(n) * lgd.clone()) * pw(d, nu - 1);
    let sep = -(c(2) * pw(d, 2 * nu)) - c(n) * (c(2 * n) * lgd + c(tau)) * pw(d, 2 * nu - 1);
    Ok(vec![
        report(N::DenseProductLower, Lower, Quantity::Product, product, cite),
        report(N::DenseCoordinateLower, Lower, Quantity::Coordinate, -coord.clone(), cite),
        report(N::DenseCoordinateUpper, Upper, Quantity::Coordinate, coord, cite),
        report(N::DenseSeparation, Lower, Quantity::Separation, sep, cite),
    ])
}

/// Dense forms valid with excess components.
///
/// The coordinate lower bound is taken with the correction term negated,
/// as the symmetric counterpart of the upper bound.
pub fn dmm_n_excess_dense_bounds(n: i64, d: i64, tau: i64) -> Result<Vec<BoundReport>> {
    check_ndt(n, d, tau)?;
    let nu = n as u32;
    let lgd = lg(d);
    let corr = c(n * n - n) * half(lgd.clone());
    let cite = "aggregate DMM bound with excess components, dense form";
    let product = -(corr.clone() * pw(d, nu))
        - (c(3) + c(4) * lg(n) + c(4 * n) * lgd.clone()) * pw(d, 2 * nu)
        - c(2 * n) * (c(2 + tau) + c(n) * lgd.clone()) * pw(d, 2 * nu - 1);
    let coord = corr.clone() + pw(d, nu) + c(n) * (c(tau + 2) + c(n) * lgd.clone()) * pw(d, nu - 1);
    let sep = -(corr * pw(d, nu))
        - c(2) * pw(d, 2 * nu)
        - c(n) * (c(2 * n) * lgd + c(tau + 1)) * pw(d, 2 * nu - 1);
    Ok(vec![
        report(N::ExcessDenseProductLower, Lower, Quantity::Product, product, cite),
        report(N::ExcessDenseCoordinateLower, Lower, Quantity::Coordinate, -coord.clone(), cite),
        report(N::ExcessDenseCoordinateUpper, Upper, Quantity::Coordinate, coord, cite),
        report(N::ExcessDenseSeparation, Lower, Quantity::Separation, sep, cite),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::system_profile;
    use crate::poly::parse_poly;

    fn find(v: &[BoundReport], n: N) -> &BoundReport {
        v.iter().find(|r| r.name == n).unwrap()
    }

    #[test]
    fn dmm1_coarse_example() {
        let f = parse_poly("1:2;-1:0", 1).unwrap();
        let r = dmm1_product_bounds(&f, 1).unwrap();
        assert_eq!(find(&r, N::Dmm1CoarseLowerUniform).exponent, -30);
        // |1 - (-1)| = 2 is inside every bound
        for b in &r {
            assert_eq!(b.check(&crate::numeric::int(1), &crate::numeric::int(1)), Some(true), "{b}");
        }
    }

    #[test]
    fn dmm1_rejects_degenerate() {
        let f = parse_poly("1:2;-2:1;1:0", 1).unwrap();
        assert!(dmm1_product_bounds(&f, 1).is_err());
        let g = parse_poly("1:2;-1:0", 1).unwrap();
        assert!(dmm1_product_bounds(&g, 0).is_err());
        assert!(dmm1_product_bounds(&g, 2).is_err());
    }

    #[test]
    fn dense_values() {
        let r = dmm_n_dense_bounds(2, 2, 5).unwrap();
        assert_eq!(find(&r, N::DenseSeparation).exponent, -176);
        assert_eq!(find(&r, N::DenseCoordinateLower).exponent, -36);
        let r = dmm_n_dense_bounds(2, 2, 10).unwrap();
        assert_eq!(find(&r, N::DenseCoordinateLower).exponent, -56);
        let r = dmm_n_excess_dense_bounds(2, 2, 5).unwrap();
        assert_eq!(find(&r, N::ExcessDenseSeparation).exponent, -196);
    }

    #[test]
    fn linear_system_annulus() {
        let p = system_profile(&[
            parse_poly("1:1,0;1:0,1;-3:0,0", 2).unwrap(),
            parse_poly("1:1,0;-1:0,1;-1:0,0", 2).unwrap(),
        ])
        .unwrap();
        let r = dmm_n_bounds(&p, 1).unwrap();
        let lo = find(&r, N::DmmCoordinateLower);
        let hi = find(&r, N::DmmCoordinateUpper);
        assert!(lo.exponent <= 0 && hi.exponent >= 1);
        let ex = dmm_n_excess_bounds(&p, 1).unwrap();
        assert!(find(&ex, N::ExcessSeparation).log2_value <= find(&r, N::DmmSeparation).log2_value);
    }

    #[test]
    fn eigen_lg_a() {
        let p = system_profile(&[
            parse_poly("2:1,0,0;-1:1,0,1;1:0,1,0", 3).unwrap(),
            parse_poly("1:1,0,0;3:0,1,0;-1:0,1,1", 3).unwrap(),
            parse_poly("1:2,0,0;1:0,2,0;-1:0,0,0", 3).unwrap(),
        ])
        .unwrap();
        // M = (4, 4, 2): lg A = lg sqrt(32) + 10
        let e = lg_a(&p).eval(64);
        let expect = crate::numeric::ratio(25, 2);
        assert!(e.contains(&expect));
    }
}
