//! Empirical check of the separation, annulus and product bounds against
//! oracle roots.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::oracle::{oracle_roots_2d, OracleRoot, OracleRoots};
use super::sysfile::SystemFile;
use crate::bounds::{
    dmm_n_bounds, dmm_n_dense_bounds, dmm_n_excess_bounds, dmm_n_mixedvol_bounds, BoundReport, Quantity,
};
use crate::error::{Error, Result};
use crate::newton::system_profile;
use crate::numeric::{fmt_rational, lg_bracket, pow2, to_f64, RatInterval, Rational};

/// Finest refinement width tried before a comparison is declared
/// undecided.
const MAX_PRECISION_BITS: i64 = 4096;
const LG_BITS: u32 = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Undecided,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationRow {
    pub bound: String,
    pub direction: String,
    pub quantity: String,
    pub bound_exponent: i64,
    /// Bracket of `lg` of the measured quantity, as exact rationals.
    pub measured_lg_lo: String,
    pub measured_lg_hi: String,
    pub verdict: Verdict,
    /// Measured `lg` minus bound `lg`, signed so that positive is slack.
    pub slack_bits: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub system: String,
    /// Real roots found by the oracle, including those on coordinate axes.
    pub real_roots: usize,
    /// Real roots with every coordinate nonzero, the ones the bounds speak
    /// about.
    pub torus_roots: usize,
    pub rows: Vec<ValidationRow>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.verdict == Verdict::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ValidationRow> {
        self.rows.iter().filter(|r| r.verdict != Verdict::Pass)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "system {}: {} real roots, {} in the torus", self.system, self.real_roots, self.torus_roots)?;
        for r in &self.rows {
            writeln!(
                f,
                "  {:<34} {:>5} 2^{:<8} measured lg in [{}, {}]  slack {:+.2} bits  {:?}",
                r.bound, r.direction, r.bound_exponent, r.measured_lg_lo, r.measured_lg_hi, r.slack_bits, r.verdict
            )?;
        }
        Ok(())
    }
}

fn lg_interval(v: &RatInterval) -> Option<(Rational, Rational)> {
    if !v.lo.is_positive() {
        return None;
    }
    Some((lg_bracket(&v.lo, LG_BITS).0, lg_bracket(&v.hi, LG_BITS).1))
}

fn dist_sq(a: &OracleRoot, b: &OracleRoot) -> RatInterval {
    let dx = &a.x_interval() - &b.x_interval();
    let dy = &a.y_interval() - &b.y_interval();
    &dx.pow(2) + &dy.pow(2)
}

/// Brackets of `lg` of the measured quantities; `None` when fewer than two
/// roots make the quantity undefined.
struct Measured {
    sep: Option<(Rational, Rational)>,
    coord_min: Option<(Rational, Rational)>,
    coord_max: Option<(Rational, Rational)>,
    product: Option<(Rational, Rational)>,
}

fn measure(roots: &[OracleRoot]) -> Option<Measured> {
    let two = Rational::from_integer(2.into());
    let mut sep: Option<(Rational, Rational)> = None;
    let mut prod = (Rational::zero(), Rational::zero());
    let mut pairs = 0;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let (lo, hi) = lg_interval(&dist_sq(&roots[i], &roots[j]))?;
            let (lo, hi) = (lo / &two, hi / &two);
            prod = (&prod.0 + &lo, &prod.1 + &hi);
            pairs += 1;
            sep = Some(match sep {
                None => (lo, hi),
                Some((a, b)) => (a.min(lo), b.min(hi)),
            });
        }
    }
    let mut cmin: Option<(Rational, Rational)> = None;
    let mut cmax: Option<(Rational, Rational)> = None;
    for r in roots {
        for iv in [r.x_interval(), r.y_interval()] {
            let (lo, hi) = iv.abs_range();
            let (lo, hi) = lg_interval(&RatInterval::new(lo, hi))?;
            cmin = Some(match cmin {
                None => (lo.clone(), hi.clone()),
                Some((a, b)) => (a.min(lo.clone()), b.min(hi.clone())),
            });
            cmax = Some(match cmax {
                None => (lo, hi),
                Some((a, b)) => (a.max(lo), b.max(hi)),
            });
        }
    }
    Some(Measured {
        sep,
        coord_min: cmin,
        coord_max: cmax,
        product: if pairs > 0 { Some(prod) } else { None },
    })
}

fn pick<'a>(m: &'a Measured, r: &BoundReport) -> Option<&'a (Rational, Rational)> {
    use crate::bounds::Direction::*;
    match (r.quantity, r.direction) {
        (Quantity::Separation, _) => m.sep.as_ref(),
        (Quantity::Coordinate, Lower) => m.coord_min.as_ref(),
        (Quantity::Coordinate, Upper) => m.coord_max.as_ref(),
        (Quantity::Product, _) => m.product.as_ref(),
        _ => None,
    }
}

/// Compares oracle roots with every bound that applies to a bivariate
/// system: the system forms, the excess and mixed volume variants, and
/// the dense forms with `(d, tau)` from the file.
pub fn validate_bounds(sys: &SystemFile) -> Result<ValidationReport> {
    if sys.nvars() != 2 || sys.polys.len() != 2 {
        return Err(Error::precondition("validation needs a square bivariate system"));
    }
    let (f, g) = (&sys.polys[0], &sys.polys[1]);
    let oracle = oracle_roots_2d(f, g)?;
    validate_with_roots(sys, oracle)
}

pub fn validate_with_roots(sys: &SystemFile, mut oracle: OracleRoots) -> Result<ValidationReport> {
    let real_roots = oracle.roots.len();
    oracle.roots.retain(|r| r.zero_coords() == [false, false]);
    let torus_roots = oracle.roots.len();
    let profile = system_profile(&sys.polys)?;
    let pairs = (torus_roots * torus_roots.saturating_sub(1) / 2).max(1) as u64;
    let (d, tau) = sys.degree_bitsize();
    let mut bounds = dmm_n_bounds(&profile, pairs)?;
    bounds.extend(dmm_n_excess_bounds(&profile, pairs)?);
    bounds.extend(dmm_n_mixedvol_bounds(&profile, pairs)?);
    bounds.extend(dmm_n_dense_bounds(2, d.max(1), tau.max(1))?);

    let mut rows: Vec<Option<ValidationRow>> = vec![None; bounds.len()];
    let mut bits = 16;
    loop {
        oracle.refine(&pow2(-bits));
        let measured = measure(&oracle.roots);
        let mut open = false;
        for (i, b) in bounds.iter().enumerate() {
            if rows[i].as_ref().map_or(false, |r| r.verdict != Verdict::Undecided) {
                continue;
            }
            let m = match &measured {
                Some(m) => pick(m, b),
                None => {
                    open = true;
                    continue;
                }
            };
            let Some((lo, hi)) = m else {
                continue;
            };
            let verdict = match b.check(lo, hi) {
                Some(true) => Verdict::Pass,
                Some(false) => Verdict::Fail,
                None => {
                    open = true;
                    Verdict::Undecided
                }
            };
            let mid = to_f64(&((lo + hi) / Rational::from_integer(2.into())));
            let bound = to_f64(&b.log2_value);
            let slack = match b.direction {
                crate::bounds::Direction::Lower => mid - bound,
                crate::bounds::Direction::Upper => bound - mid,
            };
            rows[i] = Some(ValidationRow {
                bound: b.name.as_str().to_string(),
                direction: match b.direction {
                    crate::bounds::Direction::Lower => "lower".into(),
                    crate::bounds::Direction::Upper => "upper".into(),
                },
                quantity: format!("{:?}", b.quantity).to_lowercase(),
                bound_exponent: b.exponent,
                measured_lg_lo: fmt_rational(lo),
                measured_lg_hi: fmt_rational(hi),
                verdict,
                slack_bits: slack,
            });
        }
        if !open || bits >= MAX_PRECISION_BITS {
            break;
        }
        bits *= 2;
    }
    let rows = rows.into_iter().flatten().collect();
    Ok(ValidationReport {
        system: sys.name.clone().unwrap_or_else(|| "unnamed".into()),
        real_roots,
        torus_roots,
        rows,
    })
}
