//! Line format: `coeff:e1,...,en` terms joined by `;`, `0` for zero.

use num_bigint::BigInt;

use super::SparsePoly;
use crate::error::{Error, Result};

/// Parses one polynomial in `nvars` variables.
pub fn parse_poly(s: &str, nvars: usize) -> Result<SparsePoly> {
    parse_poly_at(s, nvars, 1)
}

pub(crate) fn parse_poly_at(s: &str, nvars: usize, line: usize) -> Result<SparsePoly> {
    let err = |msg: String| Error::Parse { line, msg };
    let s = s.trim();
    if s == "0" {
        return Ok(SparsePoly::zero(nvars));
    }
    if s.is_empty() {
        return Err(err("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    for raw in s.split(';') {
        let raw = raw.trim();
        let (c, e) = raw
            .split_once(':')
            .ok_or_else(|| err(format!("term `{raw}` lacks `coeff:exponents`")))?;
        let c: BigInt = c
            .trim()
            .trim_start_matches('+')
            .parse()
            .map_err(|_| err(format!("bad coefficient `{}`", c.trim())))?;
        let exps = e
            .split(',')
            .map(|x| x.trim().parse::<i32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| err(format!("bad exponent list `{}`", e.trim())))?;
        if exps.len() != nvars {
            return Err(err(format!(
                "term `{raw}` has {} exponents, expected {nvars}",
                exps.len()
            )));
        }
        terms.push((c, exps));
    }
    SparsePoly::from_terms(nvars, terms)
}

/// Canonical text form, terms in descending graded-lex order.
pub fn format_poly(p: &SparsePoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.terms()
        .rev()
        .map(|(m, c)| {
            let e: Vec<String> = m.0.iter().map(|x| x.to_string()).collect();
            format!("{}:{}", c, e.join(","))
        })
        .collect::<Vec<_>>()
        .join(";")
}
