//! `.sys` system files.
//!
//! ```text
//! # comment
//! name circle_line
//! vars x y
//! degree 2          (optional override of the degree bound)
//! bitsize 2         (optional override of the bitsize bound)
//! 1:2,0;1:0,2;-2:0,0
//! 1:1,0;-1:0,1
//! ```
//!
//! `vars` precedes every polynomial line; each remaining nonblank line is
//! one polynomial in the text format of [`crate::poly::parse_poly`].

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::poly::{format_poly, parse_poly_at, SparsePoly};

#[derive(Clone, Debug, PartialEq)]
pub struct SystemFile {
    pub name: Option<String>,
    pub vars: Vec<String>,
    pub degree: Option<i64>,
    pub bitsize: Option<i64>,
    pub polys: Vec<SparsePoly>,
}

impl SystemFile {
    pub fn new(vars: &[&str], polys: Vec<SparsePoly>) -> Self {
        SystemFile {
            name: None,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            degree: None,
            bitsize: None,
            polys,
        }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// `(d, tau)` from the overrides, else from the polynomials.
    pub fn degree_bitsize(&self) -> (i64, i64) {
        let d = self
            .degree
            .unwrap_or_else(|| self.polys.iter().filter_map(|p| p.total_degree()).max().unwrap_or(0));
        let tau = self
            .bitsize
            .unwrap_or_else(|| self.polys.iter().map(|p| p.measures().bitsize as i64).max().unwrap_or(0));
        (d, tau)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut out = SystemFile { name: None, vars: Vec::new(), degree: None, bitsize: None, polys: Vec::new() };
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line: line_no, msg };
            let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            let int = |s: &str| s.parse::<i64>().map_err(|_| err(format!("bad integer `{s}`")));
            match head {
                "name" => out.name = Some(rest.to_string()),
                "vars" => {
                    if !out.vars.is_empty() {
                        return Err(err("duplicate `vars` line".into()));
                    }
                    out.vars = rest.split_whitespace().map(str::to_string).collect();
                    if out.vars.is_empty() {
                        return Err(err("`vars` needs at least one name".into()));
                    }
                }
                "degree" => out.degree = Some(int(rest)?),
                "bitsize" => out.bitsize = Some(int(rest)?),
                _ => {
                    if out.vars.is_empty() {
                        return Err(err("polynomial before `vars`".into()));
                    }
                    out.polys.push(parse_poly_at(line, out.vars.len(), line_no)?);
                }
            }
        }
        if out.vars.is_empty() {
            return Err(Error::Parse { line: 0, msg: "missing `vars` line".into() });
        }
        if out.polys.is_empty() {
            return Err(Error::Parse { line: 0, msg: "no polynomials".into() });
        }
        Ok(out)
    }

    pub fn serialize(&self) -> String {
        let mut s = String::new();
        if let Some(n) = &self.name {
            let _ = writeln!(s, "name {n}");
        }
        let _ = writeln!(s, "vars {}", self.vars.join(" "));
        if let Some(d) = self.degree {
            let _ = writeln!(s, "degree {d}");
        }
        if let Some(t) = self.bitsize {
            let _ = writeln!(s, "bitsize {t}");
        }
        for p in &self.polys {
            let _ = writeln!(s, "{}", format_poly(p));
        }
        s
    }
}
