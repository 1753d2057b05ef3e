//! The box counting oracle and its deterministic boundary nudge.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;

use super::volume::VolumeFunctionData;
use crate::error::{Error, Result};
use crate::numeric::{fmt_rational, pow2, Rational};

/// Prime in the denominator of every nudge, so nudged coordinates stay away
/// from the dyadic split points of the subdivision.
pub const NUDGE_PRIME: u64 = 1_000_003;
pub const NUDGE_RETRIES: u32 = 40;

/// Closed axis-aligned box with `x_lo < x_hi`, `y_lo < y_hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsolationBox {
    pub x_lo: Rational,
    pub x_hi: Rational,
    pub y_lo: Rational,
    pub y_hi: Rational,
    pub certified_count: u64,
    /// Subdivision level, 0 for the initial box.
    pub depth: usize,
}

impl IsolationBox {
    pub fn new(x_lo: Rational, x_hi: Rational, y_lo: Rational, y_hi: Rational) -> Result<Self> {
        if x_lo >= x_hi || y_lo >= y_hi {
            return Err(Error::precondition("box needs lo < hi in both coordinates"));
        }
        Ok(IsolationBox { x_lo, x_hi, y_lo, y_hi, certified_count: 0, depth: 0 })
    }

    pub fn width(&self) -> Rational {
        &self.x_hi - &self.x_lo
    }

    pub fn height(&self) -> Rational {
        &self.y_hi - &self.y_lo
    }

    pub fn center(&self) -> (Rational, Rational) {
        let two = Rational::from_integer(BigInt::from(2));
        ((&self.x_lo + &self.x_hi) / &two, (&self.y_lo + &self.y_hi) / two)
    }

    /// Closed containment.
    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        &self.x_lo <= x && x <= &self.x_hi && &self.y_lo <= y && y <= &self.y_hi
    }

    /// Whether the open interiors intersect.
    pub fn overlaps(&self, o: &IsolationBox) -> bool {
        self.x_lo < o.x_hi && o.x_lo < self.x_hi && self.y_lo < o.y_hi && o.y_lo < self.y_hi
    }
}

impl fmt::Display for IsolationBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}] x [{}, {}]",
            fmt_rational(&self.x_lo),
            fmt_rational(&self.x_hi),
            fmt_rational(&self.y_lo),
            fmt_rational(&self.y_hi)
        )
    }
}

/// Amount subtracted from a degenerate coordinate at retry `k` for a box
/// side of length `side`: `side / (2^{k+4} P)`.
pub fn nudge_step(side: &Rational, k: u32) -> Rational {
    side * pow2(-(k as i64) - 4) / Rational::from_integer(BigInt::from(NUDGE_PRIME))
}

pub(crate) type SigCache = HashMap<(Rational, Rational), Option<i64>>;

pub(crate) fn signature(
    vf: &VolumeFunctionData,
    cache: &mut SigCache,
    x: &Rational,
    y: &Rational,
) -> Result<Option<i64>> {
    let key = (x.clone(), y.clone());
    if let Some(s) = cache.get(&key) {
        return Ok(*s);
    }
    let s = vf.vertex_signature(x, y)?;
    cache.insert(key, s);
    Ok(s)
}

/// Count for a box whose four vertices are all regular; `None` otherwise.
pub(crate) fn count_regular(
    vf: &VolumeFunctionData,
    cache: &mut SigCache,
    bx: &IsolationBox,
) -> Result<Option<u64>> {
    let mut s = [0i64; 4];
    let verts = [(&bx.x_lo, &bx.y_lo), (&bx.x_hi, &bx.y_lo), (&bx.x_hi, &bx.y_hi), (&bx.x_lo, &bx.y_hi)];
    for (i, (x, y)) in verts.into_iter().enumerate() {
        match signature(vf, cache, x, y)? {
            Some(v) => s[i] = v,
            None => return Ok(None),
        }
    }
    VolumeFunctionData::count_from_signatures(s[0], s[1], s[2], s[3]).map(Some)
}

pub(crate) fn count_nudged(
    vf: &VolumeFunctionData,
    cache: &mut SigCache,
    bx: &IsolationBox,
) -> Result<IsolationBox> {
    let mut cur = bx.clone();
    let (w, h) = (bx.width(), bx.height());
    for k in 0..NUDGE_RETRIES {
        let verts = [(false, false), (true, false), (true, true), (false, true)];
        let mut bad_x = [false; 2];
        let mut bad_y = [false; 2];
        let mut sig = [0i64; 4];
        for (i, &(hx, hy)) in verts.iter().enumerate() {
            let x = if hx { &cur.x_hi } else { &cur.x_lo };
            let y = if hy { &cur.y_hi } else { &cur.y_lo };
            match signature(vf, cache, x, y)? {
                Some(v) => sig[i] = v,
                None => {
                    bad_x[hx as usize] = true;
                    bad_y[hy as usize] = true;
                }
            }
        }
        if !bad_x.iter().chain(&bad_y).any(|&b| b) {
            match VolumeFunctionData::count_from_signatures(sig[0], sig[1], sig[2], sig[3]) {
                Ok(c) => {
                    cur.certified_count = c;
                    return Ok(cur);
                }
                // regular vertices with an invalid sum: move every edge
                Err(_) => {
                    bad_x = [true; 2];
                    bad_y = [true; 2];
                }
            }
        }
        let dx = nudge_step(&w, k);
        let dy = nudge_step(&h, k);
        if bad_x[0] {
            cur.x_lo -= &dx;
        }
        if bad_x[1] {
            cur.x_hi -= &dx;
        }
        if bad_y[0] {
            cur.y_lo -= &dy;
        }
        if bad_y[1] {
            cur.y_hi -= &dy;
        }
    }
    Err(Error::Degenerate(format!("no regular box found near {bx} after {NUDGE_RETRIES} nudges")))
}

/// Number of real roots strictly inside `bx`, together with the box the
/// count refers to: `bx` itself when its vertices are regular, otherwise
/// `bx` with the offending edges moved by the nudge schedule.
pub fn count_in_box(vf: &VolumeFunctionData, bx: &IsolationBox) -> Result<(u64, IsolationBox)> {
    let mut cache = SigCache::new();
    let out = count_nudged(vf, &mut cache, bx)?;
    Ok((out.certified_count, out))
}
