//! Quadtree subdivision driven by the box counting oracle.

use std::collections::VecDeque;

use num_bigint::BigInt;

use super::count::{count_nudged, count_regular, nudge_step, signature, IsolationBox, SigCache, NUDGE_PRIME, NUDGE_RETRIES};
use super::volume::VolumeFunctionData;
use crate::bounds::{dmm_n_bounds, subdivision_step_bound_profile, BoundName};
use crate::error::{Error, Result};
use crate::newton::{system_profile, SystemProfile};
use crate::numeric::{pow2, Rational};
use crate::poly::SparsePoly;

#[derive(Clone, Debug, Default)]
pub struct IsolateOptions {
    /// Search region; roots outside it are not reported.
    pub initial_box: Option<IsolationBox>,
    /// Overrides the depth cap derived from the separation bound.
    pub max_depth: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolationStats {
    /// Boxes handed to the counting oracle, the initial box included.
    pub oracle_calls: u64,
    pub max_depth: usize,
    pub depth_cap: usize,
    /// `#T` from the subdivision step bound, profile form.
    pub bound_value: BigInt,
}

#[derive(Clone, Debug)]
pub struct Isolation {
    /// Count-1 boxes in the order they were certified.
    pub boxes: Vec<IsolationBox>,
    /// The searched region after any nudge, with its total count.
    pub initial_box: IsolationBox,
    pub stats: IsolationStats,
}

fn exponent_of(p: &SystemProfile, name: BoundName) -> Result<i64> {
    dmm_n_bounds(p, 1)?
        .into_iter()
        .find(|r| r.name == name)
        .map(|r| r.exponent)
        .ok_or_else(|| Error::precondition("missing system bound"))
}

/// Box of half-side `2^e`, `e` the coordinate upper exponent of the system
/// bounds, with distinct `1/P`-scale offsets on every edge.
pub fn default_initial_box(p: &SystemProfile) -> Result<IsolationBox> {
    let r = pow2(exponent_of(p, BoundName::DmmCoordinateUpper)?.max(0));
    let off = |k: i64| &r * Rational::new(BigInt::from(NUDGE_PRIME + k as u64), BigInt::from(NUDGE_PRIME));
    IsolationBox::new(-off(1), off(2), -off(3), off(5))
}

/// Depth at which boxes are narrower than the separation bound allows two
/// roots to be, plus slack for the nudges.
fn depth_cap(p: &SystemProfile, bx: &IsolationBox) -> Result<usize> {
    let side = bx.width().max(bx.height());
    let lg_side = crate::numeric::bit_length(&crate::numeric::ceil(&side)) as i64;
    let sep = exponent_of(p, BoundName::DmmSeparation)?;
    Ok((lg_side - sep + 4).max(4) as usize)
}

/// Nudges `mid` down until every vertex `(mid, t)` (or `(t, mid)` when
/// `on_x` is false) for `t` in `others` is regular.
fn regular_split(
    vf: &VolumeFunctionData,
    cache: &mut SigCache,
    mid: &Rational,
    side: &Rational,
    others: &[&Rational],
    on_x: bool,
) -> Result<Rational> {
    let mut m = mid.clone();
    for k in 0..NUDGE_RETRIES {
        let mut ok = true;
        for t in others {
            let s = if on_x { signature(vf, cache, &m, t)? } else { signature(vf, cache, t, &m)? };
            if s.is_none() {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(m);
        }
        m = mid - nudge_step(side, k);
    }
    Err(Error::Degenerate(format!("no regular split line near {mid}")))
}

/// Certified isolating boxes for the real roots of `f = g = 0` inside the
/// initial box.
pub fn isolate(f: &SparsePoly, g: &SparsePoly, opts: &IsolateOptions) -> Result<Isolation> {
    let vf = VolumeFunctionData::build(f, g)?;
    let profile = system_profile(&[f.clone(), g.clone()])?;
    let start = match &opts.initial_box {
        Some(b) => b.clone(),
        None => default_initial_box(&profile)?,
    };
    let cap = match opts.max_depth {
        Some(c) => c,
        None => depth_cap(&profile, &start)?,
    };
    let bound_value = subdivision_step_bound_profile(&profile).total_nodes;
    isolate_with(&vf, start, cap, bound_value)
}

pub(crate) fn isolate_with(
    vf: &VolumeFunctionData,
    start: IsolationBox,
    cap: usize,
    bound_value: BigInt,
) -> Result<Isolation> {
    let mut cache = SigCache::new();
    let mut initial = count_nudged(vf, &mut cache, &start)?;
    initial.depth = 0;
    let mut stats = IsolationStats { oracle_calls: 1, max_depth: 0, depth_cap: cap, bound_value };
    let mut boxes = Vec::new();
    let mut queue = VecDeque::new();
    match initial.certified_count {
        0 => {}
        1 => boxes.push(initial.clone()),
        _ => queue.push_back(initial.clone()),
    }
    let two = Rational::from_integer(BigInt::from(2));
    while let Some(bx) = queue.pop_front() {
        if bx.depth >= cap {
            return Err(Error::DepthExceeded { cap, region: bx.to_string() });
        }
        let (w, h) = (bx.width(), bx.height());
        let mx = (&bx.x_lo + &bx.x_hi) / &two;
        let mx = regular_split(vf, &mut cache, &mx, &w, &[&bx.y_lo, &bx.y_hi], true)?;
        let my = (&bx.y_lo + &bx.y_hi) / &two;
        let my = regular_split(vf, &mut cache, &my, &h, &[&bx.x_lo, &bx.x_hi, &mx], false)?;
        let xs = [(&bx.x_lo, &mx), (&mx, &bx.x_hi)];
        let ys = [(&bx.y_lo, &my), (&my, &bx.y_hi)];
        let mut total = 0;
        let mut children = Vec::with_capacity(4);
        for (ylo, yhi) in ys {
            for (xlo, xhi) in xs {
                let mut child = IsolationBox::new(xlo.clone(), xhi.clone(), ylo.clone(), yhi.clone())?;
                child.depth = bx.depth + 1;
                stats.oracle_calls += 1;
                child.certified_count = count_regular(vf, &mut cache, &child)?
                    .ok_or_else(|| Error::Degenerate(format!("irregular vertex in {child}")))?;
                total += child.certified_count;
                children.push(child);
            }
        }
        if total != bx.certified_count {
            return Err(Error::Degenerate(format!(
                "children of {bx} count {total}, parent counts {}",
                bx.certified_count
            )));
        }
        stats.max_depth = stats.max_depth.max(bx.depth + 1);
        for child in children {
            match child.certified_count {
                0 => {}
                1 => boxes.push(child),
                _ => queue.push_back(child),
            }
        }
    }
    Ok(Isolation { boxes, initial_box: initial, stats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::milne::count_in_box;
    use crate::numeric::{int, ratio};
    use crate::poly::parse_poly;

    fn sys(f: &str, g: &str) -> (SparsePoly, SparsePoly) {
        (parse_poly(f, 2).unwrap(), parse_poly(g, 2).unwrap())
    }

    fn bx(a: i64, b: i64, c: i64, d: i64) -> IsolationBox {
        IsolationBox::new(int(a), int(b), int(c), int(d)).unwrap()
    }

    #[test]
    fn unit_point_counts() {
        // x - 1, y - 1
        let (f, g) = sys("1:1,0;-1:0,0", "1:0,1;-1:0,0");
        let vf = VolumeFunctionData::build(&f, &g).unwrap();
        assert_eq!(count_in_box(&vf, &bx(0, 2, 0, 2)).unwrap().0, 1);
        assert_eq!(count_in_box(&vf, &bx(2, 3, 0, 2)).unwrap().0, 0);
        assert_eq!(count_in_box(&vf, &bx(-5, 7, -3, 4)).unwrap().0, 1);
    }

    #[test]
    fn circle_line_counts() {
        let (f, g) = sys("1:2,0;1:0,2;-2:0,0", "1:1,0;-1:0,1");
        let vf = VolumeFunctionData::build(&f, &g).unwrap();
        assert!(!vf.sturm_at_zero.is_empty());
        assert_eq!(count_in_box(&vf, &bx(0, 2, 0, 2)).unwrap().0, 1);
        let off = IsolationBox::new(ratio(-201, 100), ratio(203, 100), ratio(-205, 100), ratio(207, 100)).unwrap();
        assert_eq!(count_in_box(&vf, &off).unwrap().0, 2);
        assert_eq!(count_in_box(&vf, &bx(3, 4, 3, 4)).unwrap().0, 0);
        // vertex (1, 1) is a root: the nudge moves the edges off it
        let (n, moved) = count_in_box(&vf, &bx(1, 3, 1, 3)).unwrap();
        assert!(moved.x_lo < int(1) && moved.y_lo < int(1));
        assert_eq!(n, 1);
    }

    #[test]
    fn isolate_circle_line() {
        let (f, g) = sys("1:2,0;1:0,2;-2:0,0", "1:1,0;-1:0,1");
        let iso = isolate(&f, &g, &IsolateOptions::default()).unwrap();
        assert_eq!(iso.initial_box.certified_count, 2);
        assert_eq!(iso.boxes.len(), 2);
        assert!(iso.boxes.iter().any(|b| b.contains(&int(1), &int(1))));
        assert!(iso.boxes.iter().any(|b| b.contains(&int(-1), &int(-1))));
        assert!(!iso.boxes[0].overlaps(&iso.boxes[1]));
        assert!(BigInt::from(iso.stats.oracle_calls) <= iso.stats.bound_value);
    }

    #[test]
    fn positive_dimensional_rejected() {
        let (f, g) = sys("1:1,0;-1:0,1", "2:1,0;-2:0,1");
        assert!(matches!(VolumeFunctionData::build(&f, &g), Err(Error::PositiveDimensional(_))));
    }
}
