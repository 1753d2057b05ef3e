//! Convex hull of a full-dimensional lattice point set by a placing
//! triangulation; the boundary is kept as oriented simplices.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;

use super::linalg::{cofactor_normal, det_i128, dot, gcd_vec, rank};
use crate::error::{Error, Result};

/// `normal . x <= offset`, normal primitive.
pub(crate) type Plane = (Vec<i128>, i128);

pub(crate) struct Hull {
    pub facets: Vec<Plane>,
    /// Indices of extreme points in the input slice.
    pub vertex_ids: Vec<usize>,
    /// `k!` times the volume.
    pub normalized_volume: BigInt,
}

struct Facet {
    verts: Vec<usize>,
    normal: Vec<i128>,
    offset: i128,
}

fn diff(a: &[i128], b: &[i128]) -> Vec<i128> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Hull of points spanning `R^k` affinely. Points must be distinct.
pub(crate) fn full_hull(points: &[Vec<i64>]) -> Result<Hull> {
    let k = points[0].len();
    let pts: Vec<Vec<i128>> = points
        .iter()
        .map(|p| p.iter().map(|&x| x as i128).collect())
        .collect();
    if k == 1 {
        let (mut lo, mut hi) = (0, 0);
        for (i, p) in pts.iter().enumerate() {
            if p[0] < pts[lo][0] {
                lo = i;
            }
            if p[0] > pts[hi][0] {
                hi = i;
            }
        }
        return Ok(Hull {
            facets: vec![(vec![1], pts[hi][0]), (vec![-1], -pts[lo][0])],
            vertex_ids: vec![lo.min(hi), lo.max(hi)],
            normalized_volume: BigInt::from(pts[hi][0] - pts[lo][0]),
        });
    }

    // initial simplex, greedily affinely independent
    let mut simplex = vec![0usize];
    let mut basis: Vec<Vec<i64>> = Vec::new();
    for (i, p) in points.iter().enumerate().skip(1) {
        let cand: Vec<i64> = p.iter().zip(&points[0]).map(|(a, b)| a - b).collect();
        basis.push(cand);
        if rank(&basis) == basis.len() {
            simplex.push(i);
            if simplex.len() == k + 1 {
                break;
            }
        } else {
            basis.pop();
        }
    }
    if simplex.len() != k + 1 {
        return Err(Error::precondition("point set is not full-dimensional"));
    }
    let mut interior = vec![0i128; k];
    for &i in &simplex {
        for c in 0..k {
            interior[c] += pts[i][c];
        }
    }
    let scale = (k + 1) as i128;

    let make = |verts: Vec<usize>| -> Result<Facet> {
        let base = &pts[verts[0]];
        let rows: Vec<Vec<i128>> = verts[1..].iter().map(|&v| diff(&pts[v], base)).collect();
        let mut normal = cofactor_normal(&rows)?;
        let mut offset = dot(&normal, base)?;
        let side = dot(&normal, &interior)?;
        let lim = offset.checked_mul(scale).ok_or(Error::Overflow("hull orientation"))?;
        if side > lim {
            normal.iter_mut().for_each(|x| *x = -*x);
            offset = -offset;
        }
        Ok(Facet { verts, normal, offset })
    };

    let base = &pts[simplex[0]];
    let rows: Vec<Vec<i128>> = simplex[1..].iter().map(|&v| diff(&pts[v], base)).collect();
    let mut volume = BigInt::from(det_i128(rows)?.abs());
    let mut facets = Vec::new();
    for skip in 0..=k {
        let verts: Vec<usize> = simplex
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != skip)
            .map(|(_, &v)| v)
            .collect();
        facets.push(make(verts)?);
    }

    let in_simplex: BTreeSet<usize> = simplex.iter().copied().collect();
    for (q, qp) in pts.iter().enumerate() {
        if in_simplex.contains(&q) {
            continue;
        }
        let mut visible = Vec::new();
        for (fi, f) in facets.iter().enumerate() {
            let s = dot(&f.normal, qp)?;
            if s > f.offset {
                visible.push(fi);
                volume += BigInt::from(s - f.offset);
            }
        }
        if visible.is_empty() {
            continue;
        }
        let mut ridges: HashMap<Vec<usize>, usize> = HashMap::new();
        for &fi in &visible {
            let v = &facets[fi].verts;
            for skip in 0..v.len() {
                let r: Vec<usize> = v
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &x)| x)
                    .collect();
                *ridges.entry(r).or_insert(0) += 1;
            }
        }
        let vis: BTreeSet<usize> = visible.into_iter().collect();
        let mut kept = Vec::with_capacity(facets.len());
        for (fi, f) in facets.into_iter().enumerate() {
            if !vis.contains(&fi) {
                kept.push(f);
            }
        }
        facets = kept;
        let mut horizon: Vec<Vec<usize>> =
            ridges.into_iter().filter(|&(_, c)| c == 1).map(|(r, _)| r).collect();
        horizon.sort();
        for mut r in horizon {
            r.push(q);
            r.sort_unstable();
            facets.push(make(r)?);
        }
    }

    let mut planes: BTreeSet<Plane> = BTreeSet::new();
    for f in &facets {
        let g = gcd_vec(&f.normal);
        planes.insert((f.normal.iter().map(|x| x / g).collect(), f.offset / g));
    }
    let planes: Vec<Plane> = planes.into_iter().collect();

    let mut vertex_ids = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        let mut tight: Vec<Vec<i64>> = Vec::new();
        for (n, o) in &planes {
            if dot(n, p)? == *o {
                tight.push(n.iter().map(|&x| x as i64).collect());
            }
        }
        if tight.len() >= k && rank(&tight) == k {
            vertex_ids.push(i);
        }
    }
    Ok(Hull { facets: planes, vertex_ids, normalized_volume: volume })
}
