//! Lattice-point counting by brute force, independent of the hull code.

use num_bigint::BigInt;

use crate::error::{Error, Result};

fn cross(a: &[i64], b: &[i64]) -> [i64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Every hyperplane through `n` of the points that has all points on one
/// side, oriented so that the points satisfy `normal . p <= offset`.
fn supporting(points: &[Vec<i64>]) -> Vec<(Vec<i64>, i64)> {
    let n = points[0].len();
    let mut out = Vec::new();
    let mut push = |normal: Vec<i64>, base: &[i64]| {
        if normal.iter().all(|&c| c == 0) {
            return;
        }
        let off = dot(&normal, base);
        let vals: Vec<i64> = points.iter().map(|p| dot(&normal, p) - off).collect();
        if vals.iter().all(|&v| v <= 0) {
            out.push((normal, off));
        } else if vals.iter().all(|&v| v >= 0) {
            out.push((normal.iter().map(|c| -c).collect(), -off));
        }
    };
    let m = points.len();
    for i in 0..m {
        for j in i + 1..m {
            if n == 2 {
                let d = sub(&points[j], &points[i]);
                push(vec![d[1], -d[0]], &points[i]);
                continue;
            }
            for k in j + 1..m {
                let u = sub(&points[j], &points[i]);
                let v = sub(&points[k], &points[i]);
                push(cross(&u, &v).to_vec(), &points[i]);
            }
        }
    }
    out
}

/// Lattice points in the convex hull of a full-dimensional point set in
/// dimension 2 or 3.
pub fn brute_force_lattice_count(points: &[Vec<i64>]) -> Result<BigInt> {
    let n = points.first().map_or(0, Vec::len);
    if !(2..=3).contains(&n) {
        return Err(Error::UnsupportedDimension { dim: n, max: 3 });
    }
    let planes = supporting(points);
    let lo: Vec<i64> = (0..n).map(|k| points.iter().map(|p| p[k]).min().unwrap()).collect();
    let hi: Vec<i64> = (0..n).map(|k| points.iter().map(|p| p[k]).max().unwrap()).collect();
    // a full-dimensional hull has an inward normal in every direction
    if planes.len() < n + 1 {
        return Err(Error::precondition("point set is not full-dimensional"));
    }
    let mut count = 0u64;
    let mut p = lo.clone();
    loop {
        if planes.iter().all(|(a, b)| dot(a, &p) <= *b) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return Ok(BigInt::from(count));
            }
            p[k] += 1;
            if p[k] <= hi[k] {
                break;
            }
            p[k] = lo[k];
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_and_cubes() {
        let sq = vec![vec![0, 0], vec![2, 0], vec![0, 2], vec![2, 2], vec![1, 1]];
        assert_eq!(brute_force_lattice_count(&sq).unwrap(), BigInt::from(9));
        let tri = vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(brute_force_lattice_count(&tri).unwrap(), BigInt::from(4));
        let flat = vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0]];
        assert!(brute_force_lattice_count(&flat).is_err());
    }
}
