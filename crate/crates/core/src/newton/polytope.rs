use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::hull::full_hull;
use super::linalg::{nullspace, rank};
use crate::error::{Error, Result};
use crate::numeric::Rational;

/// Largest ambient dimension with exact hull and volume computations.
pub const MAX_EXACT_DIM: usize = 4;

/// Candidate cap for bounding-box lattice point enumeration.
const ENUM_CAP: u64 = 20_000_000;

/// `normal . x <= offset` (or `==` for equalities), normal primitive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Halfspace {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Halfspace {
    fn value(&self, p: &[i64]) -> i128 {
        self.normal.iter().zip(p).map(|(&a, &x)| a as i128 * x as i128).sum()
    }

    pub fn satisfied_by(&self, p: &[i64]) -> bool {
        self.value(p) <= self.offset as i128
    }

    pub fn tight_at(&self, p: &[i64]) -> bool {
        self.value(p) == self.offset as i128
    }
}

/// Convex hull of finitely many integer points.
///
/// `facets` together with `equalities` describe the polytope exactly; for a
/// full-dimensional polytope `equalities` is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<Vec<i64>>,
    facets: Vec<Halfspace>,
    equalities: Vec<Halfspace>,
    affine_dim: usize,
    normalized_volume: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolumeData {
    pub euclidean_volume: Rational,
    /// `n!` times the volume; zero for lower-dimensional polytopes.
    pub normalized_volume: BigInt,
    pub lattice_points: BigInt,
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |a, k| a * k)
}

fn to_i64(v: i128) -> Result<i64> {
    v.to_i64().ok_or(Error::Overflow("polytope coordinates"))
}

impl LatticePolytope {
    pub fn hull(points: &[Vec<i64>]) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::precondition("hull of an empty point set"));
        };
        let n = first.len();
        if points.iter().any(|p| p.len() != n) {
            let bad = points.iter().find(|p| p.len() != n).unwrap();
            return Err(Error::DimensionMismatch { expected: n, found: bad.len() });
        }
        if n > MAX_EXACT_DIM {
            return Err(Error::UnsupportedDimension { dim: n, max: MAX_EXACT_DIM });
        }
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();

        let diffs: Vec<Vec<i64>> = pts[1..]
            .iter()
            .map(|p| p.iter().zip(&pts[0]).map(|(a, b)| a - b).collect())
            .collect();
        let r = rank(&diffs);
        let equalities: Vec<Halfspace> = nullspace(&diffs, n)
            .into_iter()
            .map(|c| {
                let offset = c.iter().zip(&pts[0]).map(|(a, b)| a * b).sum();
                Halfspace { normal: c, offset }
            })
            .collect();

        if r == 0 {
            return Ok(LatticePolytope {
                dim: n,
                vertices: vec![pts[0].clone()],
                facets: Vec::new(),
                equalities,
                affine_dim: 0,
                normalized_volume: BigInt::zero(),
            });
        }

        // coordinates on which the projection is injective on the affine hull
        let mut cols: Vec<usize> = Vec::new();
        for c in 0..n {
            let mut trial = cols.clone();
            trial.push(c);
            let sub: Vec<Vec<i64>> =
                diffs.iter().map(|d| trial.iter().map(|&j| d[j]).collect()).collect();
            if rank(&sub) == trial.len() {
                cols = trial;
                if cols.len() == r {
                    break;
                }
            }
        }
        let proj: Vec<Vec<i64>> =
            pts.iter().map(|p| cols.iter().map(|&j| p[j]).collect()).collect();
        let h = full_hull(&proj)?;
        let mut facets = Vec::with_capacity(h.facets.len());
        for (normal, offset) in &h.facets {
            let mut lifted = vec![0i64; n];
            for (k, &j) in cols.iter().enumerate() {
                lifted[j] = to_i64(normal[k])?;
            }
            facets.push(Halfspace { normal: lifted, offset: to_i64(*offset)? });
        }
        let vertices = h.vertex_ids.iter().map(|&i| pts[i].clone()).collect();
        Ok(LatticePolytope {
            dim: n,
            vertices,
            facets,
            equalities,
            affine_dim: r,
            normalized_volume: if r == n { h.normalized_volume } else { BigInt::zero() },
        })
    }

    /// Newton polytope of a support with nonnegative or Laurent exponents.
    pub fn from_support(support: &[Vec<i32>]) -> Result<Self> {
        let pts: Vec<Vec<i64>> =
            support.iter().map(|m| m.iter().map(|&e| e as i64).collect()).collect();
        Self::hull(&pts)
    }

    /// `conv{0, e_1, ..., e_n}`.
    pub fn unit_simplex(n: usize) -> Result<Self> {
        let mut pts = vec![vec![0i64; n]];
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            pts.push(e);
        }
        Self::hull(&pts)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    pub fn equalities(&self) -> &[Halfspace] {
        &self.equalities
    }

    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    /// True for lower-dimensional polytopes.
    pub fn is_degenerate(&self) -> bool {
        self.affine_dim < self.dim
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        p.len() == self.dim
            && self.equalities.iter().all(|e| e.tight_at(p))
            && self.facets.iter().all(|f| f.satisfied_by(p))
    }

    pub fn normalized_volume(&self) -> &BigInt {
        &self.normalized_volume
    }

    /// `k P` for `k >= 0`.
    pub fn scaled(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return Err(Error::precondition("negative Minkowski scaling"));
        }
        let pts: Vec<Vec<i64>> =
            self.vertices.iter().map(|v| v.iter().map(|&x| x * k).collect()).collect();
        Self::hull(&pts)
    }

    /// Integer points of the bounding box satisfying every constraint.
    pub fn lattice_point_count(&self) -> Result<BigInt> {
        let n = self.dim;
        if n == 0 {
            return Ok(BigInt::from(1));
        }
        let lo: Vec<i64> = (0..n).map(|j| self.vertices.iter().map(|v| v[j]).min().unwrap()).collect();
        let hi: Vec<i64> = (0..n).map(|j| self.vertices.iter().map(|v| v[j]).max().unwrap()).collect();
        let mut total: u64 = 1;
        for j in 0..n {
            total = total
                .checked_mul((hi[j] - lo[j] + 1) as u64)
                .filter(|&t| t <= ENUM_CAP)
                .ok_or(Error::Overflow("lattice point enumeration"))?;
        }
        let mut count: u64 = 0;
        let mut p = lo.clone();
        loop {
            if self.contains(&p) {
                count += 1;
            }
            let mut j = 0;
            while j < n {
                if p[j] < hi[j] {
                    p[j] += 1;
                    break;
                }
                p[j] = lo[j];
                j += 1;
            }
            if j == n {
                break;
            }
        }
        Ok(BigInt::from(count))
    }

    pub fn volume(&self) -> Result<VolumeData> {
        Ok(VolumeData {
            euclidean_volume: Rational::new(self.normalized_volume.clone(), factorial(self.dim)),
            normalized_volume: self.normalized_volume.clone(),
            lattice_points: self.lattice_point_count()?,
        })
    }
}

/// Hull of the pairwise vertex sums.
pub fn minkowski_sum(p: &LatticePolytope, q: &LatticePolytope) -> Result<LatticePolytope> {
    if p.dim != q.dim {
        return Err(Error::DimensionMismatch { expected: p.dim, found: q.dim });
    }
    let mut pts = Vec::with_capacity(p.vertices.len() * q.vertices.len());
    for a in &p.vertices {
        for b in &q.vertices {
            pts.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
        }
    }
    LatticePolytope::hull(&pts)
}

/// Mixed volume of `n` polytopes in `R^n`, normalized so that
/// `MV(Q, ..., Q) = n! vol(Q)`.
pub fn mixed_volume(polys: &[LatticePolytope]) -> Result<BigInt> {
    let n = polys.len();
    if n == 0 {
        return Err(Error::precondition("mixed volume of no polytopes"));
    }
    if let Some(p) = polys.iter().find(|p| p.dim != n) {
        return Err(Error::DimensionMismatch { expected: n, found: p.dim });
    }
    if n > MAX_EXACT_DIM {
        return Err(Error::UnsupportedDimension { dim: n, max: MAX_EXACT_DIM });
    }
    // sums[mask] = Minkowski sum of the polytopes in mask
    let mut sums: Vec<Option<LatticePolytope>> = vec![None; 1 << n];
    let mut acc = BigInt::zero();
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let s = if rest == 0 {
            polys[low].clone()
        } else {
            minkowski_sum(sums[rest].as_ref().unwrap(), &polys[low])?
        };
        let sign_neg = (n - mask.count_ones() as usize) % 2 == 1;
        if sign_neg {
            acc -= &s.normalized_volume;
        } else {
            acc += &s.normalized_volume;
        }
        sums[mask] = Some(s);
    }
    let f = factorial(n);
    if !(&acc % &f).is_zero() {
        return Err(Error::precondition("mixed volume sum not divisible by n!"));
    }
    Ok(acc / f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[&[i64]]) -> Vec<Vec<i64>> {
        v.iter().map(|p| p.to_vec()).collect()
    }

    #[test]
    fn unit_square() {
        let p = LatticePolytope::hull(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.facets().len(), 4);
        let v = p.volume().unwrap();
        assert_eq!(v.euclidean_volume, Rational::from_integer(1.into()));
        assert_eq!(v.lattice_points, BigInt::from(4));
    }

    #[test]
    fn triangles() {
        let t = LatticePolytope::unit_simplex(2).unwrap();
        let v = t.volume().unwrap();
        assert_eq!(v.euclidean_volume, Rational::new(1.into(), 2.into()));
        assert_eq!(v.lattice_points, BigInt::from(3));
        let t2 = LatticePolytope::hull(&pts(&[&[0, 0], &[2, 0], &[0, 2], &[1, 1], &[1, 0]])).unwrap();
        assert_eq!(t2.vertices().len(), 3);
        let v2 = t2.volume().unwrap();
        assert_eq!(v2.euclidean_volume, Rational::from_integer(2.into()));
        assert_eq!(v2.lattice_points, BigInt::from(6));
    }

    #[test]
    fn degenerate_segment() {
        let s = LatticePolytope::hull(&pts(&[&[0, 0], &[2, 0], &[1, 0]])).unwrap();
        assert!(s.is_degenerate());
        assert_eq!(s.vertices().len(), 2);
        let v = s.volume().unwrap();
        assert!(v.normalized_volume.is_zero());
        assert_eq!(v.lattice_points, BigInt::from(3));
        assert!(!s.contains(&[1, 1]));
    }

    #[test]
    fn tilted_segment_in_3d() {
        let s = LatticePolytope::hull(&pts(&[&[0, 0, 0], &[2, 2, 4]])).unwrap();
        assert_eq!(s.affine_dim(), 1);
        assert_eq!(s.lattice_point_count().unwrap(), BigInt::from(3));
    }

    #[test]
    fn cube_and_simplex_3d() {
        let mut c = Vec::new();
        for i in 0..8i64 {
            c.push(vec![i & 1, (i >> 1) & 1, (i >> 2) & 1]);
        }
        c.push(vec![0, 0, 1]);
        let cube = LatticePolytope::hull(&c).unwrap();
        assert_eq!(cube.vertices().len(), 8);
        assert_eq!(cube.facets().len(), 6);
        assert_eq!(*cube.normalized_volume(), BigInt::from(6));
        let s = LatticePolytope::unit_simplex(4).unwrap();
        assert_eq!(*s.normalized_volume(), BigInt::from(1));
        assert_eq!(s.lattice_point_count().unwrap(), BigInt::from(5));
    }

    #[test]
    fn minkowski_examples() {
        let t = LatticePolytope::unit_simplex(2).unwrap();
        let tt = minkowski_sum(&t, &t).unwrap();
        assert_eq!(tt.volume().unwrap().euclidean_volume, Rational::from_integer(2.into()));
        let o = LatticePolytope::hull(&pts(&[&[0, 0]])).unwrap();
        assert_eq!(minkowski_sum(&t, &o).unwrap(), t);
        let a = LatticePolytope::hull(&pts(&[&[0, 0], &[1, 0]])).unwrap();
        let b = LatticePolytope::hull(&pts(&[&[0, 0], &[0, 1]])).unwrap();
        assert_eq!(*minkowski_sum(&a, &b).unwrap().normalized_volume(), BigInt::from(2));
    }

    #[test]
    fn mixed_volumes() {
        let t = LatticePolytope::unit_simplex(2).unwrap();
        assert_eq!(mixed_volume(&[t.clone(), t.clone()]).unwrap(), BigInt::from(1));
        for d in 1..5 {
            let q = LatticePolytope::hull(&pts(&[&[0, 0], &[d, 0], &[0, d]])).unwrap();
            assert_eq!(mixed_volume(&[q.clone(), q]).unwrap(), BigInt::from(d * d));
        }
        let s3 = LatticePolytope::unit_simplex(3).unwrap();
        assert_eq!(mixed_volume(&[s3.clone(), s3.clone(), s3]).unwrap(), BigInt::from(1));
        let a = LatticePolytope::hull(&pts(&[&[0, 0], &[1, 0]])).unwrap();
        assert_eq!(mixed_volume(&[a.clone(), a]).unwrap(), BigInt::from(0));
    }

    #[test]
    fn too_many_dimensions() {
        let e = LatticePolytope::unit_simplex(5).unwrap_err();
        assert!(matches!(e, Error::UnsupportedDimension { dim: 5, .. }));
    }
}
