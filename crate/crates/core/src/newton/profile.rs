use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::linalg::rank;
use super::polytope::{mixed_volume, LatticePolytope, MAX_EXACT_DIM};
use crate::error::{Error, Result};
use crate::poly::SparsePoly;

/// Combinatorial and arithmetic data of a square system.
///
/// Index `0` of `mixed_volumes` is `M_0`; index `i >= 1` is `M_i`, the mixed
/// volume with `Q_i` replaced by the unit simplex. `lattice_points[i - 1]`
/// is `#Q_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemProfile {
    pub n: usize,
    pub degrees: Vec<i64>,
    pub bitsizes: Vec<u64>,
    pub inf_norms: Vec<BigInt>,
    pub mixed_volumes: Vec<BigInt>,
    pub lattice_points: Vec<BigInt>,
    /// `D`, taken equal to `M_0`.
    pub root_count_bound: BigInt,
    /// `(n - 1) * binom(D, 2)`.
    pub b: BigInt,
    /// `prod ||f_i||_inf^{M_i}`.
    pub c: BigInt,
    /// `prod (#Q_i)^{M_i}`.
    pub rho: BigInt,
    /// `(n + 1)^D * rho`.
    pub h: BigInt,
    /// Mixed volumes replaced by degree products.
    pub bezout_mode: bool,
    pub warnings: Vec<String>,
}

impl SystemProfile {
    /// Largest bitsize `tau = max tau_i`.
    pub fn tau(&self) -> u64 {
        self.bitsizes.iter().copied().max().unwrap_or(1)
    }

    pub fn max_degree(&self) -> i64 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }
}

fn binom(n: &BigInt, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - BigInt::from(i)) / BigInt::from(i + 1);
    }
    acc
}

fn big_pow(b: &BigInt, e: &BigInt) -> Result<BigInt> {
    if b.is_one() || e.is_zero() {
        return Ok(BigInt::one());
    }
    let e: u32 = e.try_into().map_err(|_| Error::Overflow("profile power"))?;
    Ok(num_traits::pow(b.clone(), e as usize))
}

/// Computes `M_i`, `#Q_i`, `D`, `B`, `C`, `rho` and `h` for `n` polynomials
/// in `n` variables. Laurent polynomials are first shifted to nonnegative
/// exponents, which moves no nonzero root.
pub fn system_profile(polys: &[SparsePoly]) -> Result<SystemProfile> {
    let n = polys.len();
    if n == 0 {
        return Err(Error::precondition("empty system"));
    }
    if let Some(p) = polys.iter().find(|p| p.nvars() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: p.nvars() });
    }
    if polys.iter().any(SparsePoly::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let polys: Vec<SparsePoly> = polys.iter().map(|p| p.clear_negative_exponents().0).collect();
    let measures: Vec<_> = polys.iter().map(SparsePoly::measures).collect();
    let degrees: Vec<i64> = measures.iter().map(|m| m.total_degree.unwrap_or(0)).collect();
    let bitsizes: Vec<u64> = measures.iter().map(|m| m.bitsize).collect();
    let inf_norms: Vec<BigInt> = measures.iter().map(|m| m.inf_norm.clone()).collect();

    let mut warnings = Vec::new();
    let (mixed_volumes, lattice_points, bezout_mode) = if n <= MAX_EXACT_DIM {
        let q: Vec<LatticePolytope> = polys
            .iter()
            .map(|p| LatticePolytope::from_support(&p.support()?))
            .collect::<Result<_>>()?;
        let q0 = LatticePolytope::unit_simplex(n)?;
        let mut mv = vec![mixed_volume(&q)?];
        for i in 0..n {
            let mut args = q.clone();
            args[i] = q0.clone();
            mv.push(mixed_volume(&args)?);
        }
        let lp: Vec<BigInt> = q.iter().map(LatticePolytope::lattice_point_count).collect::<Result<_>>()?;
        genericity_warnings(&q0, &q, &mut warnings);
        (mv, lp, false)
    } else {
        let prod = |skip: Option<usize>| -> BigInt {
            degrees
                .iter()
                .enumerate()
                .filter(|&(j, _)| Some(j) != skip)
                .fold(BigInt::one(), |a, (_, &d)| a * d)
        };
        let mut mv = vec![prod(None)];
        mv.extend((0..n).map(|i| prod(Some(i))));
        // lattice points of the degree-d_i simplex
        let lp = degrees.iter().map(|&d| binom(&BigInt::from(n as i64 + d), n as u32)).collect();
        warnings.push(format!(
            "dimension {n} exceeds {MAX_EXACT_DIM}: mixed volumes replaced by degree products"
        ));
        (mv, lp, true)
    };

    let d = mixed_volumes[0].clone();
    let b = BigInt::from(n as i64 - 1) * binom(&d, 2);
    let mut c = BigInt::one();
    let mut rho = BigInt::one();
    for i in 0..n {
        c *= big_pow(&inf_norms[i], &mixed_volumes[i + 1])?;
        rho *= big_pow(&lattice_points[i], &mixed_volumes[i + 1])?;
    }
    let h = big_pow(&BigInt::from(n as i64 + 1), &d)? * &rho;
    if d.is_zero() {
        warnings.push("M_0 = 0: the system has no toric roots".to_string());
    }
    Ok(SystemProfile {
        n,
        degrees,
        bitsizes,
        inf_norms,
        mixed_volumes,
        lattice_points,
        root_count_bound: d,
        b,
        c,
        rho,
        h,
        bezout_mode,
        warnings,
    })
}

/// Affine dimension of a Minkowski sum: rank of the union of edge directions.
fn sum_dim(parts: &[&LatticePolytope]) -> usize {
    let mut rows = Vec::new();
    for p in parts {
        let v0 = &p.vertices()[0];
        for v in &p.vertices()[1..] {
            rows.push(v.iter().zip(v0).map(|(a, b)| a - b).collect::<Vec<i64>>());
        }
    }
    rank(&rows)
}

/// Flags violations of `dim sum_{i in I} Q_i >= |I|` over subsets of
/// `{Q_0, ..., Q_n}`.
fn genericity_warnings(q0: &LatticePolytope, q: &[LatticePolytope], out: &mut Vec<String>) {
    let all: Vec<&LatticePolytope> = std::iter::once(q0).chain(q.iter()).collect();
    let m = all.len();
    let n = q.len();
    if sum_dim(&q.iter().collect::<Vec<_>>()) < n {
        out.push(format!("dim(Q_1 + ... + Q_{n}) < {n}"));
    }
    for mask in 1usize..(1 << m) {
        let j = (mask.count_ones() as usize).min(n);
        let parts: Vec<&LatticePolytope> =
            (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| all[i]).collect();
        if sum_dim(&parts) < j {
            let ids: Vec<String> = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| i.to_string()).collect();
            out.push(format!("dim of sum of Q_{{{}}} below {j}", ids.join(",")));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn sys(lines: &[&str], n: usize) -> Vec<SparsePoly> {
        lines.iter().map(|l| parse_poly(l, n).unwrap()).collect()
    }

    #[test]
    fn linear_system() {
        let p = system_profile(&sys(&["1:1,0;1:0,1;-1:0,0", "1:1,0;-1:0,1"], 2)).unwrap();
        assert_eq!(p.mixed_volumes[0], BigInt::from(1));
        assert_eq!(p.root_count_bound, BigInt::from(1));
        assert_eq!(p.b, BigInt::zero());
        assert!(!p.bezout_mode);
    }

    #[test]
    fn univariate_profile() {
        let p = system_profile(&sys(&["1:2;-1:0"], 1)).unwrap();
        assert_eq!(p.root_count_bound, BigInt::from(2));
        assert_eq!(p.b, BigInt::zero());
        // M_1 = MV(Q_0) = 1, #Q_1 = 3
        assert_eq!(p.mixed_volumes, vec![BigInt::from(2), BigInt::from(1)]);
        assert_eq!(p.rho, BigInt::from(3));
        assert_eq!(p.h, BigInt::from(2).pow(2) * 3);
    }

    #[test]
    fn eigen_system_n2() {
        // (a - l) v1 + b v2, b v1 + (c - l) v2, v1^2 + v2^2 - 1 in (v1, v2, l)
        let p = system_profile(&sys(
            &["2:1,0,0;-1:1,0,1;1:0,1,0", "1:1,0,0;3:0,1,0;-1:0,1,1", "1:2,0,0;1:0,2,0;-1:0,0,0"],
            3,
        ))
        .unwrap();
        assert_eq!(p.mixed_volumes[0], BigInt::from(4));
        assert_eq!(p.mixed_volumes[1..], [BigInt::from(4), BigInt::from(4), BigInt::from(2)]);
    }

    #[test]
    fn rejects_non_square() {
        assert!(system_profile(&sys(&["1:1,0;1:0,1"], 2)).is_err());
        assert!(system_profile(&[]).is_err());
    }
}
