//! Benchmark fixtures shared by the criterion targets.

use dmm_core::harness::corpus_entry;
use dmm_core::newton::LatticePolytope;
use dmm_core::poly::SparsePoly;
use dmm_core::univar::UPoly;
use num_bigint::BigInt;

/// The two polynomials of a bivariate corpus system.
pub fn corpus_pair(name: &str) -> (SparsePoly, SparsePoly) {
    let s = corpus_entry(name).unwrap_or_else(|| panic!("no corpus system {name}")).system();
    (s.polys[0].clone(), s.polys[1].clone())
}

/// `prod (x - k)` for `k = 1..=d` times `x^2 + 1`, a dense univariate input.
pub fn wilkinson_like(d: i64) -> UPoly<BigInt> {
    let roots: Vec<i64> = (1..=d).collect();
    UPoly::from_roots(&roots).mul(&UPoly::from_ints(&[1, 0, 1]))
}

/// Deterministic pair of univariate polynomials of degree `d` with small
/// coefficients.
pub fn univariate_pair(d: usize) -> (UPoly<BigInt>, UPoly<BigInt>) {
    // leading coefficients 1 and 2 keep both degrees exactly d
    let f: Vec<i64> = (0..d as i64).map(|k| (k * 7 + 3) % 11 - 5).chain([1]).collect();
    let g: Vec<i64> = (0..d as i64).map(|k| (k * 5 + 2) % 13 - 6).chain([2]).collect();
    (UPoly::from_ints(&f), UPoly::from_ints(&g))
}

/// The simplex scaled by `d` in dimension `n`.
pub fn scaled_simplex(n: usize, d: i64) -> LatticePolytope {
    LatticePolytope::unit_simplex(n).unwrap().scaled(d).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_have_the_stated_shape() {
        let (f, g) = univariate_pair(6);
        assert_eq!((f.degree(), g.degree()), (Some(6), Some(6)));
        assert_eq!(wilkinson_like(5).degree(), Some(7));
        assert_eq!(scaled_simplex(3, 2).vertices().len(), 4);
        assert_eq!(corpus_pair("circle_line").0.nvars(), 2);
    }
}
