//! Small exact linear algebra over Z and Q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numeric::Rational;

/// Reduced row echelon form; returns the pivot columns.
fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for j in c..cols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let v = &m[r][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn to_rational(rows: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
        .collect()
}

pub fn rank(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    rref(&mut to_rational(rows)).len()
}

/// Integer basis of `{ c : rows * c = 0 }`, each vector primitive.
pub fn nullspace(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<i64>> {
    let mut m = to_rational(rows);
    let pivots = if m.is_empty() { Vec::new() } else { rref(&mut m) };
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::from_integer(BigInt::from(1));
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        let l = v.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        out.push(ints.iter().map(|x| (x / &g).to_i64().expect("small lattice vector")).collect());
    }
    out
}

/// Bareiss determinant over i128 with overflow detection.
pub fn det_i128(mut m: Vec<Vec<i128>>) -> Result<i128> {
    let n = m.len();
    if n == 0 {
        return Ok(1);
    }
    let ovf = || Error::Overflow("lattice determinant");
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].checked_mul(m[k][k]).ok_or_else(ovf)?;
                let b = m[i][k].checked_mul(m[k][j]).ok_or_else(ovf)?;
                m[i][j] = a.checked_sub(b).ok_or_else(ovf)? / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Ok(sign * m[n - 1][n - 1])
}

/// Normal vector orthogonal to `k - 1` vectors in dimension `k` (cofactor
/// expansion of the generalized cross product).
pub fn cofactor_normal(rows: &[Vec<i128>]) -> Result<Vec<i128>> {
    let k = rows.len() + 1;
    let mut out = Vec::with_capacity(k);
    for j in 0..k {
        let minor: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
            .collect();
        let d = det_i128(minor)?;
        out.push(if j % 2 == 0 { d } else { -d });
    }
    Ok(out)
}

pub fn dot(a: &[i128], b: &[i128]) -> Result<i128> {
    let mut acc: i128 = 0;
    for (x, y) in a.iter().zip(b) {
        acc = x
            .checked_mul(*y)
            .and_then(|p| acc.checked_add(p))
            .ok_or(Error::Overflow("lattice dot product"))?;
    }
    Ok(acc)
}

pub fn gcd_vec(v: &[i128]) -> i128 {
    v.iter().fold(0i128, |g, &x| g.gcd(&x.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nullspace() {
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank(&rows), 2);
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        for r in &rows {
            assert_eq!(r.iter().zip(&ns[0]).map(|(a, b)| a * b).sum::<i64>(), 0);
        }
    }

    #[test]
    fn determinants() {
        assert_eq!(det_i128(vec![vec![2, 1], vec![1, 3]]).unwrap(), 5);
        assert_eq!(det_i128(vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]).unwrap(), -1);
        let n = cofactor_normal(&[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        assert_eq!(dot(&n, &[1, 0, 0]).unwrap(), 0);
        assert_eq!(dot(&n, &[0, 1, 0]).unwrap(), 0);
        assert_ne!(n[2], 0);
    }
}
