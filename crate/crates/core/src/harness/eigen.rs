//! Polynomial systems for the eigenpairs of an integer matrix.

use num_bigint::BigInt;

use super::sysfile::SystemFile;
use crate::error::{Error, Result};
use crate::poly::SparsePoly;

/// `(A - l I) v = 0` and `|v|^2 = 1` in variables `v_1, ..., v_n, l`.
pub fn eigen_system(a: &[Vec<i64>]) -> Result<SystemFile> {
    let n = a.len();
    if n == 0 || a.iter().any(|r| r.len() != n) {
        return Err(Error::precondition("eigen system needs a square nonempty matrix"));
    }
    let nv = n + 1;
    let unit = |k: usize, e: i32| {
        let mut v = vec![0; nv];
        v[k] = e;
        v
    };
    let mut polys = Vec::with_capacity(nv);
    for (i, row) in a.iter().enumerate() {
        let mut terms: Vec<(BigInt, Vec<i32>)> =
            row.iter().enumerate().map(|(j, &c)| (BigInt::from(c), unit(j, 1))).collect();
        let mut lv = unit(i, 1);
        lv[n] = 1;
        terms.push((BigInt::from(-1), lv));
        polys.push(SparsePoly::from_terms(nv, terms)?);
    }
    let mut norm: Vec<(BigInt, Vec<i32>)> = (0..n).map(|j| (BigInt::from(1), unit(j, 2))).collect();
    norm.push((BigInt::from(-1), vec![0; nv]));
    polys.push(SparsePoly::from_terms(nv, norm)?);
    let mut vars: Vec<String> = (1..=n).map(|j| format!("v{j}")).collect();
    vars.push("l".into());
    Ok(SystemFile { name: Some(format!("eigen_{n}x{n}")), vars, degree: None, bitsize: None, polys })
}
