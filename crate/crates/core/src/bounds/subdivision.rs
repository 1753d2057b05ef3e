//! Bounds on the number of nodes of a subdivision tree isolating all real
//! roots.

use num_bigint::BigInt;

use super::dmm::{check_ndt, pw};
use super::expr::{c, cb, lg, lg_big, Direction, Expr};
use super::report::{BoundName, BoundReport, Quantity};
use crate::error::Result;
use crate::newton::SystemProfile;
use crate::numeric::ceil;

/// Node counts of the pruned tree `T'` and of the full `2^n`-ary tree `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepBound {
    pub pruned_nodes: BigInt,
    pub total_nodes: BigInt,
    /// `lg #T`, rounded up.
    pub report: BoundReport,
}

fn assemble(n: usize, pruned: Expr, cite: &str) -> StepBound {
    let iv = pruned.eval(64);
    let pruned_nodes = ceil(&iv.hi).max(BigInt::from(1));
    let total_nodes = &pruned_nodes << n;
    let report = BoundReport::from_expr(
        BoundName::SubdivisionTotal,
        Direction::Upper,
        Quantity::StepCount,
        &lg_big(&total_nodes),
        cite,
    );
    StepBound { pruned_nodes, total_nodes, report }
}

/// Dense form in `n`, `d`, `tau`.
pub fn subdivision_step_bound(n: i64, d: i64, tau: i64) -> Result<StepBound> {
    check_ndt(n, d, tau)?;
    let nu = n as u32;
    let lgd = lg(d);
    let pruned = c(2) * pw(d, nu) * (c(n * tau) * pw(d, nu - 1))
        + c(8) * (lg(n) + c(n) * lgd.clone()) * pw(d, 2 * nu)
        + c(3 * n) * (c(n) * lgd + c(tau)) * pw(d, 2 * nu - 1);
    Ok(assemble(n as usize, pruned, "subdivision step bound, dense form"))
}

/// Profile form `D + D lg C + 2 D^2 + 3 D lg C + 3 D lg h + 5 n D^2 lg B`.
pub fn subdivision_step_bound_profile(p: &SystemProfile) -> StepBound {
    let dd = cb(&p.root_count_bound);
    let d2 = cb(&(&p.root_count_bound * &p.root_count_bound));
    let lg1 = |v: &BigInt| if *v > BigInt::from(1) { lg_big(v) } else { c(0) };
    let pruned = dd.clone()
        + dd.clone() * lg1(&p.c)
        + c(2) * d2.clone()
        + c(3) * dd.clone() * lg1(&p.c)
        + c(3) * dd * lg1(&p.h)
        + c(5 * p.n as i64) * d2 * lg1(&p.b);
    assemble(p.n, pruned, "subdivision step bound, profile form")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_example() {
        let s = subdivision_step_bound(2, 2, 5).unwrap();
        assert_eq!(s.pruned_nodes, BigInt::from(880));
        assert_eq!(s.total_nodes, BigInt::from(3520));
        assert_eq!(s.report.exponent, 12);
    }

    #[test]
    fn univariate_specialization() {
        // n = 1: 2 d tau + 8 d^2 lg d + 3 (lg d + tau) d
        for (d, tau) in [(2, 1), (4, 3), (8, 10)] {
            let s = subdivision_step_bound(1, d, tau).unwrap();
            let direct = c(2 * d * tau) + c(8 * d * d) * lg(d) + c(3 * d) * (lg(d) + c(tau));
            assert_eq!(s.pruned_nodes, ceil(&direct.eval(64).hi));
            assert_eq!(s.total_nodes, &s.pruned_nodes * 2);
        }
    }
}
