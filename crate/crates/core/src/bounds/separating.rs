//! Candidate separating linear forms `x_1 + i x_2 + ... + i^{n-1} x_n`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::numeric::Rational;

/// The forms for `i = 0..=B`, `B = (n - 1) binom(D, 2)`; one of them takes
/// distinct values on any `D` distinct points.
#[derive(Clone, Debug)]
pub struct SeparatingForms {
    n: usize,
    next: BigInt,
    last: BigInt,
}

impl SeparatingForms {
    pub fn b(&self) -> &BigInt {
        &self.last
    }
}

impl Iterator for SeparatingForms {
    type Item = Vec<BigInt>;

    fn next(&mut self) -> Option<Vec<BigInt>> {
        if self.next > self.last {
            return None;
        }
        let mut coeffs = Vec::with_capacity(self.n);
        let mut p = BigInt::one();
        for _ in 0..self.n {
            coeffs.push(p.clone());
            p *= &self.next;
        }
        self.next += 1;
        Some(coeffs)
    }
}

pub fn separating_form_family(n: usize, d: &BigInt) -> SeparatingForms {
    let b: BigInt = BigInt::from(n.saturating_sub(1)) * d * (d - 1u32) / 2u32;
    SeparatingForms { n, next: BigInt::zero(), last: b.max(BigInt::zero()) }
}

/// `||form||_inf <= max(1, B^{n-1})`; the leading coefficient is always 1.
pub fn form_norm_within(form: &[BigInt], b: &BigInt) -> bool {
    let cap = num_traits::pow(b.clone(), form.len().saturating_sub(1)).max(BigInt::one());
    form.iter().all(|c| c <= &cap)
}

fn apply(form: &[BigInt], p: &[Rational]) -> Rational {
    form.iter().zip(p).map(|(c, x)| Rational::from_integer(c.clone()) * x).sum()
}

/// First form of the family injective on `points`.
pub fn first_injective(points: &[Vec<Rational>]) -> Option<Vec<BigInt>> {
    let n = points.first().map_or(1, Vec::len);
    let d = BigInt::from(points.len());
    separating_form_family(n, &d).find(|f| {
        let mut vals: Vec<Rational> = points.iter().map(|p| apply(f, p)).collect();
        vals.sort();
        vals.windows(2).all(|w| w[0] != w[1])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::int;

    #[test]
    fn family_sizes() {
        let f: Vec<_> = separating_form_family(2, &BigInt::from(3)).collect();
        assert_eq!(f.len(), 4);
        assert_eq!(f[3], vec![BigInt::from(1), BigInt::from(3)]);
        let g: Vec<_> = separating_form_family(1, &BigInt::from(5)).collect();
        assert_eq!(g, vec![vec![BigInt::from(1)]]);
        let fam = separating_form_family(3, &BigInt::from(3));
        let b = fam.b().clone();
        assert!(fam.clone().all(|f| form_norm_within(&f, &b)));
    }

    #[test]
    fn injective_on_points() {
        // x + i y collides for i = 0 (same x) and i = 1 (same x + y)
        let pts = vec![vec![int(1), int(2)], vec![int(1), int(5)], vec![int(2), int(4)]];
        let f = first_injective(&pts).unwrap();
        assert_eq!(f, vec![BigInt::from(1), BigInt::from(2)]);
    }
}
