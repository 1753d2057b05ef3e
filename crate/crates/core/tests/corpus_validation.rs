//! Every bound against oracle-measured roots of the shipped corpus.

use dmm_core::bounds::{eigen_bounds, positive_min_bounds, BoundName, Direction};
use dmm_core::error::Error;
use dmm_core::harness::{bivariate_corpus, corpus_entry, eigen_system, oracle_roots_2d, validate_bounds};
use dmm_core::milne::{isolate, IsolateOptions};
use dmm_core::newton::system_profile;
use dmm_core::numeric::{int, ratio};
use num_bigint::BigInt;

#[test]
fn bivariate_corpus_satisfies_every_bound() {
    for e in bivariate_corpus() {
        let r = validate_bounds(&e.system()).unwrap();
        assert_eq!(Some(r.real_roots), e.real_roots, "{}", e.name);
        assert_eq!(Some(r.torus_roots), e.torus_roots, "{}", e.name);
        assert!(r.passed(), "{r}");
        if r.torus_roots >= 2 {
            assert!(r.rows.iter().any(|x| x.quantity == "separation"), "{}", e.name);
        }
    }
}

#[test]
fn gradient_system_is_rejected_and_its_minimum_is_bounded() {
    let s = corpus_entry("posgrad_d2").unwrap().system();
    let (f, g) = (&s.polys[0], &s.polys[1]);
    assert!(matches!(oracle_roots_2d(f, g), Err(Error::PositiveDimensional(_))));
    assert!(matches!(isolate(f, g, &IsolateOptions::default()), Err(Error::PositiveDimensional(_))));
    assert!(matches!(validate_bounds(&s), Err(Error::PositiveDimensional(_))));
    // (x + 2y - 3)^2 + (x + 2y - 4)^2 = 2 x^2 + 8 x y + 8 y^2 - 14 x - 28 y + 25
    // has global minimum 1/2 at x + 2y = 7/2, below its minimum on the simplex
    let tau = 1 + 28u64.ilog2() as i64 + 1;
    for b in positive_min_bounds(2, 2, tau).unwrap() {
        assert_eq!(b.direction, Direction::Lower);
        assert!(int(-1) >= b.log2_value, "{}", b.name);
    }
}

#[test]
fn eigenpairs_satisfy_eigen_bounds() {
    // [[2, 1], [1, 2]]: eigenvalues 1 and 3, eigenvector entries +-1/sqrt 2
    let bounds = eigen_bounds(2, 2).unwrap();
    let smallest_lg = ratio(-1, 2);
    // closest eigenpairs are (1, v) and (1, -v) with |2 v| = 2
    let sep_lg = int(1);
    for b in &bounds {
        let measured = match b.name {
            BoundName::EigenSeparation => &sep_lg,
            _ => &smallest_lg,
        };
        assert!(*measured >= b.log2_value, "{}", b.name);
    }
    // the shipped file and the generated system have the same profile
    let file = corpus_entry("eigen_2x2").unwrap().system();
    let generated = eigen_system(&[vec![2, 1], vec![1, 2]]).unwrap();
    let (a, b) = (system_profile(&file.polys).unwrap(), system_profile(&generated.polys).unwrap());
    assert_eq!(a.mixed_volumes, b.mixed_volumes);
    assert_eq!(a.root_count_bound, BigInt::from(4));
}
