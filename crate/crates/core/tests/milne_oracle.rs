//! The volume-function isolator against the projection oracle on the
//! bivariate corpus.

use num_bigint::BigInt;

use dmm_core::harness::{bivariate_corpus, corpus_entry, oracle_roots_2d, OracleRoot};
use dmm_core::milne::{build_volume_function, count_in_box, isolate, IsolateOptions, IsolationBox};
use dmm_core::numeric::{int, ratio};
use dmm_core::poly::SparsePoly;

fn pair(name: &str) -> (SparsePoly, SparsePoly) {
    let s = corpus_entry(name).unwrap().system();
    (s.polys[0].clone(), s.polys[1].clone())
}

fn strictly_inside(b: &IsolationBox, r: &OracleRoot) -> bool {
    b.x_lo < r.x.lo && r.x.hi < b.x_hi && b.y_lo < r.y.lo && r.y.hi < b.y_hi
}

fn disjoint(b: &IsolationBox, r: &OracleRoot) -> bool {
    r.x.hi < b.x_lo || b.x_hi < r.x.lo || r.y.hi < b.y_lo || b.y_hi < r.y.lo
}

/// Oracle roots inside `b`, refining until every root is decided.
fn roots_in(b: &IsolationBox, roots: &mut dmm_core::harness::OracleRoots) -> usize {
    let mut w = ratio(1, 1 << 8);
    for _ in 0..60 {
        roots.refine(&w);
        if roots.roots.iter().all(|r| strictly_inside(b, r) || disjoint(b, r)) {
            return roots.roots.iter().filter(|r| strictly_inside(b, r)).count();
        }
        w = w / int(1 << 8);
    }
    panic!("a root stays on the boundary of {b}");
}

#[test]
fn corpus_counts_agree() {
    for e in bivariate_corpus() {
        let (f, g) = pair(e.name);
        let iso = isolate(&f, &g, &IsolateOptions::default()).unwrap();
        let mut oracle = oracle_roots_2d(&f, &g).unwrap();
        assert_eq!(Some(iso.boxes.len()), e.real_roots, "{}", e.name);
        assert_eq!(iso.boxes.len(), oracle.roots.len(), "{}", e.name);
        assert_eq!(iso.initial_box.certified_count as usize, iso.boxes.len(), "{}", e.name);
        assert_eq!(roots_in(&iso.initial_box, &mut oracle), oracle.roots.len(), "{}", e.name);
        for (i, b) in iso.boxes.iter().enumerate() {
            assert_eq!(b.certified_count, 1);
            assert_eq!(roots_in(b, &mut oracle), 1, "{}: {b}", e.name);
            for c in &iso.boxes[i + 1..] {
                assert!(!b.overlaps(c), "{}: {b} meets {c}", e.name);
            }
        }
        assert!(BigInt::from(iso.stats.oracle_calls) <= iso.stats.bound_value, "{}", e.name);
        assert!(iso.stats.max_depth <= iso.stats.depth_cap);
    }
}

#[test]
fn initial_box_count_matches_total() {
    for e in bivariate_corpus() {
        let (f, g) = pair(e.name);
        let iso = isolate(&f, &g, &IsolateOptions::default()).unwrap();
        let vf = build_volume_function(&f, &g).unwrap();
        let (n, _) = count_in_box(&vf, &iso.initial_box).unwrap();
        assert_eq!(n as usize, iso.boxes.len(), "{}", e.name);
    }
}

/// Quadrants of `b` split at points off the dyadic grid.
fn quadrants(b: &IsolationBox) -> Vec<IsolationBox> {
    let mx = &b.x_lo + b.width() * ratio(3989, 7919);
    let my = &b.y_lo + b.height() * ratio(4001, 7907);
    let mut out = Vec::new();
    for (ya, yb) in [(&b.y_lo, &my), (&my, &b.y_hi)] {
        for (xa, xb) in [(&b.x_lo, &mx), (&mx, &b.x_hi)] {
            out.push(IsolationBox::new(xa.clone(), xb.clone(), ya.clone(), yb.clone()).unwrap());
        }
    }
    out
}

#[test]
fn certified_boxes_stay_certified() {
    for e in bivariate_corpus() {
        let (f, g) = pair(e.name);
        let vf = build_volume_function(&f, &g).unwrap();
        let iso = isolate(&f, &g, &IsolateOptions::default()).unwrap();
        for b in &iso.boxes {
            let mut cur = b.clone();
            for level in 0..2 {
                let mut hit = None;
                let mut total = 0;
                for q in quadrants(&cur) {
                    let (n, moved) = count_in_box(&vf, &q).unwrap();
                    assert_eq!(moved.x_lo, q.x_lo, "{}: nudge at level {level}", e.name);
                    assert_eq!(moved.y_hi, q.y_hi);
                    total += n;
                    if n == 1 {
                        hit = Some(q);
                    }
                }
                assert_eq!(total, 1, "{}: refining {cur}", e.name);
                cur = hit.unwrap();
            }
        }
    }
}

#[test]
fn root_on_a_vertex_is_nudged_inside() {
    let (f, g) = pair("unit_point");
    let vf = build_volume_function(&f, &g).unwrap();
    let b = IsolationBox::new(int(1), int(2), int(1), int(2)).unwrap();
    let (n, moved) = count_in_box(&vf, &b).unwrap();
    assert_eq!(n, 1);
    assert!(moved.x_lo < int(1) && moved.y_lo < int(1));
    assert!(moved.contains(&int(1), &int(1)));
    let mut oracle = oracle_roots_2d(&f, &g).unwrap();
    assert_eq!(roots_in(&moved, &mut oracle), 1);
}

#[test]
fn root_on_an_edge_is_counted_for_the_reported_box() {
    let (f, g) = pair("unit_point");
    let vf = build_volume_function(&f, &g).unwrap();
    for b in [
        IsolationBox::new(int(0), int(2), int(1), int(3)).unwrap(),
        IsolationBox::new(int(-1), int(1), int(0), int(2)).unwrap(),
    ] {
        let (n, moved) = count_in_box(&vf, &b).unwrap();
        let mut oracle = oracle_roots_2d(&f, &g).unwrap();
        assert_eq!(n as usize, roots_in(&moved, &mut oracle), "{b} became {moved}");
    }
}

/// After removing `u^k`, each root of the eliminant in `u` comes from a
/// complex common root, so its degree sits between the real root count
/// and the Bezout number.
#[test]
fn eliminant_degree_brackets_the_root_count() {
    for e in bivariate_corpus() {
        let (f, g) = pair(e.name);
        let vf = build_volume_function(&f, &g).unwrap();
        let bezout = f.measures().total_degree.unwrap() * g.measures().total_degree.unwrap();
        let deg = vf.milne_h.degree_in(2).unwrap();
        assert!(e.real_roots.unwrap() as i64 <= deg as i64, "{}", e.name);
        assert!(deg as i64 <= bezout as i64, "{}", e.name);
    }
}
