mod common;

use std::collections::BTreeMap;

use common::*;
use rand::Rng;
use silting::algebra::{iso_modules, parse_algebra, projective, simple, Elem, PathMatrix};
use silting::exactla::Field;
use silting::perf::*;
use silting::Error;

#[test]
fn stalk_examples() {
    let a2 = alg(A2);
    let p1 = stalk(&projective(&a2, 0).unwrap(), 0, 8).unwrap();
    assert_eq!(p1.range(), Some((0, 0)));
    assert_eq!(p1.term(0), &[0]);
    let s1 = stalk(&simple(&a2, 0).unwrap(), 0, 8).unwrap();
    assert_eq!(s1.range(), Some((-1, 0)));
    assert_eq!((s1.term(-1), s1.term(0)), (&[1][..], &[0][..]));
    let at = alg(ATILDE2);
    let x = stalk(&simple(&at, 1).unwrap(), 2, 8).unwrap();
    assert_eq!(x.range(), Some((-3, -2)));
    let h = cohomology(&x).unwrap();
    assert_eq!(h.len(), 1);
    assert_eq!(h[0].0, -2);
    assert!(iso_modules(&h[0].1, &simple(&at, 1).unwrap()).unwrap());
}

#[test]
fn stalk_respects_pd_cap() {
    let n = alg(NAKAYAMA3);
    let s1 = simple(&n, 0).unwrap();
    assert_eq!(stalk(&s1, 0, 1).unwrap_err(), Error::PdCap(1));
    assert_eq!(stalk(&s1, 0, 2).unwrap().range(), Some((-2, 0)));
}

#[test]
fn hom_perf_examples() {
    for (src, dim) in [(A2, 3), (ATILDE2, 7), (NAKAYAMA3, 5)] {
        let a = alg(src);
        let l = PerfComplex::lambda(&a);
        assert_eq!(hom_perf(&l, &l, 0), dim);
        assert_eq!(hom_perf(&l, &l, 1), 0);
    }
    let a2 = alg(A2);
    let s1 = stalk(&simple(&a2, 0).unwrap(), 0, 8).unwrap();
    assert_eq!(hom_perf(&s1, &s1, 1), 0);
    assert_eq!(hom_perf(&s1, &s1, 0), 1);
    // Ext¹(S1, S2) = 1 and Ext¹(S1, P2) = 1.
    let s2 = stalk(&simple(&a2, 1).unwrap(), 0, 8).unwrap();
    assert_eq!(hom_perf(&s1, &s2, 1), 1);
    assert_eq!(hom_perf(&s1, &PerfComplex::lambda(&a2), 1), 1);
}

#[test]
fn hom_basis_elements_are_chain_maps() {
    let a = alg(ATILDE2);
    let mut sess = Session::new(a.clone());
    let pool = shifted_indecomposables(&mut sess, 2, -1, 1);
    for &x in &pool[..12] {
        for &y in &pool[..12] {
            for s in -2..=2 {
                let (cx, cy) = (sess.complex(x).clone(), sess.complex(y).clone());
                let b = hom_basis(&cx, &cy, s);
                assert_eq!(b.len(), hom_perf(&cx, &cy, s));
                for f in b {
                    assert!(ChainMap::new(f.source.clone(), f.target.clone(), f.comps.clone()).is_ok());
                    assert!(!is_null_homotopic(&f) || s != 0);
                }
            }
        }
    }
}

fn arrow_map_a2() -> (PerfComplex, PerfComplex, ChainMap) {
    let a2 = alg(A2);
    let p2 = PerfComplex::projectives(&a2, &[1], 0);
    let p1 = PerfComplex::projectives(&a2, &[0], 0);
    let mut m = PathMatrix::zero(vec![0], vec![1]);
    m.set(0, 0, Elem::path(a2.parse_path("a").unwrap().unwrap(), a2.field.one()));
    let f = ChainMap::new(p2.clone(), p1.clone(), BTreeMap::from([(0, m)])).unwrap();
    (p2, p1, f)
}

#[test]
fn cone_examples() {
    let a2 = alg(A2);
    let mut sess = Session::new(a2.clone());
    let (_, _, f) = arrow_map_a2();
    let c = minimalize(&cone(&f).cone).complex;
    let s1 = stalk(&simple(&a2, 0).unwrap(), 0, 8).unwrap();
    assert!(iso_minimal(&c, &s1).unwrap());

    let x = s1.clone();
    let id = cone(&x.identity()).cone;
    assert!(!id.is_zero());
    assert!(minimalize(&id).complex.is_zero());

    let y = PerfComplex::lambda(&a2);
    let z = cone(&ChainMap::zero(&x, &y)).cone;
    let expect = PerfComplex::direct_sum(&[&x.shift(1), &y]).unwrap();
    assert_eq!(sess.candidate(&z).unwrap(), sess.candidate(&expect).unwrap());
}

#[test]
fn triangle_maps_are_chain_maps_and_compose_to_zero() {
    let (_, _, f) = arrow_map_a2();
    let t = cone(&f);
    for g in [&t.i, &t.p] {
        assert!(ChainMap::new(g.source.clone(), g.target.clone(), g.comps.clone()).is_ok());
    }
    assert!(is_null_homotopic(&t.i.compose(&f)));
    assert!(is_null_homotopic(&t.p.compose(&t.i)));
}

#[test]
fn cone_long_exact_sequence_bookkeeping() {
    let a = alg(A3);
    let mut sess = Session::new(a.clone());
    let pool = shifted_indecomposables(&mut sess, 3, -1, 1);
    let mut r = rng(7);
    for _ in 0..25 {
        let x = random_object(&mut sess, &pool, &mut r);
        let y = random_object(&mut sess, &pool, &mut r);
        let w = random_object(&mut sess, &pool, &mut r);
        let f = random_map(&x, &y, &mut r);
        let c = cone(&f).cone;
        let mut total: i64 = 0;
        for s in -8..=8 {
            let sign = if s % 2 == 0 { 1 } else { -1 };
            total += sign
                * (hom_perf(&w, &x, s) as i64 - hom_perf(&w, &y, s) as i64 + hom_perf(&w, &c, s) as i64);
        }
        assert_eq!(total, 0);
    }
}

#[test]
fn minimalize_is_a_homotopy_equivalence() {
    let a = alg(ATILDE2);
    let mut sess = Session::new(a.clone());
    let pool = shifted_indecomposables(&mut sess, 2, -1, 1);
    let mut r = rng(11);
    for _ in 0..20 {
        let x = random_object(&mut sess, &pool, &mut r);
        let junk = cone(&sess.complex(pool[r.gen_range(0..pool.len())]).identity()).cone;
        let big = PerfComplex::direct_sum(&[&x, &junk]).unwrap();
        let m = minimalize(&big);
        assert!(is_minimal(&m.complex));
        assert!(iso_minimal(&m.complex, &minimalize(&x).complex).unwrap());
        for g in [&m.to, &m.from] {
            assert!(ChainMap::new(g.source.clone(), g.target.clone(), g.comps.clone()).is_ok());
        }
        let back = m.from.compose(&m.to);
        let diff = back.add(&big.identity().scale(&a.field.one().neg())).unwrap();
        assert!(is_null_homotopic(&diff));
        let round = m.to.compose(&m.from);
        assert!(round.is_iso_of_complexes());
        let again = minimalize(&m.complex);
        assert_eq!(again.complex, m.complex);
        for &p in &pool[..6] {
            let pc = sess.complex(p).clone();
            for s in -3..=3 {
                assert_eq!(hom_perf(&big, &pc, s), hom_perf(&m.complex, &pc, s));
                assert_eq!(hom_perf(&pc, &big, s), hom_perf(&pc, &m.complex, s));
            }
        }
    }
}

#[test]
fn cohomology_examples() {
    let a2 = alg(A2);
    let s1m = simple(&a2, 0).unwrap();
    let s1 = stalk(&s1m, 0, 8).unwrap();
    let h = cohomology(&s1).unwrap();
    assert_eq!(h.len(), 1);
    assert_eq!(h[0].0, 0);
    assert!(iso_modules(&h[0].1, &s1m).unwrap());
    let two = PerfComplex::direct_sum(&[&PerfComplex::projectives(&a2, &[1], -1), &PerfComplex::projectives(&a2, &[0], 0)])
        .unwrap();
    let h = cohomology(&two).unwrap();
    assert_eq!(h.iter().map(|x| x.0).collect::<Vec<_>>(), vec![-1, 0]);
    assert!(iso_modules(&h[0].1, &projective(&a2, 1).unwrap()).unwrap());
    assert!(iso_modules(&h[1].1, &projective(&a2, 0).unwrap()).unwrap());
}

#[test]
fn dsum_examples() {
    let a2 = alg(A2);
    let mut sess = Session::new(a2.clone());
    let s1m = simple(&a2, 0).unwrap();
    let p2m = projective(&a2, 1).unwrap();
    let x = PerfComplex::direct_sum(&[&stalk(&s1m, 0, 8).unwrap(), &stalk(&p2m, 3, 8).unwrap()]).unwrap();
    let d = sess.dsum_of(&x).unwrap();
    let s1 = sess.module_id(&s1m).unwrap();
    let p2 = sess.module_id(&p2m).unwrap();
    let mut expect = vec![(s1, 0), (p2, 3)];
    expect.sort();
    assert_eq!(d.0, expect);

    // The cone of a nonzero S1 -> S2[1] is P1[1].
    let s1c = stalk(&s1m, 0, 8).unwrap();
    let s2c1 = stalk(&simple(&a2, 1).unwrap(), 1, 8).unwrap();
    let f = hom_basis(&s1c, &s2c1, 0).pop().unwrap();
    let d = sess.dsum_of(&cone(&f).cone).unwrap();
    let p1 = sess.module_id(&projective(&a2, 0).unwrap()).unwrap();
    assert_eq!(d.0, vec![(p1, 1)]);

    let at = alg(ATILDE2);
    let mut sess = Session::new(at.clone());
    let d = sess.dsum_of(&PerfComplex::lambda(&at)).unwrap();
    let mut expect: Vec<(usize, i32)> =
        (0..3).map(|i| (sess.module_id(&projective(&at, i).unwrap()).unwrap(), 0)).collect();
    expect.sort();
    assert_eq!(d.0, expect);

    let mut sess = Session::new(alg(NAKAYAMA3));
    let l = PerfComplex::lambda(&sess.alg.clone());
    assert!(matches!(sess.dsum_of(&l), Err(Error::NotHereditary(_))));
}

#[test]
fn hom_dsum_examples_and_oracle() {
    let a = alg(A3);
    let mut sess = Session::new(a.clone());
    let mods = indecomposables(&a, 4);
    let ids: Vec<usize> = mods.iter().map(|m| sess.module_id(m).unwrap()).collect();
    for (i, m) in mods.iter().enumerate() {
        for (j, n) in mods.iter().enumerate() {
            let (x, y) = (DSum(vec![(ids[i], 0)]), DSum(vec![(ids[j], 0)]));
            assert_eq!(sess.hom_dsum(&x, &y, 0).unwrap(), silting::algebra::hom_dim(m, n).unwrap());
            assert_eq!(sess.hom_dsum(&x, &y, 2).unwrap(), 0);
        }
    }
    let pool = shifted_indecomposables(&mut sess, 4, -1, 1);
    let mut r = rng(3);
    for _ in 0..50 {
        let x = random_object(&mut sess, &pool, &mut r);
        let y = random_object(&mut sess, &pool, &mut r);
        let (dx, dy) = (sess.dsum_of(&x).unwrap(), sess.dsum_of(&y).unwrap());
        for s in -4..=4 {
            assert_eq!(hom_perf(&x, &y, s), sess.hom_dsum(&dx, &dy, s).unwrap());
        }
    }
}

#[test]
fn hereditary_objects_split_into_shifted_cohomology() {
    let a = alg(ATILDE2);
    let mut sess = Session::new(a.clone());
    let pool = shifted_indecomposables(&mut sess, 2, -1, 1);
    let mut r = rng(5);
    for _ in 0..20 {
        let x = random_object(&mut sess, &pool, &mut r);
        let d = sess.dsum_of(&x).unwrap();
        let y = sess.dsum_complex(&d).unwrap();
        assert_eq!(sess.summands(&x).unwrap(), sess.summands(&y).unwrap());
    }
}

#[test]
fn shift_equivariance() {
    let a = alg(A3);
    let mut sess = Session::new(a.clone());
    let pool = shifted_indecomposables(&mut sess, 3, 0, 0);
    for &x in &pool {
        for &y in &pool {
            let (cx, cy) = (sess.complex(x).clone(), sess.complex(y).clone());
            for s in -2..=2 {
                let h = hom_perf(&cx, &cy, s);
                assert_eq!(h, hom_perf(&cx.shift(3), &cy.shift(3), s));
                assert_eq!(h, hom_perf(&cx, &cy.shift(s), 0));
            }
        }
    }
}

#[test]
fn json_round_trip() {
    let a = alg(ATILDE2);
    let mut sess = Session::new(a.clone());
    let pool = shifted_indecomposables(&mut sess, 2, -1, 1);
    let mut r = rng(9);
    for _ in 0..10 {
        let x = random_object(&mut sess, &pool, &mut r);
        let j = x.to_json();
        assert_eq!(PerfComplex::from_json(&a, &j).unwrap(), x);
    }
    let z = PerfComplex::zero(&a);
    assert_eq!(PerfComplex::from_json(&a, &z.to_json()).unwrap(), z);
}

#[test]
fn constructors_validate() {
    let a = parse_algebra(A3, Field::Rationals).unwrap();
    let arrow = |n: &str| Elem::path(a.parse_path(n).unwrap().unwrap(), a.field.one());
    let mut d0 = PathMatrix::zero(vec![1], vec![2]);
    d0.set(0, 0, arrow("b"));
    let mut d1 = PathMatrix::zero(vec![0], vec![1]);
    d1.set(0, 0, arrow("a"));
    let err = PerfComplex::new(a.clone(), -2, vec![vec![2], vec![1], vec![0]], vec![d0.clone(), d1]).unwrap_err();
    assert_eq!(err, Error::NotComplex(-2));
    let x = PerfComplex::new(a.clone(), -1, vec![vec![2], vec![1]], vec![d0]).unwrap();
    let p = PerfComplex::projectives(&a, &[1], 0);
    let mut bad = PathMatrix::zero(vec![1], vec![1]);
    bad.set(0, 0, Elem::path(a.trivial(1), a.field.one()));
    // Identity on degree 0 is not a chain map x -> p because d_x is nonzero into it.
    assert!(ChainMap::new(x.clone(), p.clone(), BTreeMap::from([(0, bad)])).is_err());
}
