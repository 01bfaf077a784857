mod common;

use common::*;
use silting::complete::*;
use silting::perf::{Session, SiltCandidate};
use silting::silting::*;

/// Every silting object with summands drawn from `pool`.
fn brute_silting(sess: &mut Session, pool: &[usize]) -> Vec<SiltCandidate> {
    let n = sess.alg.n();
    let mut out = Vec::new();
    let mut stack = vec![(0usize, Vec::<usize>::new())];
    while let Some((start, ids)) = stack.pop() {
        if ids.len() == n {
            let x = SiltCandidate::from_ids(ids);
            if is_silting(sess, &x, DEFAULT_BUDGET).unwrap().verdict == Truth::True {
                out.push(x);
            }
            continue;
        }
        for i in start..pool.len() {
            let mut next = ids.clone();
            next.push(pool[i]);
            if is_presilting(sess, &SiltCandidate::from_ids(next.clone())).verdict {
                stack.push((i + 1, next));
            }
        }
    }
    out
}

#[test]
fn hereditary_completion_matches_brute_force() {
    for src in [A2, A3] {
        let mut sess = Session::new(alg(src));
        let pool = shifted_indecomposables(&mut sess, 6, -2, 2);
        let all = brute_silting(&mut sess, &pool);
        assert!(!all.is_empty());
        for &a in &pool {
            let x = SiltCandidate::from_ids(vec![a]);
            let r = hereditary_complete(&mut sess, &x, DEFAULT_BUDGET).unwrap();
            assert_eq!(r.status, Status::Success, "{:?}", r.checks);
            assert!(r.result.contains(&x));
            assert_eq!(r.summands(), sess.alg.n());
            // The completion lies in the window whenever some completion does.
            let inside = r.result.ids.iter().all(|i| pool.contains(i));
            if inside {
                assert!(all.contains(&r.result));
            }
        }
    }
}

#[test]
fn hereditary_completion_of_pairs() {
    let mut sess = Session::new(alg(A3));
    let pool = shifted_indecomposables(&mut sess, 6, 0, 1);
    for &a in &pool {
        for &b in &pool {
            let x = SiltCandidate::from_ids(vec![a, b]);
            if x.len() != 2 || !is_presilting(&mut sess, &x).verdict {
                continue;
            }
            let r = hereditary_complete(&mut sess, &x, DEFAULT_BUDGET).unwrap();
            assert_eq!(r.status, Status::Success, "{:?}", r.checks);
            assert_eq!(is_silting(&mut sess, &r.result, DEFAULT_BUDGET).unwrap().verdict, Truth::True);
        }
    }
}

#[test]
fn bongartz_completes_two_term_presilting() {
    // Oracle: two-term silting objects over A3 number 14.
    let mut sess = Session::new(alg(A3));
    let l = sess.candidate(&silting::perf::PerfComplex::lambda(&sess.alg.clone())).unwrap();
    let pool = shifted_indecomposables(&mut sess, 6, 0, 1);
    let two: Vec<usize> = pool.iter().copied().filter(|&a| is_two_term(&mut sess, &SiltCandidate::from_ids(vec![a])).unwrap()).collect();
    let mut results = std::collections::BTreeSet::new();
    for &a in &two {
        for &b in &two {
            let x = SiltCandidate::from_ids(vec![a, b]);
            if !is_presilting(&mut sess, &x).verdict {
                continue;
            }
            let r = bongartz(&mut sess, &l, &x, DEFAULT_BUDGET).unwrap();
            assert_eq!(r.status, Status::Success, "{:?}", r.checks);
            assert!(r.result.contains(&x));
            results.insert(r.result.ids.clone());
        }
    }
    assert!(results.len() <= 14);
    assert!(results.iter().all(|ids| ids.len() == 3));
}

#[test]
fn postnikov_towers_of_random_objects() {
    let mut sess = Session::new(alg(A3));
    let l = sess.candidate(&silting::perf::PerfComplex::lambda(&sess.alg.clone())).unwrap();
    // Complexes in degrees [0, 3] lie in add Λ * add Λ[−1] * … * add Λ[−3].
    let pool = shifted_indecomposables(&mut sess, 6, -3, -1);
    let l3 = sess.shift_candidate(&l, -3).unwrap();
    let mut r = rng(7);
    for _ in 0..25 {
        let t = random_object(&mut sess, &pool, &mut r);
        assert!(in_coaisle(&sess, &l3, &t));
        let tw = postnikov(&mut sess, &l, &t, 4, DEFAULT_BUDGET).unwrap();
        assert!(tw.finite);
        assert!(tower_in_shifts(&mut sess, &l, &tw).unwrap());
        // The layers recover the Euler characteristic.
        let mut k0 = k0_class(&tw.v_t);
        for s in &tw.stages {
            for (a, b) in k0.iter_mut().zip(k0_class(&s.layer)) {
                *a += b;
            }
        }
        assert_eq!(k0, k0_class(&t));
    }
}

#[test]
fn reports_serialize() {
    let mut sess = Session::new(alg(A2));
    let l = sess.candidate(&silting::perf::PerfComplex::lambda(&sess.alg.clone())).unwrap();
    let s1 = silting::objspec::parse_object(&sess.alg.clone(), "S1", 8).unwrap();
    let x = sess.candidate(&s1).unwrap();
    let r = bongartz(&mut sess, &l, &x, DEFAULT_BUDGET).unwrap();
    let j = r.to_json(&sess);
    assert_eq!(j["status"], "success");
    assert_eq!(j["method"], "bongartz");
    assert!(j["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}
