mod common;

use std::collections::BTreeSet;

use common::*;
use silting::algebra::{min_proj_presentation, projective, simple, Rep};
use silting::explore::explore_silt2;
use silting::perf::{PerfComplex, Session, SiltCandidate};
use silting::tau::*;

fn pair(module: Rep, support: &[usize]) -> SuppTauPair {
    SuppTauPair { module, support: support.iter().copied().collect() }
}

#[test]
fn h0_examples() {
    let a = alg(A2);
    let p1 = projective(&a, 0).unwrap();
    let x = silting::perf::stalk(&p1, 0, 8).unwrap();
    assert!(silting::algebra::iso_modules(&h0(&x).unwrap(), &p1).unwrap());
    let s1 = simple(&a, 0).unwrap();
    let pres = presentation_complex(&min_proj_presentation(&s1)).unwrap();
    assert_eq!(pres.term(-1), [1]);
    assert!(silting::algebra::iso_modules(&h0(&pres).unwrap(), &s1).unwrap());
    let p2sh = PerfComplex::projectives(&a, &[1], -1);
    assert!(h0(&p2sh).unwrap().is_zero());
    let mut sess = Session::new(a.clone());
    let c = sess.candidate(&p2sh).unwrap();
    let p = pair_of(&sess, &c).unwrap();
    assert_eq!(p.support, BTreeSet::from([1]));
}

#[test]
fn support_tau_tilting_examples() {
    let a = alg(A2);
    let p1 = projective(&a, 0).unwrap();
    let p2 = projective(&a, 1).unwrap();
    let s1 = simple(&a, 0).unwrap();
    let s2 = simple(&a, 1).unwrap();
    let lam = lambda_pair(&a).unwrap();
    assert!(is_support_tau_tilting(&lam).unwrap());
    assert!(is_support_tau_tilting(&pair(Rep::zero(&a), &[0, 1])).unwrap());
    let m = Rep::direct_sum(&[&s1, &p1]).unwrap();
    assert!(is_support_tau_tilting(&pair(m.clone(), &[])).unwrap());
    // S2 alone with vertex 1 killed: S2 is nonzero at vertex 2 only.
    assert!(is_support_tau_tilting(&pair(s2.clone(), &[0])).unwrap());
    assert!(!is_support_tau_tilting(&pair(s2.clone(), &[1])).unwrap());
    // S1 ⊕ S2 is not τ-rigid: τS1 = S2.
    let bad = Rep::direct_sum(&[&s1, &s2]).unwrap();
    assert!(!is_support_tau_tilting(&pair(bad, &[])).unwrap());
    // Too few summands.
    assert!(!is_support_tau_tilting(&pair(p2, &[])).unwrap());
    let cat = indecomposables(&a, 6);
    let sigma = presentation_complex(&min_proj_presentation(&m)).unwrap();
    assert!(is_silting_module_fd(&m, &sigma, &cat, 8).unwrap());
    let l = PerfComplex::lambda(&a);
    assert!(is_silting_module_fd(&lam.module, &l, &cat, 8).unwrap());
}

#[test]
fn gen_is_trace() {
    let a = alg(A3);
    let cat = indecomposables(&a, 6);
    let p1 = projective(&a, 0).unwrap();
    for n in &cat {
        // Every module is generated by Λ; P1 generates exactly its quotients.
        let l = lambda_pair(&a).unwrap().module;
        assert!(in_gen(&l, n).unwrap());
        let top_at_1 = n.dims()[0] > 0;
        let quotient = top_at_1 && silting::algebra::hom_dim(&p1, n).unwrap() > 0 && n.total_dim() <= 3;
        if in_gen(&p1, n).unwrap() {
            assert!(quotient);
        }
    }
}

#[test]
fn bijection_small_algebras() {
    // Pairs counted by the brute-force oracle: 2, 5, 14 for A1, A2, A3 and 12
    // for the radical-square-zero Nakayama algebra.
    for (src, count) in [(A1, 2), (A2, 5), (A3, 14), (NAKAYAMA3, 12)] {
        let a = alg(src);
        let cat = indecomposables(&a, 8);
        let mut sess = Session::new(a.clone());
        let l = sess.candidate(&PerfComplex::lambda(&a)).unwrap();
        let g = explore_silt2(&mut sess, &l, 200).unwrap();
        let r = bijection_check(&sess, &g.nodes, &cat).unwrap();
        assert!(r.ok(), "{src}: {r:?}");
        assert_eq!((r.two_term, r.pairs), (count, count));
        let _ = r.to_json(&sess, &g.nodes);
    }
}

#[test]
fn bijection_detects_a_missing_object() {
    let a = alg(A2);
    let cat = indecomposables(&a, 6);
    let mut sess = Session::new(a.clone());
    let l = sess.candidate(&PerfComplex::lambda(&a)).unwrap();
    let g = explore_silt2(&mut sess, &l, 200).unwrap();
    let part: Vec<SiltCandidate> = g.nodes[..4].to_vec();
    let r = bijection_check(&sess, &part, &cat).unwrap();
    assert!(r.injective && !r.onto);
    let dup: Vec<SiltCandidate> = vec![g.nodes[0].clone(), g.nodes[0].clone()];
    assert!(!bijection_check(&sess, &dup, &cat).unwrap().injective);
}
