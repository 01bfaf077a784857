mod common;

use common::*;
use silting::explore::*;
use silting::perf::{PerfComplex, Session, SiltCandidate};
use silting::silting::{is_silting, Truth, DEFAULT_BUDGET};

fn lambda(sess: &mut Session) -> SiltCandidate {
    let a = sess.alg.clone();
    sess.candidate(&PerfComplex::lambda(&a)).unwrap()
}

#[test]
fn a1_left_mutation_is_the_shift() {
    let mut sess = Session::new(alg(A1));
    let l = lambda(&mut sess);
    let m = mutate(&mut sess, &l, 0, Direction::Left).unwrap();
    assert_eq!(m, sess.shift_candidate(&l, 1).unwrap());
    let g = explore_silt2(&mut sess, &l, 10).unwrap();
    assert_eq!((g.nodes.len(), g.complete), (2, true));
}

#[test]
fn mutation_is_an_involution() {
    for src in [A2, A3, NAKAYAMA3] {
        let mut sess = Session::new(alg(src));
        let l = lambda(&mut sess);
        let g = explore_silt2(&mut sess, &l, 100).unwrap();
        for t in &g.nodes {
            for k in 0..t.len() {
                let left = mutate(&mut sess, t, k, Direction::Left).unwrap();
                let pos = left.ids.iter().position(|i| !t.ids.contains(i)).unwrap();
                assert_eq!(&mutate(&mut sess, &left, pos, Direction::Right).unwrap(), t);
            }
        }
    }
}

#[test]
fn a2_exchange_graph_is_a_pentagon() {
    let mut sess = Session::new(alg(A2));
    let l = lambda(&mut sess);
    let g = explore_silt2(&mut sess, &l, 100).unwrap();
    assert_eq!(g.nodes.len(), 5);
    assert!(g.complete && g.is_cycle());
    // Λ at P1: P1 → P2 is the left approximation, its cone has H⁰ = S1.
    let p1 = l.ids.iter().position(|&i| sess.complex(i).term(0) == [0]).unwrap();
    let m = mutate(&mut sess, &l, p1, Direction::Left).unwrap();
    assert!(g.nodes.contains(&m));
    let dot = g.to_dot(&sess);
    assert_eq!(dot.matches(" -- ").count(), 5);
}

#[test]
fn exchange_graph_counts() {
    // Two-term silting counts: A3 linear 14, A3 with rad² = 0 12.
    for (src, count) in [(A1, 2), (A2, 5), (A3, 14), (NAKAYAMA3, 12)] {
        let mut sess = Session::new(alg(src));
        let l = lambda(&mut sess);
        let g = explore_silt2(&mut sess, &l, 200).unwrap();
        assert!(g.complete);
        assert_eq!(g.nodes.len(), count, "{src}");
        let n = sess.alg.n();
        for (i, t) in g.nodes.iter().enumerate() {
            assert_eq!(t.len(), n);
            assert_eq!(g.degree(i), n);
            assert_eq!(is_silting(&mut sess, t, DEFAULT_BUDGET).unwrap().verdict, Truth::True);
        }
    }
}

#[test]
fn cap_marks_incomplete() {
    let mut sess = Session::new(alg(A3));
    let l = lambda(&mut sess);
    let g = explore_silt2(&mut sess, &l, 4).unwrap();
    assert_eq!(g.nodes.len(), 4);
    assert!(!g.complete && !g.frontier.is_empty());
    let g = explore_silt2(&mut sess, &l, 0).unwrap();
    assert!(g.nodes.is_empty() && !g.complete);
}

#[test]
fn discrete_probe_small_algebras() {
    for (src, window) in [(A1, 2), (A2, 5), (A3, 14)] {
        let mut sess = Session::new(alg(src));
        let p = silting_discrete_probe(&mut sess, 1, 200).unwrap();
        assert!(p.positive);
        assert_eq!(p.window.nodes.len(), window);
        assert!(p.to_text().contains("Bounded probe"));
        assert_eq!(p.to_json()["verdict"], "silting-discrete up to depth 1");
    }
    let mut sess = Session::new(alg(A1));
    let p = silting_discrete_probe(&mut sess, 3, 50).unwrap();
    assert!(p.positive);
    assert_eq!(p.window.nodes.len(), 4);
}

#[test]
fn kronecker_like_probe_hits_the_cap() {
    let mut sess = Session::new(alg(ATILDE2));
    let p = silting_discrete_probe(&mut sess, 1, 12).unwrap();
    assert!(!p.positive);
    assert!(!p.window.complete);
}
