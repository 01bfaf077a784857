#![allow(dead_code)]

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use silting::algebra::{knitted_indecomposables, parse_algebra, PathAlgebra, Rep};
use silting::exactla::Field;
use silting::perf::{cone, hom_basis, ChainMap, PerfComplex, Session};

pub const A1: &str = "vertices 1\n";
pub const A2: &str = "vertices 1 2\narrow a: 1 -> 2\n";
pub const A3: &str = "vertices 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n";
pub const ATILDE2: &str = "vertices 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 1 -> 3\n";
pub const NAKAYAMA3: &str = "vertices 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrelation b*a\n";

pub fn alg(src: &str) -> Arc<PathAlgebra> {
    parse_algebra(src, Field::Rationals).unwrap()
}

pub fn indecomposables(a: &Arc<PathAlgebra>, depth: usize) -> Vec<Rep> {
    knitted_indecomposables(a, depth).unwrap().into_iter().map(|(r, _)| r).collect()
}

/// Catalog ids of every `M[s]`, `M` indecomposable, `s` in the window.
pub fn shifted_indecomposables(sess: &mut Session, depth: usize, lo: i32, hi: i32) -> Vec<usize> {
    let mods = indecomposables(&sess.alg.clone(), depth);
    let mut out = Vec::new();
    for m in &mods {
        let id = sess.module_id(m).unwrap();
        for s in lo..=hi {
            out.push(sess.stalk_id(id, s).unwrap());
        }
    }
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random chain map `x → y` from a hom basis (zero when the basis is empty).
pub fn random_map(x: &PerfComplex, y: &PerfComplex, r: &mut ChaCha8Rng) -> ChainMap {
    let basis = hom_basis(x, y, 0);
    let f = x.alg.field;
    let mut acc = ChainMap::zero(x, y);
    for b in basis {
        let c = f.from_i64(r.gen_range(-3..=3));
        acc = acc.add(&b.scale(&c)).unwrap();
    }
    acc
}

/// Random objects: sums of shifted stalks, sometimes twisted by a cone.
pub fn random_object(sess: &mut Session, pool: &[usize], r: &mut ChaCha8Rng) -> PerfComplex {
    let k = r.gen_range(1..=3);
    let parts: Vec<PerfComplex> = (0..k).map(|_| sess.complex(pool[r.gen_range(0..pool.len())]).clone()).collect();
    let refs: Vec<&PerfComplex> = parts.iter().collect();
    let x = PerfComplex::direct_sum(&refs).unwrap();
    if r.gen_bool(0.5) {
        let y = sess.complex(pool[r.gen_range(0..pool.len())]).clone();
        let f = random_map(&y.shift(-1), &x, r);
        return cone(&f).cone;
    }
    x
}
