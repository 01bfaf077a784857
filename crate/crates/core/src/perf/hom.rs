//! Morphisms in the homotopy category via the Hom complex.
//!
//! `Hom^k(X, Y) = Π_n Hom(X^n, Y^{n+k})` with `D(f) = d_Y f − (−1)^k f d_X`.
//! A degree-`s` cocycle has the same components as a chain map `X → Y[s]`, and
//! `Hom_K(X, Y[s]) = H^s(Hom(X, Y))`.

use std::collections::BTreeMap;

use super::complex::{ChainMap, PerfComplex};
use crate::algebra::{Elem, PathMatrix};
use crate::exactla::{Mat, Scalar};

/// Coordinates of `Hom^k(X, Y)`: one block per `(n, r, c)` holding the paths
/// `Y^{n+k}[r] → X^n[c]`.
struct Coords {
    k: i32,
    /// `(n, offset of the (n, 0, 0) block)`; blocks within a degree are row-major.
    starts: BTreeMap<i32, Vec<usize>>,
    dim: usize,
}

impl Coords {
    fn new(x: &PerfComplex, y: &PerfComplex, k: i32) -> Coords {
        let alg = &x.alg;
        let mut starts = BTreeMap::new();
        let mut dim = 0;
        for n in x.degrees() {
            let (src, tgt) = (x.term(n), y.term(n + k));
            if tgt.is_empty() {
                continue;
            }
            let mut offs = Vec::with_capacity(src.len() * tgt.len());
            for &rv in tgt {
                for &cv in src {
                    offs.push(dim);
                    dim += alg.paths_between(rv, cv).len();
                }
            }
            starts.insert(n, offs);
        }
        Coords { k, starts, dim }
    }

    fn offset(&self, x: &PerfComplex, n: i32, r: usize, c: usize) -> Option<usize> {
        self.starts.get(&n).map(|o| o[r * x.term(n).len() + c])
    }
}

fn hom_window(x: &PerfComplex, y: &PerfComplex) -> Option<(i32, i32)> {
    let ((xl, xh), (yl, yh)) = (x.range()?, y.range()?);
    Some((yl - xh, yh - xl))
}

/// The matrix of `D : Hom^k → Hom^{k+1}`.
fn differential(x: &PerfComplex, y: &PerfComplex, from: &Coords, to: &Coords) -> Mat {
    let alg = &x.alg;
    let k = from.k;
    let mut m = Mat::zeros(alg.field, to.dim, from.dim);
    let minus = if k.rem_euclid(2) == 0 { alg.field.one().neg() } else { alg.field.one() };
    for (&n, offs) in &from.starts {
        let (src, tgt) = (x.term(n), y.term(n + k));
        let dy = y.d_ref(n + k);
        let dx = x.d_ref(n - 1);
        for (r, &rv) in tgt.iter().enumerate() {
            for (c, &cv) in src.iter().enumerate() {
                let base = offs[r * src.len() + c];
                for (i, &p) in alg.paths_between(rv, cv).iter().enumerate() {
                    let col = base + i;
                    // d_Y ∘ f lands at (n, r', c).
                    if let Some(dy) = dy {
                        for r2 in 0..dy.rows.len() {
                            for (q, a) in &dy.get(r2, r).0 {
                                if let Some(t) = alg.mul(*q, p) {
                                    let row = to.offset(x, n, r2, c).unwrap() + alg.pos_in_pair(t);
                                    m.add_at(row, col, a);
                                }
                            }
                        }
                    }
                    // −(−1)^k f ∘ d_X lands at (n−1, r, c').
                    if let Some(dx) = dx {
                        for c2 in 0..dx.cols.len() {
                            for (q, a) in &dx.get(c, c2).0 {
                                if let Some(t) = alg.mul(p, *q) {
                                    let row = to.offset(x, n - 1, r, c2).unwrap() + alg.pos_in_pair(t);
                                    m.add_at(row, col, &a.mul(&minus));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    m
}

/// `dim Hom_K(X, Y[s])`.
pub fn hom_dim(x: &PerfComplex, y: &PerfComplex, s: i32) -> usize {
    match hom_window(x, y) {
        Some((a, b)) if a <= s && s <= b => {}
        _ => return 0,
    }
    let (prev, cur, next) = (Coords::new(x, y, s - 1), Coords::new(x, y, s), Coords::new(x, y, s + 1));
    if cur.dim == 0 {
        return 0;
    }
    let out = differential(x, y, &cur, &next).rank();
    let inc = differential(x, y, &prev, &cur).rank();
    cur.dim - out - inc
}

fn vector_to_map(x: &PerfComplex, y: &PerfComplex, co: &Coords, v: &[Scalar]) -> ChainMap {
    let alg = &x.alg;
    let ys = y.shift(co.k);
    let mut comps = BTreeMap::new();
    for (&n, offs) in &co.starts {
        let (src, tgt) = (x.term(n), y.term(n + co.k));
        let mut m = PathMatrix::zero(tgt.to_vec(), src.to_vec());
        for (r, &rv) in tgt.iter().enumerate() {
            for (c, &cv) in src.iter().enumerate() {
                let base = offs[r * src.len() + c];
                let mut e = Elem::zero();
                for (i, &p) in alg.paths_between(rv, cv).iter().enumerate() {
                    e = e.add(&Elem::path(p, v[base + i].clone()));
                }
                m.set(r, c, e);
            }
        }
        if !m.is_zero() {
            comps.insert(n, m);
        }
    }
    ChainMap { source: x.clone(), target: ys, comps }
}

fn map_to_vector(f: &ChainMap, co: &Coords) -> Vec<Scalar> {
    let x = &f.source;
    let alg = &x.alg;
    let mut v = vec![alg.field.zero(); co.dim];
    for (&n, m) in &f.comps {
        let Some(offs) = co.starts.get(&n) else { continue };
        let src = x.term(n);
        for r in 0..m.rows.len() {
            for c in 0..src.len() {
                for (p, a) in &m.get(r, c).0 {
                    v[offs[r * src.len() + c] + alg.pos_in_pair(*p)] = a.clone();
                }
            }
        }
    }
    v
}

/// Chain maps `X → Y[s]` whose classes form a basis of `Hom_K(X, Y[s])`.
pub fn hom_basis(x: &PerfComplex, y: &PerfComplex, s: i32) -> Vec<ChainMap> {
    match hom_window(x, y) {
        Some((a, b)) if a <= s && s <= b => {}
        _ => return vec![],
    }
    let (prev, cur, next) = (Coords::new(x, y, s - 1), Coords::new(x, y, s), Coords::new(x, y, s + 1));
    if cur.dim == 0 {
        return vec![];
    }
    let cycles = differential(x, y, &cur, &next).kernel_basis();
    let bounds = differential(x, y, &prev, &cur).column_space();
    let mut span = bounds;
    let mut rank = span.cols();
    let mut out = Vec::new();
    for z in cycles {
        let cand = span.hstack(&Mat::from_cols(x.alg.field, cur.dim, std::slice::from_ref(&z))).unwrap();
        let rk = cand.rank();
        if rk > rank {
            span = cand;
            rank = rk;
            out.push(vector_to_map(x, y, &cur, &z));
        }
    }
    out
}

/// Whether a chain map `X → Y` is null-homotopic.
pub fn is_null_homotopic(f: &ChainMap) -> bool {
    let (x, y) = (&f.source, &f.target);
    if hom_window(x, y).is_none() {
        return true;
    }
    let (prev, cur) = (Coords::new(x, y, -1), Coords::new(x, y, 0));
    let v = map_to_vector(f, &cur);
    if v.iter().all(Scalar::is_zero) {
        return true;
    }
    differential(x, y, &prev, &cur).solve(&v).expect("shapes agree").is_some()
}

/// Writes a chain map `X → Y[s]` in a given basis of cocycles, modulo boundaries.
pub fn coordinates_in(f: &ChainMap, basis: &[ChainMap], s: i32) -> Option<Vec<Scalar>> {
    let x = &f.source;
    let y = &f.target.shift(-s);
    let (prev, cur) = (Coords::new(x, y, s - 1), Coords::new(x, y, s));
    let mut cols: Vec<Vec<Scalar>> = basis.iter().map(|b| map_to_vector(b, &cur)).collect();
    let nb = cols.len();
    let bounds = differential(x, y, &prev, &cur).column_space();
    for c in 0..bounds.cols() {
        cols.push(bounds.col(c));
    }
    if cur.dim == 0 {
        return Some(vec![]);
    }
    let m = Mat::from_cols(x.alg.field, cur.dim, &cols);
    let sol = m.solve(&map_to_vector(f, &cur)).ok()??;
    Some(sol[..nb].to_vec())
}
