//! Projective covers, presentations, resolutions, Ext¹, the Euler form and the
//! Auslander–Reiten translate.

use std::sync::Arc;

use super::diagram::{image, kernel, Morph};
use super::elem::{vector_to_elems, Elem, PathMatrix};
use super::quiver::PathAlgebra;
use super::rep::{decompose, free_map, free_module, injective, projective, simple, Rep, RepMap};
use crate::error::{Error, Result};
use crate::exactla::{Mat, Scalar};

/// Generators of an invariant subspace `sub ⊆ r` modulo its radical, picked
/// greedily from the given basis columns (deterministic).
fn top_generators(r: &Rep, sub: &[Mat]) -> Vec<(usize, Vec<Scalar>)> {
    let alg = &r.alg;
    let mut gens = Vec::new();
    for v in 0..alg.n() {
        let mut span = Mat::zeros(alg.field, r.dims()[v], 0);
        for (ai, a) in alg.quiver.arrows.iter().enumerate() {
            if a.tgt == v {
                span = span.hstack(&r.map(ai).mul(&sub[a.src]).unwrap()).unwrap();
            }
        }
        let mut rank = span.rank();
        for c in 0..sub[v].cols() {
            let col = sub[v].col(c);
            let cand = span.hstack(&Mat::from_cols(alg.field, r.dims()[v], std::slice::from_ref(&col))).unwrap();
            let rk = cand.rank();
            if rk > rank {
                span = cand;
                rank = rk;
                gens.push((v, col));
            }
        }
    }
    gens
}

/// The map `⊕ P_{u} → r` sending the generator of each summand to its vector.
fn gens_map(r: &Rep, gens: &[(usize, Vec<Scalar>)]) -> Morph {
    let alg = &r.alg;
    (0..alg.n())
        .map(|w| {
            let mut cols = Vec::new();
            for (u, m) in gens {
                for &p in alg.paths_between(*u, w) {
                    cols.push(r.basis_path_map(p).mul_vec(m).unwrap());
                }
            }
            Mat::from_cols(alg.field, r.dims()[w], &cols)
        })
        .collect()
}

/// Covers a submodule of a free module: returns the new free module's vertices
/// and the path matrix into the old one.
fn cover_in_free(alg: &Arc<PathAlgebra>, free: &[usize], sub: &[Mat]) -> (Vec<usize>, PathMatrix) {
    let f = free_module(alg, free);
    let gens = top_generators(&f, sub);
    let verts: Vec<usize> = gens.iter().map(|g| g.0).collect();
    let mut d = PathMatrix::zero(free.to_vec(), verts.clone());
    for (c, (u, m)) in gens.iter().enumerate() {
        for (r, e) in vector_to_elems(free, *u, m, alg).into_iter().enumerate() {
            d.set(r, c, e);
        }
    }
    (verts, d)
}

/// A minimal projective presentation `P1 --d--> P0 --cover--> M --> 0`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p1: Vec<usize>,
    pub p0: Vec<usize>,
    pub d: PathMatrix,
    pub cover: RepMap,
    /// `ΩM = ker(cover)` as per-vertex bases inside `P0`.
    pub syzygy: Vec<Mat>,
}

/// The projective cover together with the vertices of its summands.
pub fn cover_with_vertices(m: &Rep) -> (Vec<usize>, RepMap) {
    let gens = top_generators(m, &m.diagram.identity());
    let verts: Vec<usize> = gens.iter().map(|g| g.0).collect();
    let cover = RepMap { source: free_module(&m.alg, &verts), target: m.clone(), comps: gens_map(m, &gens) };
    (verts, cover)
}

impl Presentation {
    /// `d` as a module map `P1 → P0`.
    pub fn d_map(&self) -> RepMap {
        free_map(&self.cover.source.alg, &self.d)
    }
}

pub fn projective_cover(m: &Rep) -> RepMap {
    cover_with_vertices(m).1
}

pub fn min_proj_presentation(m: &Rep) -> Presentation {
    let (p0, cover) = cover_with_vertices(m);
    let syzygy = kernel(&cover.comps);
    let (p1, d) = cover_in_free(&m.alg, &p0, &syzygy);
    Presentation { p1, p0, d, cover, syzygy }
}

/// A minimal projective resolution `… → P_1 → P_0`; `terms[k] = P_k`,
/// `diffs[k-1] : P_k → P_{k-1}`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub terms: Vec<Vec<usize>>,
    pub diffs: Vec<PathMatrix>,
}

pub fn projective_resolution(m: &Rep, cap: usize) -> Result<Resolution> {
    let alg = &m.alg;
    let pres = min_proj_presentation(m);
    let mut terms = vec![pres.p0.clone()];
    let mut diffs = Vec::new();
    let mut prev = pres.p0.clone();
    let mut sub = pres.syzygy.clone();
    while sub.iter().any(|s| s.cols() > 0) {
        if terms.len() > cap {
            return Err(Error::PdCap(cap));
        }
        let (verts, d) = cover_in_free(alg, &prev, &sub);
        sub = kernel(&free_map(alg, &d).comps);
        terms.push(verts.clone());
        diffs.push(d);
        prev = verts;
    }
    Ok(Resolution { terms, diffs })
}

pub fn is_projective(m: &Rep) -> bool {
    min_proj_presentation(m).syzygy.iter().all(|s| s.cols() == 0)
}

pub fn is_injective(m: &Rep) -> bool {
    is_projective(&m.dual())
}

/// `dim Ext¹(M, N) = dim Hom(ΩM, N) − rank(Hom(P0, N) → Hom(ΩM, N))`.
pub fn ext1(m: &Rep, n: &Rep) -> Result<usize> {
    if *m.alg != *n.alg {
        return Err(Error::AlgebraMismatch);
    }
    let alg = &m.alg;
    let pres = min_proj_presentation(m);
    let p0 = &pres.cover.source;
    let (omega, incl) = p0.diagram.restrict(&pres.syzygy)?;
    let hom_omega = omega.hom_basis(&n.diagram)?.len();
    if hom_omega == 0 {
        return Ok(0);
    }
    // Hom(P0, N) ≅ ⊕_r N_{p0[r]}: send the r-th generator to a basis vector.
    let mut restricted: Vec<Vec<Scalar>> = Vec::new();
    for (r, &u) in pres.p0.iter().enumerate() {
        for e in 0..n.dims()[u] {
            let mut vec = vec![alg.field.zero(); n.dims()[u]];
            vec[e] = alg.field.one();
            let mut flat = Vec::new();
            for w in 0..alg.n() {
                let mut cols = Vec::new();
                for (r2, &u2) in pres.p0.iter().enumerate() {
                    for &p in alg.paths_between(u2, w) {
                        if r2 == r {
                            cols.push(n.basis_path_map(p).mul_vec(&vec)?);
                        } else {
                            cols.push(vec![alg.field.zero(); n.dims()[w]]);
                        }
                    }
                }
                let f_w = Mat::from_cols(alg.field, n.dims()[w], &cols);
                let g = f_w.mul(&incl[w])?;
                flat.extend(g.entries().iter().cloned());
            }
            restricted.push(flat);
        }
    }
    let Some(len) = restricted.first().map(Vec::len) else { return Ok(hom_omega) };
    let rank = Mat::from_cols(alg.field, len, &restricted).rank();
    Ok(hom_omega - rank)
}

/// `⟨d, e⟩ = Σ d_i e_i − Σ_{a: i→j} d_i e_j`, for algebras without relations.
pub fn euler_form(alg: &PathAlgebra, d: &[usize], e: &[usize]) -> Result<i64> {
    if !alg.is_hereditary() {
        return Err(Error::NotHereditary("the Euler form"));
    }
    if d.len() != alg.n() || e.len() != alg.n() {
        return Err(Error::Dim("dimension vector length".into()));
    }
    let mut s: i64 = d.iter().zip(e).map(|(x, y)| (*x * *y) as i64).sum();
    for a in &alg.quiver.arrows {
        s -= (d[a.src] * e[a.tgt]) as i64;
    }
    Ok(s)
}

/// Auslander–Bridger transpose: the cokernel of the transposed presentation,
/// a module over the opposite algebra.
pub fn transpose(m: &Rep) -> Result<Rep> {
    let alg = &m.alg;
    let op = alg.opposite();
    let pres = min_proj_presentation(m);
    let mut dt = PathMatrix::zero(pres.p1.clone(), pres.p0.clone());
    for r in 0..pres.p0.len() {
        for c in 0..pres.p1.len() {
            let e = pres.d.get(r, c);
            let rev: Vec<(usize, Scalar)> = e.0.iter().map(|(p, k)| (alg.opposite_path(*p), k.clone())).collect();
            let mut out = Elem::zero();
            for (p, k) in rev {
                out = out.add(&Elem::path(p, k));
            }
            dt.set(c, r, out);
        }
    }
    let map = free_map(&op, &dt);
    let (q, _) = map.target.diagram.quotient(&image(&map.comps))?;
    Ok(Rep { alg: op, diagram: q })
}

/// `τ = D Tr` without the projective-summand check.
pub fn dtr(m: &Rep) -> Result<Rep> {
    Ok(transpose(m)?.dual())
}

/// `τ⁻¹ = Tr D` without the injective-summand check.
pub fn trd(m: &Rep) -> Result<Rep> {
    transpose(&m.dual())
}

/// The Auslander–Reiten translate. Errors when `M` has a projective summand.
pub fn ar_translate(m: &Rep) -> Result<Rep> {
    for (s, _) in decompose(m)? {
        if is_projective(&s) {
            return Err(Error::ProjectiveSummand);
        }
    }
    dtr(m)
}

/// The inverse translate. Errors when `M` has an injective summand.
pub fn ar_translate_inv(m: &Rep) -> Result<Rep> {
    for (s, _) in decompose(m)? {
        if is_injective(&s) {
            return Err(Error::Precondition("module has an injective direct summand".into()));
        }
    }
    trd(m)
}

/// Where an indecomposable sits in the knitted part of the AR quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Knit {
    /// `τ^{-k} P_i`.
    Preprojective { vertex: usize, k: usize },
    /// `τ^{k} I_i`.
    Preinjective { vertex: usize, k: usize },
    /// Found another way (simples, uniserial quotients of projectives).
    Other,
}

/// Indecomposable modules reachable by knitting to `depth` from projectives and
/// injectives, plus simples and the uniserial quotients `P_i / rad^j P_i`;
/// pairwise non-isomorphic, in discovery order.
pub fn knitted_indecomposables(alg: &Arc<PathAlgebra>, depth: usize) -> Result<Vec<(Rep, Knit)>> {
    let mut out: Vec<(Rep, Knit)> = Vec::new();
    let push = |r: Rep, k: Knit, out: &mut Vec<(Rep, Knit)>| -> Result<()> {
        if r.is_zero() {
            return Ok(());
        }
        for (o, _) in out.iter() {
            if o.dims() == r.dims() && o.diagram.is_iso(&r.diagram)? {
                return Ok(());
            }
        }
        out.push((r, k));
        Ok(())
    };
    for i in 0..alg.n() {
        let mut x = projective(alg, i)?;
        push(x.clone(), Knit::Preprojective { vertex: i, k: 0 }, &mut out)?;
        for k in 1..=depth {
            if is_injective(&x) {
                break;
            }
            x = trd(&x)?;
            if x.is_zero() {
                break;
            }
            push(x.clone(), Knit::Preprojective { vertex: i, k }, &mut out)?;
        }
    }
    for i in 0..alg.n() {
        let mut x = injective(alg, i)?;
        push(x.clone(), Knit::Preinjective { vertex: i, k: 0 }, &mut out)?;
        for k in 1..=depth {
            if is_projective(&x) {
                break;
            }
            x = dtr(&x)?;
            if x.is_zero() {
                break;
            }
            push(x.clone(), Knit::Preinjective { vertex: i, k }, &mut out)?;
        }
    }
    for i in 0..alg.n() {
        push(simple(alg, i)?, Knit::Other, &mut out)?;
    }
    for i in 0..alg.n() {
        let p = projective(alg, i)?;
        let maxlen = alg.paths().iter().filter(|q| q.src == i).map(|q| q.len()).max().unwrap_or(0);
        for j in 1..=maxlen {
            // rad^j P_i is spanned by paths of length ≥ j.
            let sub: Vec<Mat> = (0..alg.n())
                .map(|w| {
                    let cols: Vec<Vec<Scalar>> = alg
                        .paths_between(i, w)
                        .iter()
                        .filter(|&&q| alg.path(q).len() >= j)
                        .map(|&q| {
                            let mut v = vec![alg.field.zero(); p.dims()[w]];
                            v[alg.pos_in_pair(q)] = alg.field.one();
                            v
                        })
                        .collect();
                    Mat::from_cols(alg.field, p.dims()[w], &cols)
                })
                .collect();
            let (q, _) = p.diagram.quotient(&sub)?;
            push(Rep { alg: alg.clone(), diagram: q }, Knit::Other, &mut out)?;
        }
    }
    Ok(out)
}
