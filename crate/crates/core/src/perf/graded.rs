//! Complexes viewed as representations of `Q × A_m`: cohomology, isomorphism
//! and Krull–Schmidt decomposition of minimal complexes.
//!
//! For a minimal complex every null-homotopic endomorphism lies in the radical
//! of the endomorphism ring of the complex, so splitting the complex as a
//! graded diagram splits it in the homotopy category.

use super::complex::PerfComplex;
use crate::algebra::diagram::{image, kernel};
use crate::algebra::elem::{offsets, vector_to_elems};
use crate::algebra::homological::cover_with_vertices;
use crate::algebra::rep::free_module;
use crate::algebra::{decompose::indecomposable_summands, Diagram, PathMatrix, Rep};
use crate::error::{Error, Result};
use crate::exactla::Mat;

/// Vertex `(v, n)` sits at index `(n − lo)·|Q₀| + v`.
pub fn as_diagram(x: &PerfComplex) -> Diagram {
    let alg = &x.alg;
    let nv = alg.n();
    let Some((lo, hi)) = x.range() else {
        return Diagram { field: alg.field, dims: vec![], arrows: vec![], maps: vec![] };
    };
    let mut dims = Vec::new();
    let mut arrows = Vec::new();
    let mut maps = Vec::new();
    for n in lo..=hi {
        let f = free_module(alg, x.term(n));
        dims.extend_from_slice(f.dims());
        let base = ((n - lo) as usize) * nv;
        for (k, a) in alg.quiver.arrows.iter().enumerate() {
            arrows.push((base + a.src, base + a.tgt));
            maps.push(f.map(k).clone());
        }
    }
    for n in lo..hi {
        let d = x.d(n);
        let base = ((n - lo) as usize) * nv;
        for j in 0..nv {
            arrows.push((base + j, base + nv + j));
            maps.push(d.at_vertex(j, alg));
        }
    }
    Diagram { field: alg.field, dims, arrows, maps }
}

/// `H^n(X)` as a module.
pub fn cohomology_at(x: &PerfComplex, n: i32) -> Result<Rep> {
    let alg = &x.alg;
    let f = free_module(alg, x.term(n));
    let out: Vec<Mat> = (0..alg.n()).map(|j| x.d(n).at_vertex(j, alg)).collect();
    let inc: Vec<Mat> = (0..alg.n()).map(|j| x.d(n - 1).at_vertex(j, alg)).collect();
    let q = f.diagram.subquotient(&kernel(&out), &image(&inc))?;
    Ok(Rep { alg: alg.clone(), diagram: q })
}

/// Nonzero cohomology modules by degree.
pub fn cohomology(x: &PerfComplex) -> Result<Vec<(i32, Rep)>> {
    let mut out = Vec::new();
    for n in x.degrees() {
        let h = cohomology_at(x, n)?;
        if !h.is_zero() {
            out.push((n, h));
        }
    }
    Ok(out)
}

/// Rebuilds a complex of projectives from a graded diagram summand.
fn rebuild(x: &PerfComplex, d: &Diagram) -> Result<PerfComplex> {
    let alg = &x.alg;
    let nv = alg.n();
    let (lo, hi) = x.range().unwrap();
    let nq = alg.quiver.arrows.len();
    let mut covers = Vec::new();
    for n in lo..=hi {
        let k = (n - lo) as usize;
        let dn = Diagram {
            field: alg.field,
            dims: d.dims[k * nv..(k + 1) * nv].to_vec(),
            arrows: alg.quiver.arrows.iter().map(|a| (a.src, a.tgt)).collect(),
            maps: d.maps[k * nq..(k + 1) * nq].to_vec(),
        };
        let m = Rep { alg: alg.clone(), diagram: dn };
        let (verts, cover) = cover_with_vertices(&m);
        if !cover.is_iso() {
            return Err(Error::DecomposeFailed("summand term is not projective".into()));
        }
        covers.push((verts, cover));
    }
    let verts: Vec<Vec<usize>> = covers.iter().map(|c| c.0.clone()).collect();
    let mut diffs = Vec::new();
    let delta_base = (hi - lo + 1) as usize * nq;
    for n in lo..hi {
        let k = (n - lo) as usize;
        let (src, tgt) = (&verts[k], &verts[k + 1]);
        let mut m = PathMatrix::zero(tgt.clone(), src.clone());
        // Generator c of the source term maps under δ, then back through the cover.
        let src_free = free_module(alg, src);
        for (c, &u) in src.iter().enumerate() {
            let mut e = vec![alg.field.zero(); src_free.dims()[u]];
            e[offsets(src, u, alg)[c] + alg.pos_in_pair(alg.trivial(u))] = alg.field.one();
            let img = covers[k].1.comps[u].mul_vec(&e)?;
            let moved = d.maps[delta_base + k * nv + u].mul_vec(&img)?;
            let pre = covers[k + 1].1.comps[u]
                .solve(&moved)?
                .ok_or_else(|| Error::DecomposeFailed("differential does not lift".into()))?;
            for (r, el) in vector_to_elems(tgt, u, &pre, alg).into_iter().enumerate() {
                m.set(r, c, el);
            }
        }
        diffs.push(m);
    }
    Ok(PerfComplex::from_parts(alg.clone(), lo, verts, diffs))
}

/// Indecomposable summands of a minimal complex (with repetition).
pub fn decompose_minimal(x: &PerfComplex) -> Result<Vec<PerfComplex>> {
    if x.is_zero() {
        return Ok(vec![]);
    }
    let d = as_diagram(x);
    indecomposable_summands(&d)?.iter().map(|s| rebuild(x, s)).collect()
}

/// Isomorphism of minimal complexes (equivalently, homotopy equivalence).
pub fn iso_minimal(x: &PerfComplex, y: &PerfComplex) -> Result<bool> {
    if x.range() != y.range() {
        return Ok(false);
    }
    if x.is_zero() {
        return Ok(true);
    }
    for n in x.degrees() {
        let (mut a, mut b) = (x.term(n).to_vec(), y.term(n).to_vec());
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Ok(false);
        }
    }
    as_diagram(x).is_iso(&as_diagram(y))
}
