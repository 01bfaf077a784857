//! Krull–Schmidt decomposition of diagrams.
//!
//! A deterministic ladder of endomorphisms is searched for one whose
//! characteristic polynomials have two distinct irreducible factors; for such
//! `φ` and a factor `p`, Fitting's lemma splits
//! `D = ker p(φ)^N ⊕ im p(φ)^N`.
//!
//! Over Q, locality of `End(D)` is certified through the trace form
//! `(φ, ψ) ↦ tr(φψ)`, whose radical is the Jacobson radical in characteristic
//! zero. Its rank `r` is `dim End(D)/rad`; the ring is local when `r = 1`, or
//! when some `φ` has a single irreducible factor of degree `r`, since then
//! `End(D)/rad` is the field generated by `φ`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::diagram::{image, kernel, random_combination, Diagram, Morph, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::exactla::factor::irreducible_factors;
use crate::exactla::poly::{charpoly, degree, eval_mat, Poly};
use crate::exactla::{Field, Mat, Scalar};

fn endo_product(a: &Morph, b: &Morph) -> Morph {
    a.iter().zip(b).map(|(x, y)| x.mul(y).unwrap()).collect()
}

fn trace(a: &Morph, f: Field) -> Scalar {
    a.iter().fold(f.zero(), |acc, m| acc.add(&m.trace()))
}

/// Dimension of `End(D)/rad End(D)` over Q, from the trace form.
fn semisimple_rank(basis: &[Morph], f: Field) -> usize {
    let m = basis.len();
    let mut g = Mat::zeros(f, m, m);
    for i in 0..m {
        for j in i..m {
            let t = trace(&endo_product(&basis[i], &basis[j]), f);
            g.set(i, j, t.clone());
            g.set(j, i, t);
        }
    }
    g.rank()
}

/// Distinct irreducible factors of the characteristic polynomials of `φ`.
fn factors(phi: &Morph) -> Vec<Poly> {
    let mut out: Vec<Poly> = Vec::new();
    for m in phi.iter().filter(|m| m.rows() > 0) {
        for p in irreducible_factors(&charpoly(m)) {
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

/// Fitting split along the first irreducible factor, when there are several.
fn fitting_split(phi: &Morph, fs: &[Poly]) -> Option<(Vec<Mat>, Vec<Mat>)> {
    if fs.len() < 2 {
        return None;
    }
    let n = phi.iter().map(Mat::rows).max().unwrap_or(0);
    let psi_n: Morph = phi.iter().map(|m| eval_mat(&fs[0], m).pow(n)).collect();
    Some((kernel(&psi_n), image(&psi_n)))
}

/// Splits `d` into indecomposable summands (no grouping).
pub fn indecomposable_summands(d: &Diagram) -> Result<Vec<Diagram>> {
    if d.is_zero() {
        return Ok(vec![]);
    }
    let f = d.field;
    let basis = d.hom_basis(d)?;
    if basis.len() == 1 {
        return Ok(vec![d.clone()]);
    }
    let rank = (f == Field::Rationals).then(|| semisimple_rank(&basis, f));
    if rank == Some(1) {
        return Ok(vec![d.clone()]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut ladder: Vec<Morph> = basis.clone();
    for _ in 0..16 {
        ladder.push(random_combination(&basis, f, &mut rng));
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            ladder.push(basis[i].iter().zip(&basis[j]).map(|(a, b)| a.add(b).unwrap()).collect());
        }
    }
    let mut single_factor = true;
    for phi in &ladder {
        let fs = factors(phi);
        if let Some((ker, im)) = fitting_split(phi, &fs) {
            let (a, _) = d.restrict(&ker)?;
            let (b, _) = d.restrict(&im)?;
            let mut out = indecomposable_summands(&a)?;
            out.extend(indecomposable_summands(&b)?);
            return Ok(out);
        }
        if let (Some(r), [p]) = (rank, fs.as_slice()) {
            if degree(p) == r {
                return Ok(vec![d.clone()]);
            }
        }
        single_factor &= fs.len() == 1;
    }
    if f != Field::Rationals && single_factor {
        // Over F_p every ladder element had a single irreducible factor.
        return Ok(vec![d.clone()]);
    }
    Err(Error::DecomposeFailed(format!("dims {:?}, End of dimension {}", d.dims, basis.len())))
}

/// Krull–Schmidt decomposition grouped into isomorphism classes, in order of
/// first appearance.
pub fn decompose(d: &Diagram) -> Result<Vec<(Diagram, usize)>> {
    let mut out: Vec<(Diagram, usize)> = Vec::new();
    for s in indecomposable_summands(d)? {
        let mut found = false;
        for (t, m) in out.iter_mut() {
            if t.is_iso(&s)? {
                *m += 1;
                found = true;
                break;
            }
        }
        if !found {
            out.push((s, 1));
        }
    }
    Ok(out)
}

pub fn is_indecomposable(d: &Diagram) -> Result<bool> {
    Ok(indecomposable_summands(d)?.len() == 1)
}
