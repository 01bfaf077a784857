//! Minimal representatives: Gaussian elimination of invertible differential
//! entries, tracking the homotopy equivalences.

use std::collections::BTreeMap;

use super::complex::{ChainMap, PerfComplex};
use crate::algebra::{Elem, PathAlgebra, PathMatrix};

/// A minimal complex with mutually inverse homotopy equivalences.
#[derive(Clone, Debug)]
pub struct Minimal {
    pub complex: PerfComplex,
    /// `X → X'`.
    pub to: ChainMap,
    /// `X' → X`.
    pub from: ChainMap,
}

/// Inverse of `λ e_v + ρ` with `ρ` radical: `λ⁻¹ Σ (−λ⁻¹ ρ)^k`.
fn unit_inverse(e: &Elem, v: usize, alg: &PathAlgebra) -> Elem {
    let lam = e.trivial_coeff(alg, v);
    let li = lam.inv().expect("unit has a nonzero trivial coefficient");
    let ev = alg.trivial(v);
    let rho = Elem(e.0.iter().filter(|t| t.0 != ev).cloned().collect());
    let step = rho.scale(&li.neg());
    let mut term = Elem::path(ev, alg.field.one());
    let mut sum = Elem::zero();
    while !term.is_zero() {
        sum = sum.add(&term);
        term = term.mul(&step, alg);
    }
    sum.scale(&li)
}

fn first_unit(x: &PerfComplex) -> Option<(i32, usize, usize)> {
    let alg = &x.alg;
    for n in x.degrees() {
        let Some(d) = x.d_ref(n) else { continue };
        for c in 0..d.cols.len() {
            for r in 0..d.rows.len() {
                if d.rows[r] == d.cols[c] && !d.get(r, c).trivial_coeff(alg, d.cols[c]).is_zero() {
                    return Some((n, r, c));
                }
            }
        }
    }
    None
}

fn ident_rows(all: &[usize], keep: &[usize], alg: &PathAlgebra) -> PathMatrix {
    let mut m = PathMatrix::zero(keep.iter().map(|&i| all[i]).collect(), all.to_vec());
    for (k, &i) in keep.iter().enumerate() {
        m.set(k, i, Elem::path(alg.trivial(all[i]), alg.field.one()));
    }
    m
}

pub fn minimalize(x: &PerfComplex) -> Minimal {
    let alg = x.alg.clone();
    let mut cur = x.clone();
    let mut to: BTreeMap<i32, PathMatrix> = x.identity().comps;
    let mut from: BTreeMap<i32, PathMatrix> = to.clone();
    while let Some((n, b2, b)) = first_unit(&cur) {
        let d = cur.d(n);
        let (xn, xn1) = (cur.term(n).to_vec(), cur.term(n + 1).to_vec());
        let a: Vec<usize> = (0..xn.len()).filter(|&i| i != b).collect();
        let a2: Vec<usize> = (0..xn1.len()).filter(|&i| i != b2).collect();
        let eps = d.select(&a2, &a);
        let gam = d.select(&a2, &[b]);
        let del = d.select(&[b2], &a);
        let mut phi_inv = PathMatrix::zero(vec![xn[b]], vec![xn1[b2]]);
        phi_inv.set(0, 0, unit_inverse(d.get(b2, b), xn[b], &alg));
        let gpi = gam.compose(&phi_inv, &alg).unwrap();
        let new_d = eps.add(&gpi.compose(&del, &alg).unwrap().neg()).unwrap();

        // e_f : cur → new and e_g : new → cur at degrees n, n+1.
        let ef_n = ident_rows(&xn, &a, &alg);
        let mut ef_n1 = ident_rows(&xn1, &a2, &alg);
        for (k, _) in a2.iter().enumerate() {
            ef_n1.set(k, b2, gpi.get(k, 0).neg());
        }
        let pid = phi_inv.compose(&del, &alg).unwrap();
        let mut eg_n = PathMatrix::zero(xn.clone(), a.iter().map(|&i| xn[i]).collect());
        for (k, &i) in a.iter().enumerate() {
            eg_n.set(i, k, Elem::path(alg.trivial(xn[i]), alg.field.one()));
            eg_n.set(b, k, pid.get(0, k).neg());
        }
        let mut eg_n1 = PathMatrix::zero(xn1.clone(), a2.iter().map(|&i| xn1[i]).collect());
        for (k, &i) in a2.iter().enumerate() {
            eg_n1.set(i, k, Elem::path(alg.trivial(xn1[i]), alg.field.one()));
        }

        let (lo, hi) = cur.range().unwrap();
        let mut terms = Vec::new();
        let mut diffs = Vec::new();
        for m in lo..=hi {
            terms.push(if m == n { ef_n.rows.clone() } else if m == n + 1 { ef_n1.rows.clone() } else { cur.term(m).to_vec() });
        }
        for m in lo..hi {
            diffs.push(if m == n - 1 {
                ef_n.compose(&cur.d(m), &alg).unwrap()
            } else if m == n {
                new_d.clone()
            } else if m == n + 1 {
                cur.d(m).compose(&eg_n1, &alg).unwrap()
            } else {
                cur.d(m)
            });
        }
        let next = PerfComplex::from_parts(alg.clone(), lo, terms, diffs);
        for (deg, ef, eg) in [(n, &ef_n, &eg_n), (n + 1, &ef_n1, &eg_n1)] {
            if let Some(t) = to.get(&deg) {
                to.insert(deg, ef.compose(t, &alg).unwrap());
            }
            if let Some(f) = from.get(&deg) {
                from.insert(deg, f.compose(eg, &alg).unwrap());
            }
        }
        to.retain(|_, m| !m.rows.is_empty() && !m.cols.is_empty());
        from.retain(|_, m| !m.rows.is_empty() && !m.cols.is_empty());
        cur = next;
    }
    Minimal {
        to: ChainMap { source: x.clone(), target: cur.clone(), comps: to },
        from: ChainMap { source: cur.clone(), target: x.clone(), comps: from },
        complex: cur,
    }
}

pub fn is_minimal(x: &PerfComplex) -> bool {
    first_unit(x).is_none()
}
