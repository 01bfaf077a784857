//! From two-term silting complexes to support τ-tilting modules.

use std::collections::BTreeSet;

use serde_json::json;

use crate::algebra::homological::Presentation;
use crate::algebra::homological::is_projective;
use crate::algebra::{ar_translate, decompose, hom_dim, hom_modules, iso_modules, projective, Rep};
use crate::error::Result;
use crate::exactla::Mat;
use crate::perf::{cohomology_at, hom_perf, stalk, PerfComplex, Session, SiltCandidate};

/// `H⁰(T)`: for a complex in degrees `{−1, 0}` the cokernel of its differential.
pub fn h0(t: &PerfComplex) -> Result<Rep> {
    cohomology_at(t, 0)
}

/// `P₁ → P₀` placed in degrees `−1, 0`.
pub fn presentation_complex(p: &Presentation) -> Result<PerfComplex> {
    let alg = p.cover.source.alg.clone();
    PerfComplex::new(alg, -1, vec![p.p1.clone(), p.p0.clone()], vec![p.d.clone()])
}

/// `N ∈ Gen M`: the images of all maps `M → N` span `N`.
pub fn in_gen(m: &Rep, n: &Rep) -> Result<bool> {
    let maps = hom_modules(m, n)?;
    for v in 0..n.dims().len() {
        let dim = n.dims()[v];
        if dim == 0 {
            continue;
        }
        let mut span = Mat::zeros(n.alg.field, dim, 0);
        for f in &maps {
            span = span.hstack(&f.comps[v])?;
        }
        if span.rank() < dim {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Hom(σ, N)` is onto, that is `Hom(σ, N[1]) = 0` in the homotopy category.
pub fn in_d_sigma(sigma: &PerfComplex, n: &Rep, cap: usize) -> Result<bool> {
    Ok(hom_perf(sigma, &stalk(n, 0, cap)?, 1) == 0)
}

/// `D_σ = Gen M` on every catalog module.
pub fn is_silting_module_fd(m: &Rep, sigma: &PerfComplex, catalog: &[Rep], cap: usize) -> Result<bool> {
    for n in catalog {
        if in_d_sigma(sigma, n, cap)? != in_gen(m, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A module together with a set of vertices it must vanish on.
#[derive(Clone, Debug)]
pub struct SuppTauPair {
    pub module: Rep,
    pub support: BTreeSet<usize>,
}

impl SuppTauPair {
    pub fn to_json(&self) -> serde_json::Value {
        let summands: Result<Vec<Vec<usize>>> =
            decompose(&self.module).map(|d| d.into_iter().map(|(r, _)| r.dims().to_vec()).collect());
        let q = &self.module.alg.quiver;
        json!({
            "dims": self.module.dims(),
            "summands": summands.unwrap_or_default(),
            "support": self.support.iter().map(|&v| q.vertices[v].clone()).collect::<Vec<_>>(),
        })
    }
}

/// `τM`, with projective summands contributing zero.
fn tau_of(m: &Rep) -> Result<Vec<Rep>> {
    let mut out = Vec::new();
    for (s, _) in decompose(m)? {
        if !is_projective(&s) {
            out.push(ar_translate(&s)?);
        }
    }
    Ok(out)
}

/// Distinct indecomposable summands up to isomorphism.
fn basic_summands(m: &Rep) -> Result<Vec<Rep>> {
    Ok(decompose(m)?.into_iter().map(|(s, _)| s).collect())
}

/// `Hom(M, τM) = 0`, `M` vanishes on the support vertices and
/// `|M| + |support| = |Q₀|`.
pub fn is_support_tau_tilting(p: &SuppTauPair) -> Result<bool> {
    let m = &p.module;
    if p.support.iter().any(|&v| m.dims()[v] != 0) {
        return Ok(false);
    }
    for t in tau_of(m)? {
        if hom_dim(m, &t)? != 0 {
            return Ok(false);
        }
    }
    Ok(basic_summands(m)?.len() + p.support.len() == m.alg.n())
}

/// The pair attached to a two-term silting object: `H⁰(T)` and the vertices `i`
/// with `P_i[1]` a summand of `T`.
pub fn pair_of(sess: &Session, t: &SiltCandidate) -> Result<SuppTauPair> {
    let module = h0(&sess.object(t))?;
    let support = t
        .ids
        .iter()
        .filter_map(|&i| {
            let c = sess.complex(i);
            (c.range() == Some((-1, -1)) && c.term(-1).len() == 1).then(|| c.term(-1)[0])
        })
        .collect();
    Ok(SuppTauPair { module, support })
}

/// A pair as catalog indices of its summands plus its support.
type PairKey = (Vec<usize>, Vec<usize>);

fn catalog_index(catalog: &[Rep], m: &Rep) -> Result<Option<usize>> {
    for (i, c) in catalog.iter().enumerate() {
        if c.dims() == m.dims() && iso_modules(c, m)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

fn pair_key(catalog: &[Rep], p: &SuppTauPair) -> Result<Option<PairKey>> {
    let mut idx = Vec::new();
    for s in basic_summands(&p.module)? {
        match catalog_index(catalog, &s)? {
            Some(i) => idx.push(i),
            None => return Ok(None),
        }
    }
    idx.sort_unstable();
    Ok(Some((idx, p.support.iter().copied().collect())))
}

/// Every support τ-tilting pair whose summands lie in the catalog, by brute force
/// over τ-rigid cliques and vertex subsets.
pub fn enumerate_support_tau_tilting(catalog: &[Rep]) -> Result<Vec<SuppTauPair>> {
    let Some(first) = catalog.first() else { return Ok(vec![]) };
    let alg = first.alg.clone();
    let n = alg.n();
    let taus: Vec<Vec<Rep>> = catalog.iter().map(tau_of).collect::<Result<_>>()?;
    let k = catalog.len();
    let mut compatible = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            let mut ok = true;
            for t in &taus[j] {
                ok &= hom_dim(&catalog[i], t)? == 0;
            }
            compatible[i][j] = ok;
        }
    }
    let rigid: Vec<usize> = (0..k).filter(|&i| compatible[i][i]).collect();
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(0, vec![])];
    while let Some((start, set)) = stack.pop() {
        let support_vertices: Vec<usize> =
            (0..n).filter(|&v| set.iter().all(|&i| catalog[i].dims()[v] == 0)).collect();
        let need = n - set.len();
        for e in subsets_of_size(&support_vertices, need) {
            let parts: Vec<&Rep> = set.iter().map(|&i| &catalog[i]).collect();
            let module = if parts.is_empty() { Rep::zero(&alg) } else { Rep::direct_sum(&parts)? };
            out.push(SuppTauPair { module, support: e.into_iter().collect() });
        }
        if set.len() == n {
            continue;
        }
        for (pos, &c) in rigid.iter().enumerate().skip(start) {
            if set.iter().all(|&i| compatible[i][c] && compatible[c][i]) {
                let mut next = set.clone();
                next.push(c);
                stack.push((pos + 1, next));
            }
        }
    }
    Ok(out)
}

fn subsets_of_size(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![vec![]];
    }
    if items.len() < size {
        return vec![];
    }
    let mut out = subsets_of_size(&items[1..], size - 1);
    for s in &mut out {
        s.insert(0, items[0]);
    }
    out.extend(subsets_of_size(&items[1..], size));
    out
}

/// Comparison of `T ↦ (H⁰T, support)` on enumerated two-term silting objects
/// with the brute-force list of support τ-tilting pairs.
#[derive(Clone, Debug)]
pub struct BijectionReport {
    pub two_term: usize,
    pub pairs: usize,
    /// `H⁰` followed by the support assignment is injective.
    pub injective: bool,
    /// Every image is a support τ-tilting pair from the brute-force list.
    pub lands_in_pairs: bool,
    /// Every brute-force pair is hit.
    pub onto: bool,
    /// `H⁰(T)` vanishes on the support read off `T`.
    pub support_consistent: bool,
    /// `H⁰(T)` is a silting module with respect to `T` on the catalog.
    pub silting_modules: bool,
    pub images: Vec<SuppTauPair>,
}

impl BijectionReport {
    pub fn ok(&self) -> bool {
        self.injective && self.lands_in_pairs && self.onto && self.support_consistent && self.silting_modules
    }

    pub fn to_json(&self, sess: &Session, nodes: &[SiltCandidate]) -> serde_json::Value {
        let rows: Vec<_> = nodes
            .iter()
            .zip(&self.images)
            .map(|(t, p)| {
                json!({
                    "two_term": t.ids.iter().map(|&i| sess.complex(i).to_json()).collect::<Vec<_>>(),
                    "pair": p.to_json(),
                })
            })
            .collect();
        json!({
            "two_term": self.two_term,
            "pairs": self.pairs,
            "injective": self.injective,
            "lands_in_pairs": self.lands_in_pairs,
            "onto": self.onto,
            "support_consistent": self.support_consistent,
            "silting_modules": self.silting_modules,
            "correspondence": rows,
        })
    }
}

pub fn bijection_check(sess: &Session, nodes: &[SiltCandidate], catalog: &[Rep]) -> Result<BijectionReport> {
    let pairs = enumerate_support_tau_tilting(catalog)?;
    let mut oracle = BTreeSet::new();
    for p in &pairs {
        if let Some(k) = pair_key(catalog, p)? {
            oracle.insert(k);
        }
    }
    let mut images = Vec::new();
    let mut keys = BTreeSet::new();
    let (mut injective, mut lands, mut support_consistent, mut silting_modules) = (true, true, true, true);
    for t in nodes {
        let p = pair_of(sess, t)?;
        support_consistent &= p.support.iter().all(|&v| p.module.dims()[v] == 0);
        silting_modules &= is_silting_module_fd(&p.module, &sess.object(t), catalog, sess.pd_cap)?;
        match pair_key(catalog, &p)? {
            Some(k) => {
                lands &= oracle.contains(&k) && is_support_tau_tilting(&p)?;
                injective &= keys.insert(k);
            }
            None => lands = false,
        }
        images.push(p);
    }
    let onto = keys == oracle;
    Ok(BijectionReport {
        two_term: nodes.len(),
        pairs: oracle.len(),
        injective,
        lands_in_pairs: lands,
        onto,
        support_consistent,
        silting_modules,
        images,
    })
}

/// The pair `(Λ, ∅)`.
pub fn lambda_pair(alg: &std::sync::Arc<crate::algebra::PathAlgebra>) -> Result<SuppTauPair> {
    let ps: Vec<Rep> = (0..alg.n()).map(|i| projective(alg, i)).collect::<Result<_>>()?;
    let refs: Vec<&Rep> = ps.iter().collect();
    Ok(SuppTauPair { module: Rep::direct_sum(&refs)?, support: BTreeSet::new() })
}
