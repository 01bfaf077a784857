//! Catalogs of indecomposable modules and complexes, with memoized Hom
//! dimensions, and the hereditary object model `⊕ H^i(X)[−i]`.
//!
//! Catalogs are append-only; registration is insert-if-absent up to
//! isomorphism, so ids are stable for the lifetime of a session. All mutation
//! goes through `&mut Session`, which serializes registrations.

use std::collections::HashMap;
use std::sync::Arc;

use super::complex::PerfComplex;
use super::graded::{cohomology, decompose_minimal, iso_minimal};
use super::hom::hom_dim;
use super::minimal::minimalize;
use crate::algebra::homological::{ext1, knitted_indecomposables};
use crate::algebra::{decompose, hom_dim as module_hom_dim, iso_modules, PathAlgebra, Rep};
use crate::error::{Error, Result};

/// Default cap on projective dimension when resolving modules.
pub const DEFAULT_PD_CAP: usize = 16;

/// A basic object: sorted, duplicate-free catalog ids of indecomposable complexes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SiltCandidate {
    pub ids: Vec<usize>,
}

impl SiltCandidate {
    pub fn from_ids(mut ids: Vec<usize>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        SiltCandidate { ids }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// `self ⊕ other`, made basic.
    pub fn union(&self, other: &SiltCandidate) -> Self {
        Self::from_ids(self.ids.iter().chain(&other.ids).copied().collect())
    }

    pub fn contains(&self, other: &SiltCandidate) -> bool {
        other.ids.iter().all(|i| self.ids.binary_search(i).is_ok())
    }
}

/// A formal sum of shifted indecomposable modules, `(module id, shift)`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DSum(pub Vec<(usize, i32)>);

type Signature = (i32, Vec<Vec<usize>>);

fn signature(c: &PerfComplex) -> Signature {
    let lo = c.range().map_or(0, |r| r.0);
    let terms = c
        .degrees()
        .map(|n| {
            let mut t = c.term(n).to_vec();
            t.sort_unstable();
            t
        })
        .collect();
    (lo, terms)
}

pub struct Session {
    pub alg: Arc<PathAlgebra>,
    pub pd_cap: usize,
    modules: Vec<Rep>,
    complexes: Vec<PerfComplex>,
    buckets: HashMap<Signature, Vec<usize>>,
    shift_memo: HashMap<(usize, i32), usize>,
    stalk_memo: HashMap<(usize, i32), usize>,
    hom_memo: HashMap<(usize, usize, i32), usize>,
    module_memo: HashMap<(usize, usize), (usize, usize)>,
}

impl Session {
    pub fn new(alg: Arc<PathAlgebra>) -> Self {
        Session {
            alg,
            pd_cap: DEFAULT_PD_CAP,
            modules: Vec::new(),
            complexes: Vec::new(),
            buckets: HashMap::new(),
            shift_memo: HashMap::new(),
            stalk_memo: HashMap::new(),
            hom_memo: HashMap::new(),
            module_memo: HashMap::new(),
        }
    }

    pub fn module(&self, id: usize) -> &Rep {
        &self.modules[id]
    }

    pub fn modules(&self) -> &[Rep] {
        &self.modules
    }

    pub fn complex(&self, id: usize) -> &PerfComplex {
        &self.complexes[id]
    }

    pub fn complexes(&self) -> &[PerfComplex] {
        &self.complexes
    }

    fn check_alg(&self, a: &PathAlgebra) -> Result<()> {
        if *a != *self.alg {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// Registers an indecomposable module.
    pub fn module_id(&mut self, m: &Rep) -> Result<usize> {
        self.check_alg(&m.alg)?;
        for (i, o) in self.modules.iter().enumerate() {
            if o.dims() == m.dims() && iso_modules(o, m)? {
                return Ok(i);
            }
        }
        self.modules.push(m.clone());
        Ok(self.modules.len() - 1)
    }

    /// Decomposes and registers a module: `(module id, multiplicity)` pairs.
    pub fn register_module(&mut self, m: &Rep) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for (s, k) in decompose(m)? {
            out.push((self.module_id(&s)?, k));
        }
        Ok(out)
    }

    /// Registers the indecomposables found by knitting to `depth`; returns their ids.
    pub fn register_knitted(&mut self, depth: usize) -> Result<Vec<usize>> {
        let alg = self.alg.clone();
        knitted_indecomposables(&alg, depth)?.iter().map(|(m, _)| self.module_id(m)).collect()
    }

    /// Registers a minimal indecomposable complex.
    fn intern(&mut self, c: PerfComplex) -> Result<usize> {
        let sig = signature(&c);
        if let Some(ids) = self.buckets.get(&sig) {
            for &i in ids {
                if iso_minimal(&self.complexes[i], &c)? {
                    return Ok(i);
                }
            }
        }
        self.complexes.push(c);
        let id = self.complexes.len() - 1;
        self.buckets.entry(sig).or_default().push(id);
        Ok(id)
    }

    /// Indecomposable summands of `x` in the homotopy category, with repetition.
    pub fn summands(&mut self, x: &PerfComplex) -> Result<Vec<usize>> {
        self.check_alg(&x.alg)?;
        let m = minimalize(x).complex;
        let mut ids = Vec::new();
        for s in decompose_minimal(&m)? {
            ids.push(self.intern(s)?);
        }
        ids.sort_unstable();
        Ok(ids)
    }

    pub fn candidate(&mut self, x: &PerfComplex) -> Result<SiltCandidate> {
        Ok(SiltCandidate::from_ids(self.summands(x)?))
    }

    /// The direct sum of the summands.
    pub fn object(&self, c: &SiltCandidate) -> PerfComplex {
        let parts: Vec<&PerfComplex> = c.ids.iter().map(|&i| &self.complexes[i]).collect();
        if parts.is_empty() {
            return PerfComplex::zero(&self.alg);
        }
        PerfComplex::direct_sum(&parts).expect("catalog complexes share the algebra")
    }

    pub fn shifted(&mut self, id: usize, k: i32) -> Result<usize> {
        if k == 0 {
            return Ok(id);
        }
        if let Some(&s) = self.shift_memo.get(&(id, k)) {
            return Ok(s);
        }
        let c = self.complexes[id].shift(k);
        let s = self.intern(c)?;
        self.shift_memo.insert((id, k), s);
        self.shift_memo.insert((s, -k), id);
        Ok(s)
    }

    pub fn shift_candidate(&mut self, c: &SiltCandidate, k: i32) -> Result<SiltCandidate> {
        let ids = c.ids.iter().map(|&i| self.shifted(i, k)).collect::<Result<Vec<_>>>()?;
        Ok(SiltCandidate::from_ids(ids))
    }

    /// The complex id of `M[s]` for a registered indecomposable module.
    pub fn stalk_id(&mut self, module: usize, s: i32) -> Result<usize> {
        if let Some(&c) = self.stalk_memo.get(&(module, s)) {
            return Ok(c);
        }
        let base = match self.stalk_memo.get(&(module, 0)) {
            Some(&c) => c,
            None => {
                let st = super::stalk(&self.modules[module], 0, self.pd_cap)?;
                let c = self.intern(minimalize(&st).complex)?;
                self.stalk_memo.insert((module, 0), c);
                c
            }
        };
        let c = self.shifted(base, s)?;
        self.stalk_memo.insert((module, s), c);
        Ok(c)
    }

    /// `dim Hom(C_a, C_b[s])` for catalog complexes.
    pub fn hom(&mut self, a: usize, b: usize, s: i32) -> usize {
        if let Some(&h) = self.hom_memo.get(&(a, b, s)) {
            return h;
        }
        let h = hom_dim(&self.complexes[a], &self.complexes[b], s);
        self.hom_memo.insert((a, b, s), h);
        h
    }

    pub fn hom_cand(&mut self, x: &SiltCandidate, y: &SiltCandidate, s: i32) -> usize {
        let mut t = 0;
        for &a in &x.ids {
            for &b in &y.ids {
                t += self.hom(a, b, s);
            }
        }
        t
    }

    /// `dim Hom(X, T[s])` for an arbitrary complex `T`.
    pub fn hom_into(&self, x: &SiltCandidate, t: &PerfComplex, s: i32) -> usize {
        x.ids.iter().map(|&a| hom_dim(&self.complexes[a], t, s)).sum()
    }

    /// `dim Hom(T, X[s])` for an arbitrary complex `T`.
    pub fn hom_from(&self, t: &PerfComplex, x: &SiltCandidate, s: i32) -> usize {
        x.ids.iter().map(|&a| hom_dim(t, &self.complexes[a], s)).sum()
    }

    /// Shifts `s` at which `Hom(A, B[s])` can be nonzero for catalog complexes.
    pub fn window(&self, a: usize, b: usize) -> (i32, i32) {
        let (x, y) = (&self.complexes[a], &self.complexes[b]);
        let ((xl, xh), (yl, yh)) = (x.range().unwrap(), y.range().unwrap());
        (yl - xh, yh - xl)
    }

    /// `(dim Hom(M, N), dim Ext¹(M, N))` for catalog modules.
    pub fn module_hom_ext(&mut self, m: usize, n: usize) -> Result<(usize, usize)> {
        if let Some(&v) = self.module_memo.get(&(m, n)) {
            return Ok(v);
        }
        let v = (module_hom_dim(&self.modules[m], &self.modules[n])?, ext1(&self.modules[m], &self.modules[n])?);
        self.module_memo.insert((m, n), v);
        Ok(v)
    }

    /// `⊕ H^i(X)[−i]` as a formal sum; hereditary algebras only.
    pub fn dsum_of(&mut self, x: &PerfComplex) -> Result<DSum> {
        if !self.alg.is_hereditary() {
            return Err(Error::NotHereditary("the shifted-module decomposition"));
        }
        self.check_alg(&x.alg)?;
        let mut out = Vec::new();
        for (i, h) in cohomology(x)? {
            for (id, k) in self.register_module(&h)? {
                out.extend(std::iter::repeat_n((id, -i), k));
            }
        }
        out.sort_unstable();
        Ok(DSum(out))
    }

    /// `dim Hom(A, B[s])` from `Hom` and `Ext¹` of the module summands.
    pub fn hom_dsum(&mut self, a: &DSum, b: &DSum, s: i32) -> Result<usize> {
        if !self.alg.is_hereditary() {
            return Err(Error::NotHereditary("Hom between shifted-module sums"));
        }
        let mut t = 0;
        for &(m, i) in &a.0 {
            for &(n, j) in &b.0 {
                let (h, e) = self.module_hom_ext(m, n)?;
                t += match j + s - i {
                    0 => h,
                    1 => e,
                    _ => 0,
                };
            }
        }
        Ok(t)
    }

    /// The complex `⊕ M[s]` of a formal sum.
    pub fn dsum_complex(&mut self, d: &DSum) -> Result<PerfComplex> {
        let ids = d.0.iter().map(|&(m, s)| self.stalk_id(m, s)).collect::<Result<Vec<_>>>()?;
        if ids.is_empty() {
            return Ok(PerfComplex::zero(&self.alg));
        }
        let parts: Vec<&PerfComplex> = ids.iter().map(|&i| &self.complexes[i]).collect();
        PerfComplex::direct_sum(&parts)
    }
}
