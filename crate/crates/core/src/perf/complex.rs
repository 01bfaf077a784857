//! Bounded complexes of finitely generated projectives and chain maps.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{Elem, PathAlgebra, PathMatrix};
use crate::error::{Error, Result};

/// A bounded complex `… → X^n → X^{n+1} → …` of projectives.
///
/// `X^n = ⊕_r P_{term(n)[r]}` and `d(n) : X^n → X^{n+1}` is a [`PathMatrix`].
/// The zero complex has no terms. Nonzero complexes never have empty end terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfComplex {
    pub alg: Arc<PathAlgebra>,
    lo: i32,
    terms: Vec<Vec<usize>>,
    diffs: Vec<PathMatrix>,
}

fn sign(k: i32) -> bool {
    k.rem_euclid(2) == 1
}

impl PerfComplex {
    /// Terms start at degree `lo`; `diffs[k]` goes from degree `lo+k` to `lo+k+1`.
    pub fn new(alg: Arc<PathAlgebra>, lo: i32, terms: Vec<Vec<usize>>, diffs: Vec<PathMatrix>) -> Result<Self> {
        if diffs.len() + 1 != terms.len().max(1) {
            return Err(Error::Dim(format!("{} terms need {} differentials", terms.len(), terms.len().saturating_sub(1))));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.cols != terms[k] || d.rows != terms[k + 1] {
                return Err(Error::Dim(format!("differential at degree {} has the wrong shape", lo + k as i32)));
            }
        }
        for t in &terms {
            if let Some(&v) = t.iter().find(|&&v| v >= alg.n()) {
                return Err(Error::UnknownVertex(v.to_string()));
            }
        }
        for k in 1..diffs.len() {
            if !diffs[k].compose(&diffs[k - 1], &alg)?.is_zero() {
                return Err(Error::NotComplex(lo + k as i32 - 1));
            }
        }
        Ok(Self::from_parts(alg, lo, terms, diffs))
    }

    /// Trusted constructor: trims empty end terms.
    pub(crate) fn from_parts(alg: Arc<PathAlgebra>, mut lo: i32, mut terms: Vec<Vec<usize>>, mut diffs: Vec<PathMatrix>) -> Self {
        while terms.first().is_some_and(Vec::is_empty) {
            terms.remove(0);
            if !diffs.is_empty() {
                diffs.remove(0);
            }
            lo += 1;
        }
        while terms.last().is_some_and(Vec::is_empty) {
            terms.pop();
            diffs.pop();
        }
        if terms.is_empty() {
            lo = 0;
            diffs.clear();
        }
        PerfComplex { alg, lo, terms, diffs }
    }

    pub fn zero(alg: &Arc<PathAlgebra>) -> Self {
        PerfComplex { alg: alg.clone(), lo: 0, terms: vec![], diffs: vec![] }
    }

    /// `⊕_r P_{verts[r]}` concentrated in degree `deg`.
    pub fn projectives(alg: &Arc<PathAlgebra>, verts: &[usize], deg: i32) -> Self {
        Self::from_parts(alg.clone(), deg, vec![verts.to_vec()], vec![])
    }

    /// The regular module `Λ` in degree 0.
    pub fn lambda(alg: &Arc<PathAlgebra>) -> Self {
        Self::projectives(alg, &(0..alg.n()).collect::<Vec<_>>(), 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest and highest nonzero degree.
    pub fn range(&self) -> Option<(i32, i32)> {
        (!self.is_zero()).then(|| (self.lo, self.lo + self.terms.len() as i32 - 1))
    }

    pub fn term(&self, n: i32) -> &[usize] {
        let k = n - self.lo;
        if k < 0 || k as usize >= self.terms.len() {
            return &[];
        }
        &self.terms[k as usize]
    }

    /// `d : X^n → X^{n+1}` (a zero matrix of the right shape outside the range).
    pub fn d(&self, n: i32) -> PathMatrix {
        let k = n - self.lo;
        if k >= 0 && (k as usize) < self.diffs.len() {
            self.diffs[k as usize].clone()
        } else {
            PathMatrix::zero(self.term(n + 1).to_vec(), self.term(n).to_vec())
        }
    }

    pub(crate) fn d_ref(&self, n: i32) -> Option<&PathMatrix> {
        let k = n - self.lo;
        (k >= 0 && (k as usize) < self.diffs.len()).then(|| &self.diffs[k as usize])
    }

    pub fn degrees(&self) -> impl Iterator<Item = i32> + '_ {
        self.lo..self.lo + self.terms.len() as i32
    }

    /// Number of indecomposable projective terms, over all degrees.
    pub fn size(&self) -> usize {
        self.terms.iter().map(Vec::len).sum()
    }

    /// `X[k]`: `X[k]^n = X^{n+k}` with differential `(−1)^k d`.
    pub fn shift(&self, k: i32) -> Self {
        let diffs = if sign(k) { self.diffs.iter().map(PathMatrix::neg).collect() } else { self.diffs.clone() };
        PerfComplex { alg: self.alg.clone(), lo: if self.is_zero() { 0 } else { self.lo - k }, terms: self.terms.clone(), diffs }
    }

    pub fn direct_sum(parts: &[&PerfComplex]) -> Result<Self> {
        let first = parts.first().ok_or_else(|| Error::Precondition("empty direct sum".into()))?;
        if parts.iter().any(|p| *p.alg != *first.alg) {
            return Err(Error::AlgebraMismatch);
        }
        let ranges: Vec<(i32, i32)> = parts.iter().filter_map(|p| p.range()).collect();
        let Some(lo) = ranges.iter().map(|r| r.0).min() else { return Ok(Self::zero(&first.alg)) };
        let hi = ranges.iter().map(|r| r.1).max().unwrap();
        let terms: Vec<Vec<usize>> =
            (lo..=hi).map(|n| parts.iter().flat_map(|p| p.term(n).iter().copied()).collect()).collect();
        let diffs = (lo..hi)
            .map(|n| parts.iter().map(|p| p.d(n)).reduce(|a, b| PathMatrix::block_diag(&a, &b)).unwrap())
            .collect();
        Ok(Self::from_parts(first.alg.clone(), lo, terms, diffs))
    }

    pub fn identity(&self) -> ChainMap {
        let comps = self.degrees().map(|n| (n, PathMatrix::identity(self.term(n).to_vec(), &self.alg))).collect();
        ChainMap { source: self.clone(), target: self.clone(), comps }
    }

    /// A one-line rendering such as `P2 -> P1 @-1`: terms from the lowest degree up.
    pub fn label(&self) -> String {
        let Some((lo, _)) = self.range() else { return "0".into() };
        let q = &self.alg.quiver;
        let terms: Vec<String> = self
            .degrees()
            .map(|n| {
                let t = self.term(n);
                if t.is_empty() {
                    "0".into()
                } else {
                    t.iter().map(|&v| format!("P{}", q.vertices[v])).collect::<Vec<_>>().join("+")
                }
            })
            .collect();
        format!("{} @{lo}", terms.join(" -> "))
    }

    /// `{"range":[a,b], "terms":{deg:[vertex,…]}, "diffs":{deg:[[path expr,…],…]}}`.
    pub fn to_json(&self) -> serde_json::Value {
        let q = &self.alg.quiver;
        let mut terms = serde_json::Map::new();
        let mut diffs = serde_json::Map::new();
        for n in self.degrees() {
            let names: Vec<&str> = self.term(n).iter().map(|&v| q.vertices[v].as_str()).collect();
            terms.insert(n.to_string(), serde_json::json!(names));
            if let Some(d) = self.d_ref(n) {
                let rows: Vec<Vec<String>> = (0..d.rows.len())
                    .map(|r| (0..d.cols.len()).map(|c| d.get(r, c).render(&self.alg)).collect())
                    .collect();
                diffs.insert(n.to_string(), serde_json::json!(rows));
            }
        }
        let range = match self.range() {
            Some((a, b)) => serde_json::json!([a, b]),
            None => serde_json::Value::Null,
        };
        serde_json::json!({ "range": range, "terms": terms, "diffs": diffs })
    }

    pub fn from_json(alg: &Arc<PathAlgebra>, v: &serde_json::Value) -> Result<Self> {
        let bad = |m: &str| Error::Json(m.to_string());
        let (lo, hi) = match &v["range"] {
            serde_json::Value::Null => return Ok(Self::zero(alg)),
            serde_json::Value::Array(a) if a.len() == 2 => (
                a[0].as_i64().ok_or_else(|| bad("range bounds must be integers"))? as i32,
                a[1].as_i64().ok_or_else(|| bad("range bounds must be integers"))? as i32,
            ),
            _ => return Err(bad("`range` must be [lo, hi] or null")),
        };
        if hi < lo {
            return Err(bad("empty range"));
        }
        let mut terms = Vec::new();
        for n in lo..=hi {
            let list = match v["terms"].get(n.to_string()) {
                None => vec![],
                Some(serde_json::Value::Array(a)) => a
                    .iter()
                    .map(|x| {
                        let name = x.as_str().map(str::to_string).unwrap_or_else(|| x.to_string());
                        alg.quiver.vertex_index(&name).ok_or(Error::UnknownVertex(name))
                    })
                    .collect::<Result<Vec<_>>>()?,
                Some(_) => return Err(bad("terms must be arrays of vertex ids")),
            };
            terms.push(list);
        }
        let mut diffs = Vec::new();
        for n in lo..hi {
            let k = (n - lo) as usize;
            let mut m = PathMatrix::zero(terms[k + 1].clone(), terms[k].clone());
            if let Some(rows) = v["diffs"].get(n.to_string()) {
                let rows = rows.as_array().ok_or_else(|| bad("diffs must be nested arrays"))?;
                if rows.len() != m.rows.len() {
                    return Err(Error::Dim(format!("differential at degree {n} has {} rows", rows.len())));
                }
                for (r, row) in rows.iter().enumerate() {
                    let row = row.as_array().ok_or_else(|| bad("diffs must be nested arrays"))?;
                    if row.len() != m.cols.len() {
                        return Err(Error::Dim(format!("differential at degree {n} has a short row")));
                    }
                    for (c, e) in row.iter().enumerate() {
                        let s = e.as_str().ok_or_else(|| bad("entries must be path expressions"))?;
                        m.set(r, c, Elem::parse(s, alg)?);
                    }
                }
            }
            diffs.push(m);
        }
        Self::new(alg.clone(), lo, terms, diffs)
    }
}

/// A chain map; components missing from `comps` are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub source: PerfComplex,
    pub target: PerfComplex,
    pub comps: BTreeMap<i32, PathMatrix>,
}

impl ChainMap {
    pub fn new(source: PerfComplex, target: PerfComplex, comps: BTreeMap<i32, PathMatrix>) -> Result<Self> {
        if *source.alg != *target.alg {
            return Err(Error::AlgebraMismatch);
        }
        let f = ChainMap { source, target, comps };
        for (n, m) in &f.comps {
            if m.cols != f.source.term(*n) || m.rows != f.target.term(*n) {
                return Err(Error::Dim(format!("chain map component at degree {n} has the wrong shape")));
            }
        }
        let alg = &f.source.alg;
        let lo = f.source.range().map_or(0, |r| r.0).min(f.target.range().map_or(0, |r| r.0)) - 1;
        let hi = f.source.range().map_or(0, |r| r.1).max(f.target.range().map_or(0, |r| r.1));
        for n in lo..=hi {
            let a = f.target.d(n).compose(&f.comp(n), alg)?;
            let b = f.comp(n + 1).compose(&f.source.d(n), alg)?;
            if a != b {
                return Err(Error::NotChainMap(n));
            }
        }
        Ok(f)
    }

    pub fn zero(source: &PerfComplex, target: &PerfComplex) -> Self {
        ChainMap { source: source.clone(), target: target.clone(), comps: BTreeMap::new() }
    }

    pub fn comp(&self, n: i32) -> PathMatrix {
        self.comps
            .get(&n)
            .cloned()
            .unwrap_or_else(|| PathMatrix::zero(self.target.term(n).to_vec(), self.source.term(n).to_vec()))
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &ChainMap) -> ChainMap {
        let alg = &self.source.alg;
        let comps = f
            .source
            .degrees()
            .filter_map(|n| {
                let (Some(g), Some(h)) = (self.comps.get(&n), f.comps.get(&n)) else { return None };
                Some((n, g.compose(h, alg).expect("composable chain maps")))
            })
            .collect();
        ChainMap { source: f.source.clone(), target: self.target.clone(), comps }
    }

    pub fn add(&self, o: &ChainMap) -> Result<ChainMap> {
        let mut comps = self.comps.clone();
        for (n, m) in &o.comps {
            let v = match comps.get(n) {
                Some(a) => a.add(m)?,
                None => m.clone(),
            };
            comps.insert(*n, v);
        }
        Ok(ChainMap { source: self.source.clone(), target: self.target.clone(), comps })
    }

    pub fn scale(&self, s: &crate::exactla::Scalar) -> ChainMap {
        ChainMap {
            source: self.source.clone(),
            target: self.target.clone(),
            comps: self.comps.iter().map(|(n, m)| (*n, m.scale(s))).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.values().all(PathMatrix::is_zero)
    }

    /// `f[k] : X[k] → Y[k]`, components `f^{n+k}`.
    pub fn shift(&self, k: i32) -> ChainMap {
        ChainMap {
            source: self.source.shift(k),
            target: self.target.shift(k),
            comps: self.comps.iter().map(|(n, m)| (n - k, m.clone())).collect(),
        }
    }

    /// `[f_1 … f_r] : ⊕ X_i → Y` for maps `f_i : X_i → Y` with a common target.
    pub fn from_sum(maps: &[ChainMap], target: &PerfComplex) -> Result<ChainMap> {
        let sources: Vec<&PerfComplex> = maps.iter().map(|f| &f.source).collect();
        let source = if sources.is_empty() { PerfComplex::zero(&target.alg) } else { PerfComplex::direct_sum(&sources)? };
        let mut comps = BTreeMap::new();
        for n in source.degrees() {
            let mut m = PathMatrix::zero(target.term(n).to_vec(), source.term(n).to_vec());
            let mut off = 0;
            for f in maps {
                let c = f.comp(n);
                for r in 0..c.rows.len() {
                    for k in 0..c.cols.len() {
                        m.set(r, off + k, c.get(r, k).clone());
                    }
                }
                off += c.cols.len();
            }
            if !m.is_zero() {
                comps.insert(n, m);
            }
        }
        Ok(ChainMap { source, target: target.clone(), comps })
    }

    /// `[f_1; …; f_r] : X → ⊕ Y_i` for maps `f_i : X → Y_i` with a common source.
    pub fn into_sum(maps: &[ChainMap], source: &PerfComplex) -> Result<ChainMap> {
        let targets: Vec<&PerfComplex> = maps.iter().map(|f| &f.target).collect();
        let target = if targets.is_empty() { PerfComplex::zero(&source.alg) } else { PerfComplex::direct_sum(&targets)? };
        let mut comps = BTreeMap::new();
        for n in source.degrees() {
            let mut m = PathMatrix::zero(target.term(n).to_vec(), source.term(n).to_vec());
            let mut off = 0;
            for f in maps {
                let c = f.comp(n);
                for r in 0..c.rows.len() {
                    for k in 0..c.cols.len() {
                        m.set(off + r, k, c.get(r, k).clone());
                    }
                }
                off += c.rows.len();
            }
            if !m.is_zero() {
                comps.insert(n, m);
            }
        }
        Ok(ChainMap { source: source.clone(), target, comps })
    }

    /// Components at every degree are invertible modulo the radical.
    pub fn is_iso_of_complexes(&self) -> bool {
        let alg = &self.source.alg;
        let lo = self.source.range().map_or(0, |r| r.0).min(self.target.range().map_or(0, |r| r.0));
        let hi = self.source.range().map_or(-1, |r| r.1).max(self.target.range().map_or(-1, |r| r.1));
        (lo..=hi).all(|n| {
            let m = self.comp(n);
            if m.rows.len() != m.cols.len() {
                return false;
            }
            (0..alg.n()).all(|j| top_matrix(&m, alg, j).is_invertible())
        })
    }
}

/// The matrix of trivial-path coefficients between summands at vertex `j`.
fn top_matrix(m: &PathMatrix, alg: &PathAlgebra, j: usize) -> crate::exactla::Mat {
    let rs: Vec<usize> = (0..m.rows.len()).filter(|&r| m.rows[r] == j).collect();
    let cs: Vec<usize> = (0..m.cols.len()).filter(|&c| m.cols[c] == j).collect();
    let mut t = crate::exactla::Mat::zeros(alg.field, rs.len(), cs.len());
    for (i, &r) in rs.iter().enumerate() {
        for (k, &c) in cs.iter().enumerate() {
            t.set(i, k, m.get(r, c).trivial_coeff(alg, j));
        }
    }
    t
}

/// A distinguished triangle `X --f--> Y --i--> C --p--> X[1]` with `C = cone(f)`.
#[derive(Clone, Debug)]
pub struct Triangle {
    pub f: ChainMap,
    pub cone: PerfComplex,
    pub i: ChainMap,
    pub p: ChainMap,
}

/// `C^n = X^{n+1} ⊕ Y^n`, `d_C = [[−d_X, 0], [f, d_Y]]`.
pub fn cone(f: &ChainMap) -> Triangle {
    let (x, y) = (&f.source, &f.target);
    let alg = &x.alg;
    let lo = x.range().map_or(i32::MAX, |r| r.0 - 1).min(y.range().map_or(i32::MAX, |r| r.0));
    let hi = x.range().map_or(i32::MIN, |r| r.1 - 1).max(y.range().map_or(i32::MIN, |r| r.1));
    if lo > hi {
        let z = PerfComplex::zero(alg);
        return Triangle { f: f.clone(), cone: z.clone(), i: ChainMap::zero(y, &z), p: ChainMap::zero(&z, &x.shift(1)) };
    }
    let terms: Vec<Vec<usize>> = (lo..=hi).map(|n| [x.term(n + 1), y.term(n)].concat()).collect();
    let diffs = (lo..hi)
        .map(|n| {
            let top_right = PathMatrix::zero(x.term(n + 2).to_vec(), y.term(n).to_vec());
            PathMatrix::blocks(&x.d(n + 1).neg(), &top_right, &f.comp(n + 1), &y.d(n))
        })
        .collect();
    let c = PerfComplex::from_parts(alg.clone(), lo, terms.clone(), diffs);
    let x1 = x.shift(1);
    let mut icomps = BTreeMap::new();
    let mut pcomps = BTreeMap::new();
    for n in lo..=hi {
        let (nx, ny) = (x.term(n + 1).len(), y.term(n).len());
        if ny > 0 {
            let mut m = PathMatrix::zero(c.term(n).to_vec(), y.term(n).to_vec());
            for k in 0..ny {
                m.set(nx + k, k, Elem::path(alg.trivial(y.term(n)[k]), alg.field.one()));
            }
            icomps.insert(n, m);
        }
        if nx > 0 {
            let mut m = PathMatrix::zero(x1.term(n).to_vec(), c.term(n).to_vec());
            for k in 0..nx {
                m.set(k, k, Elem::path(alg.trivial(x.term(n + 1)[k]), alg.field.one()));
            }
            pcomps.insert(n, m);
        }
    }
    Triangle {
        f: f.clone(),
        i: ChainMap { source: y.clone(), target: c.clone(), comps: icomps },
        p: ChainMap { source: c.clone(), target: x1, comps: pcomps },
        cone: c,
    }
}

/// `cocone(f) = cone(f)[−1]` with its map to the source of `f`.
pub fn cocone(f: &ChainMap) -> (PerfComplex, ChainMap) {
    let t = cone(f);
    let w = t.cone.shift(-1);
    (w, t.p.shift(-1))
}
