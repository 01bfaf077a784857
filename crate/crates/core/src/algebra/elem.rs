//! Algebra elements and matrices of them (maps between free modules).

use super::quiver::PathAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat, Rat, Scalar};

/// A linear combination of basis paths, sorted by path index, no zero terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Elem(pub Vec<(usize, Scalar)>);

impl Elem {
    pub fn zero() -> Elem {
        Elem(Vec::new())
    }

    pub fn path(p: usize, c: Scalar) -> Elem {
        if c.is_zero() {
            Elem::zero()
        } else {
            Elem(vec![(p, c)])
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn normalize(mut terms: Vec<(usize, Scalar)>) -> Elem {
        terms.sort_by_key(|t| t.0);
        let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(terms.len());
        for (p, c) in terms {
            match out.last_mut() {
                Some((q, d)) if *q == p => *d = d.add(&c),
                _ => out.push((p, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Elem(out)
    }

    pub fn add(&self, o: &Elem) -> Elem {
        let mut t = self.0.clone();
        t.extend(o.0.iter().cloned());
        Elem::normalize(t)
    }

    pub fn neg(&self) -> Elem {
        Elem(self.0.iter().map(|(p, c)| (*p, c.neg())).collect())
    }

    pub fn sub(&self, o: &Elem) -> Elem {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Elem {
        if s.is_zero() {
            return Elem::zero();
        }
        Elem(self.0.iter().map(|(p, c)| (*p, c.mul(s))).collect())
    }

    /// `self` followed by `o`.
    pub fn mul(&self, o: &Elem, alg: &PathAlgebra) -> Elem {
        let mut t = Vec::new();
        for (p, a) in &self.0 {
            for (q, b) in &o.0 {
                if let Some(r) = alg.mul(*p, *q) {
                    t.push((r, a.mul(b)));
                }
            }
        }
        Elem::normalize(t)
    }

    /// Coefficient of the trivial path at `v`.
    pub fn trivial_coeff(&self, alg: &PathAlgebra, v: usize) -> Scalar {
        let e = alg.trivial(v);
        self.0.iter().find(|t| t.0 == e).map(|t| t.1.clone()).unwrap_or_else(|| alg.field.zero())
    }

    /// Renders e.g. `2*b*a - c`; `0` for zero.
    pub fn render(&self, alg: &PathAlgebra) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (p, c)) in self.0.iter().enumerate() {
            let (neg, mag) = match c {
                Scalar::Q(r) if *r < Rat::zero() => (true, Scalar::Q(r.neg())),
                _ => (false, c.clone()),
            };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                s.push_str(&format!("{mag}*"));
            }
            s.push_str(&alg.path_name(*p));
        }
        s
    }

    /// Parses the output of [`Elem::render`]; whitespace is insignificant.
    pub fn parse(s: &str, alg: &PathAlgebra) -> Result<Elem> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" {
            return Ok(Elem::zero());
        }
        let mut raw: Vec<(i64, String)> = Vec::new();
        let mut sign = 1;
        let mut cur = String::new();
        for ch in s.chars() {
            if ch == '+' || ch == '-' {
                if !cur.is_empty() {
                    raw.push((sign, std::mem::take(&mut cur)));
                }
                sign = if ch == '-' { -1 } else { 1 };
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(Error::Json(format!("dangling sign in `{s}`")));
        }
        raw.push((sign, cur));
        let mut terms = Vec::new();
        for (sign, term) in raw {
            let mut coef = alg.field.from_i64(sign);
            let mut path_part = term.as_str();
            if let Some((c, p)) = term.split_once('*') {
                if alg.quiver.arrow_index(c).is_none() {
                    if let Ok(r) = c.parse::<Rat>() {
                        let cs = alg
                            .field
                            .from_rat(&r)
                            .ok_or_else(|| Error::Json(format!("coefficient `{c}` undefined in field")))?;
                        coef = coef.mul(&cs);
                        path_part = p;
                    }
                }
            }
            match alg.parse_path(path_part)? {
                Some(p) => terms.push((p, coef)),
                None => return Err(Error::Json(format!("`{path_part}` is zero in the algebra"))),
            }
        }
        Ok(Elem::normalize(terms))
    }
}

/// A map `⊕_c P_{cols[c]} → ⊕_r P_{rows[r]}` between free modules.
///
/// Entry `(r, c)` is a combination of paths from `rows[r]` to `cols[c]`; a
/// path `q` sends `p ∈ P_{cols[c]}` to `q·p`. Composition `G∘F` multiplies
/// entries as `G(r,k)` followed by `F(k,c)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathMatrix {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub entries: Vec<Elem>,
}

impl PathMatrix {
    pub fn zero(rows: Vec<usize>, cols: Vec<usize>) -> PathMatrix {
        let n = rows.len() * cols.len();
        PathMatrix { rows, cols, entries: vec![Elem::zero(); n] }
    }

    pub fn identity(v: Vec<usize>, alg: &PathAlgebra) -> PathMatrix {
        let mut m = PathMatrix::zero(v.clone(), v.clone());
        for (i, &x) in v.iter().enumerate() {
            m.set(i, i, Elem::path(alg.trivial(x), alg.field.one()));
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &Elem {
        &self.entries[r * self.cols.len() + c]
    }

    pub fn set(&mut self, r: usize, c: usize, e: Elem) {
        let n = self.cols.len();
        self.entries[r * n + c] = e;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Elem::is_zero)
    }

    pub fn neg(&self) -> PathMatrix {
        PathMatrix { entries: self.entries.iter().map(Elem::neg).collect(), ..self.clone() }
    }

    pub fn scale(&self, s: &Scalar) -> PathMatrix {
        PathMatrix { entries: self.entries.iter().map(|e| e.scale(s)).collect(), ..self.clone() }
    }

    pub fn add(&self, o: &PathMatrix) -> Result<PathMatrix> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::Dim("path matrix sum shape".into()));
        }
        Ok(PathMatrix {
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a.add(b)).collect(),
            ..self.clone()
        })
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &PathMatrix, alg: &PathAlgebra) -> Result<PathMatrix> {
        if self.cols != f.rows {
            return Err(Error::Dim(format!("compose {:?} after {:?}", self.cols, f.rows)));
        }
        let mut out = PathMatrix::zero(self.rows.clone(), f.cols.clone());
        for r in 0..self.rows.len() {
            for k in 0..self.cols.len() {
                let g = self.get(r, k);
                if g.is_zero() {
                    continue;
                }
                for c in 0..f.cols.len() {
                    let h = f.get(k, c);
                    if h.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c).add(&g.mul(h, alg));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> PathMatrix {
        let mut m = PathMatrix::zero(
            rows.iter().map(|&r| self.rows[r]).collect(),
            cols.iter().map(|&c| self.cols[c]).collect(),
        );
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m.set(i, j, self.get(r, c).clone());
            }
        }
        m
    }

    /// Block diagonal sum.
    pub fn block_diag(a: &PathMatrix, b: &PathMatrix) -> PathMatrix {
        let rows: Vec<usize> = a.rows.iter().chain(&b.rows).copied().collect();
        let cols: Vec<usize> = a.cols.iter().chain(&b.cols).copied().collect();
        let mut m = PathMatrix::zero(rows, cols);
        for r in 0..a.rows.len() {
            for c in 0..a.cols.len() {
                m.set(r, c, a.get(r, c).clone());
            }
        }
        for r in 0..b.rows.len() {
            for c in 0..b.cols.len() {
                m.set(a.rows.len() + r, a.cols.len() + c, b.get(r, c).clone());
            }
        }
        m
    }

    /// `[[a, b], [c, d]]` with rows `a.rows ++ c.rows` and cols `a.cols ++ b.cols`.
    pub fn blocks(a: &PathMatrix, b: &PathMatrix, c: &PathMatrix, d: &PathMatrix) -> PathMatrix {
        let rows: Vec<usize> = a.rows.iter().chain(&c.rows).copied().collect();
        let cols: Vec<usize> = a.cols.iter().chain(&b.cols).copied().collect();
        let mut m = PathMatrix::zero(rows, cols);
        let (ar, ac) = (a.rows.len(), a.cols.len());
        for (blk, r0, c0) in [(a, 0, 0), (b, 0, ac), (c, ar, 0), (d, ar, ac)] {
            for r in 0..blk.rows.len() {
                for cc in 0..blk.cols.len() {
                    m.set(r0 + r, c0 + cc, blk.get(r, cc).clone());
                }
            }
        }
        m
    }

    /// The linear map at vertex `j`, in the bases of paths `cols[c] → j`
    /// (concatenated in column order) and `rows[r] → j`.
    pub fn at_vertex(&self, j: usize, alg: &PathAlgebra) -> Mat {
        let field = alg.field;
        let roff = offsets(&self.rows, j, alg);
        let coff = offsets(&self.cols, j, alg);
        let mut m = Mat::zeros(field, *roff.last().unwrap(), *coff.last().unwrap());
        for (c, &cv) in self.cols.iter().enumerate() {
            for &p in alg.paths_between(cv, j) {
                let col = coff[c] + alg.pos_in_pair(p);
                for r in 0..self.rows.len() {
                    for (q, coef) in &self.get(r, c).0 {
                        if let Some(t) = alg.mul(*q, p) {
                            m.add_at(roff[r] + alg.pos_in_pair(t), col, coef);
                        }
                    }
                }
            }
        }
        m
    }

    /// True when no entry has a nonzero trivial-path coefficient.
    pub fn is_radical(&self, alg: &PathAlgebra) -> bool {
        self.entries.iter().all(|e| e.0.iter().all(|(p, _)| !alg.path(*p).is_trivial()))
    }

    pub fn field_of(alg: &PathAlgebra) -> Field {
        alg.field
    }
}

/// Prefix offsets of `⊕ P_{v}` at vertex `j`; last element is the total dimension.
pub fn offsets(verts: &[usize], j: usize, alg: &PathAlgebra) -> Vec<usize> {
    let mut out = Vec::with_capacity(verts.len() + 1);
    let mut acc = 0;
    out.push(0);
    for &v in verts {
        acc += alg.paths_between(v, j).len();
        out.push(acc);
    }
    out
}

/// Splits a vector of `(⊕_r P_{verts[r]})_j` into one element per summand.
pub fn vector_to_elems(verts: &[usize], j: usize, v: &[Scalar], alg: &PathAlgebra) -> Vec<Elem> {
    let off = offsets(verts, j, alg);
    verts
        .iter()
        .enumerate()
        .map(|(r, &rv)| {
            let terms: Vec<(usize, Scalar)> = alg
                .paths_between(rv, j)
                .iter()
                .enumerate()
                .filter(|(k, _)| !v[off[r] + k].is_zero())
                .map(|(k, &p)| (p, v[off[r] + k].clone()))
                .collect();
            Elem::normalize(terms)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::dsl::parse_algebra;

    #[test]
    fn render_parse_round_trip() {
        let a = parse_algebra("vertices 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 1 -> 3", Field::Rationals)
            .unwrap();
        let ba = a.parse_path("b*a").unwrap().unwrap();
        let c = a.parse_path("c").unwrap().unwrap();
        let e = Elem::path(ba, a.field.from_i64(2)).sub(&Elem::path(c, a.field.one()));
        let s = e.render(&a);
        assert_eq!(s, "-c + 2*b*a");
        assert_eq!(Elem::parse(&s, &a).unwrap(), e);
        assert_eq!(Elem::parse("2*b*a - c", &a).unwrap(), e);
        assert_eq!(Elem::parse("e1", &a).unwrap(), Elem::path(0, a.field.one()));
    }

    #[test]
    fn composition_follows_convention() {
        let a = parse_algebra("vertices 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3", Field::Rationals).unwrap();
        let pa = a.parse_path("a").unwrap().unwrap();
        let pb = a.parse_path("b").unwrap().unwrap();
        // F: P2 -> P1 given by a (path 1 -> 2); G: P1 -> ? no. Use H: P3 -> P2 by b.
        let mut f = PathMatrix::zero(vec![0], vec![1]);
        f.set(0, 0, Elem::path(pa, a.field.one()));
        let mut h = PathMatrix::zero(vec![1], vec![2]);
        h.set(0, 0, Elem::path(pb, a.field.one()));
        let fh = f.compose(&h, &a).unwrap();
        assert_eq!(fh.get(0, 0).render(&a), "b*a");
    }
}
