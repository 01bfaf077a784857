//! Quivers and bound path algebras with monomial relations.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, Weak};

use crate::error::{Error, Result};
use crate::exactla::Field;

/// Hard cap on path length when certifying finite dimensionality.
pub const PATH_LENGTH_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Quiver {
    /// Vertex ids in declaration order; internal indices are positions here.
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }
}

/// A path, stored with its arrows in traversal order (first arrow first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub src: usize,
    pub tgt: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// `Λ = kQ/I` for an ideal `I` generated by paths.
///
/// Basis paths are ordered by length, then by the sequence of arrow names.
/// `mul(p, q)` is the path `p` followed by `q` (zero when not composable or
/// when the concatenation contains a relation).
pub struct PathAlgebra {
    pub quiver: Quiver,
    /// Zero relations, arrows in traversal order.
    pub relations: Vec<Vec<usize>>,
    pub field: Field,
    paths: Vec<Path>,
    index: HashMap<(usize, Vec<usize>), usize>,
    table: Vec<i32>,
    by_pair: Vec<Vec<Vec<usize>>>,
    pos_in_pair: Vec<usize>,
    trivial: Vec<usize>,
    arrow_path: Vec<usize>,
    opp: OnceLock<Arc<PathAlgebra>>,
    opp_back: OnceLock<Weak<PathAlgebra>>,
}

impl std::fmt::Debug for PathAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PathAlgebra({:?}, rel {:?}, dim {})", self.quiver, self.relations, self.dim())
    }
}

impl PartialEq for PathAlgebra {
    fn eq(&self, o: &Self) -> bool {
        std::ptr::eq(self, o)
            || (self.quiver == o.quiver && self.relations == o.relations && self.field == o.field)
    }
}
impl Eq for PathAlgebra {}

fn contains_relation(arrows: &[usize], rels: &[Vec<usize>]) -> bool {
    rels.iter().any(|r| r.len() <= arrows.len() && arrows.windows(r.len()).any(|w| w == r.as_slice()))
}

impl PathAlgebra {
    /// Builds the algebra, enumerating its path basis. Fails when nonzero paths
    /// exceed [`PATH_LENGTH_CAP`] arrows.
    pub fn new(quiver: Quiver, relations: Vec<Vec<usize>>, field: Field) -> Result<Arc<Self>> {
        for r in &relations {
            if r.len() < 2 {
                return Err(Error::Precondition("relations need at least two arrows".into()));
            }
            for w in r.windows(2) {
                if quiver.arrows[w[0]].tgt != quiver.arrows[w[1]].src {
                    return Err(Error::Precondition("relation is not a composable path".into()));
                }
            }
        }
        let n = quiver.n();
        let mut paths: Vec<Path> = (0..n).map(|v| Path { src: v, tgt: v, arrows: vec![] }).collect();
        let mut frontier: Vec<Path> = paths.clone();
        let mut len = 0;
        while !frontier.is_empty() {
            len += 1;
            if len > PATH_LENGTH_CAP {
                return Err(Error::InfiniteDimensional(PATH_LENGTH_CAP));
            }
            let mut next = Vec::new();
            for p in &frontier {
                for (ai, a) in quiver.arrows.iter().enumerate() {
                    if a.src != p.tgt {
                        continue;
                    }
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    if contains_relation(&arrows, &relations) {
                        continue;
                    }
                    next.push(Path { src: p.src, tgt: a.tgt, arrows });
                }
            }
            let names = |p: &Path| -> Vec<String> {
                p.arrows.iter().map(|&a| quiver.arrows[a].name.clone()).collect()
            };
            next.sort_by_key(names);
            paths.extend(next.iter().cloned());
            frontier = next;
        }
        let dim = paths.len();
        let index: HashMap<(usize, Vec<usize>), usize> =
            paths.iter().enumerate().map(|(i, p)| ((p.src, p.arrows.clone()), i)).collect();
        let mut table = vec![-1i32; dim * dim];
        for (i, p) in paths.iter().enumerate() {
            for (j, q) in paths.iter().enumerate() {
                if p.tgt != q.src {
                    continue;
                }
                let mut arrows = p.arrows.clone();
                arrows.extend(q.arrows.iter().copied());
                if let Some(&k) = index.get(&(p.src, arrows)) {
                    table[i * dim + j] = k as i32;
                }
            }
        }
        let mut by_pair = vec![vec![Vec::new(); n]; n];
        let mut pos_in_pair = vec![0; dim];
        for (i, p) in paths.iter().enumerate() {
            pos_in_pair[i] = by_pair[p.src][p.tgt].len();
            by_pair[p.src][p.tgt].push(i);
        }
        let trivial = (0..n).collect();
        let arrow_path = (0..quiver.arrows.len()).map(|a| index[&(quiver.arrows[a].src, vec![a])]).collect();
        Ok(Arc::new(PathAlgebra {
            quiver,
            relations,
            field,
            paths,
            index,
            table,
            by_pair,
            pos_in_pair,
            trivial,
            arrow_path,
            opp: OnceLock::new(),
            opp_back: OnceLock::new(),
        }))
    }

    pub fn n(&self) -> usize {
        self.quiver.n()
    }

    pub fn dim(&self) -> usize {
        self.paths.len()
    }

    pub fn is_hereditary(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn path(&self, i: usize) -> &Path {
        &self.paths[i]
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn path_index(&self, src: usize, arrows: &[usize]) -> Option<usize> {
        self.index.get(&(src, arrows.to_vec())).copied()
    }

    /// `p` followed by `q`.
    pub fn mul(&self, p: usize, q: usize) -> Option<usize> {
        let k = self.table[p * self.dim() + q];
        (k >= 0).then_some(k as usize)
    }

    /// Basis paths from `i` to `j`.
    pub fn paths_between(&self, i: usize, j: usize) -> &[usize] {
        &self.by_pair[i][j]
    }

    pub fn pos_in_pair(&self, p: usize) -> usize {
        self.pos_in_pair[p]
    }

    pub fn trivial(&self, v: usize) -> usize {
        self.trivial[v]
    }

    pub fn arrow_path(&self, a: usize) -> usize {
        self.arrow_path[a]
    }

    /// Renders a path right-to-left as a composite, `e<v>` for trivial paths.
    pub fn path_name(&self, p: usize) -> String {
        let path = &self.paths[p];
        if path.is_trivial() {
            return format!("e{}", self.quiver.vertices[path.src]);
        }
        path.arrows.iter().rev().map(|&a| self.quiver.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
    }

    /// Parses `b*a` or `e1` into a basis path index; `Ok(None)` for a zero path.
    pub fn parse_path(&self, s: &str) -> Result<Option<usize>> {
        let s = s.trim();
        if let Some(v) = s.strip_prefix('e') {
            if let Some(vi) = self.quiver.vertex_index(v) {
                if self.quiver.arrow_index(s).is_none() {
                    return Ok(Some(self.trivial(vi)));
                }
            }
        }
        let mut arrows = Vec::new();
        for name in s.split('*').rev() {
            let name = name.trim();
            let a = self
                .quiver
                .arrow_index(name)
                .ok_or_else(|| Error::Json(format!("unknown arrow `{name}` in `{s}`")))?;
            arrows.push(a);
        }
        for w in arrows.windows(2) {
            if self.quiver.arrows[w[0]].tgt != self.quiver.arrows[w[1]].src {
                return Err(Error::Json(format!("`{s}` is not a composable path")));
            }
        }
        let src = self.quiver.arrows[arrows[0]].src;
        Ok(self.path_index(src, &arrows))
    }

    /// The opposite algebra: arrows reversed, relations read backwards.
    /// `opposite(opposite(A))` is `A` itself while `A` is alive.
    pub fn opposite(self: &Arc<Self>) -> Arc<PathAlgebra> {
        if let Some(back) = self.opp_back.get().and_then(Weak::upgrade) {
            return back;
        }
        self.opp
            .get_or_init(|| {
                let quiver = Quiver {
                    vertices: self.quiver.vertices.clone(),
                    arrows: self
                        .quiver
                        .arrows
                        .iter()
                        .map(|a| Arrow { name: a.name.clone(), src: a.tgt, tgt: a.src })
                        .collect(),
                };
                let relations = self.relations.iter().map(|r| r.iter().rev().copied().collect()).collect();
                let op = PathAlgebra::new(quiver, relations, self.field).expect("opposite of a valid algebra");
                let _ = op.opp_back.set(Arc::downgrade(self));
                op
            })
            .clone()
    }

    /// Index in `opposite()` of the reversed path.
    pub fn opposite_path(self: &Arc<Self>, p: usize) -> usize {
        let path = &self.paths[p];
        let op = self.opposite();
        let rev: Vec<usize> = path.arrows.iter().rev().copied().collect();
        op.path_index(path.tgt, &rev).expect("reversed basis path is a basis path")
    }

    pub fn with_field(&self, field: Field) -> Result<Arc<PathAlgebra>> {
        PathAlgebra::new(self.quiver.clone(), self.relations.clone(), field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Arc<PathAlgebra> {
        let q = Quiver {
            vertices: vec!["1".into(), "2".into()],
            arrows: vec![Arrow { name: "a".into(), src: 0, tgt: 1 }],
        };
        PathAlgebra::new(q, vec![], Field::Rationals).unwrap()
    }

    #[test]
    fn a2_basis() {
        let a = a2();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.path_name(2), "a");
        assert_eq!(a.mul(0, 2), Some(2));
        assert_eq!(a.mul(2, 1), Some(2));
        assert_eq!(a.mul(2, 0), None);
    }

    #[test]
    fn loop_without_relation_is_infinite() {
        let q = Quiver { vertices: vec!["1".into()], arrows: vec![Arrow { name: "x".into(), src: 0, tgt: 0 }] };
        assert_eq!(PathAlgebra::new(q.clone(), vec![], Field::Rationals).unwrap_err(), Error::InfiniteDimensional(64));
        let a = PathAlgebra::new(q, vec![vec![0, 0]], Field::Rationals).unwrap();
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn opposite_round_trip() {
        let a = a2();
        let op = a.opposite();
        assert_eq!(op.quiver.arrows[0].src, 1);
        assert!(Arc::ptr_eq(&op.opposite(), &a));
        assert_eq!(a.opposite_path(2), op.path_index(1, &[0]).unwrap());
    }
}
