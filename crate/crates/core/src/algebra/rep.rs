//! Modules as quiver representations.

use std::sync::Arc;

use super::diagram::{Diagram, Morph};
use super::elem::PathMatrix;
use super::quiver::PathAlgebra;
use crate::error::{Error, Result};
use crate::exactla::Mat;

/// A finite-dimensional module: a space per vertex and a matrix per arrow.
///
/// `P_i` has vertex-`j` space spanned by the paths `i → j`; consequently
/// `Hom(P_i, P_j)` is spanned by the paths `j → i`.
#[derive(Clone, Debug)]
pub struct Rep {
    pub alg: Arc<PathAlgebra>,
    pub diagram: Diagram,
}

/// A module homomorphism with per-vertex components.
#[derive(Clone, Debug)]
pub struct RepMap {
    pub source: Rep,
    pub target: Rep,
    pub comps: Morph,
}

fn arrows_of(alg: &PathAlgebra) -> Vec<(usize, usize)> {
    alg.quiver.arrows.iter().map(|a| (a.src, a.tgt)).collect()
}

impl Rep {
    /// Validates shapes and relations.
    pub fn new(alg: Arc<PathAlgebra>, dims: Vec<usize>, maps: Vec<Mat>) -> Result<Rep> {
        if dims.len() != alg.n() || maps.len() != alg.quiver.arrows.len() {
            return Err(Error::Dim("representation shape does not match the quiver".into()));
        }
        let diagram = Diagram { field: alg.field, dims, arrows: arrows_of(&alg), maps };
        diagram.check()?;
        let r = Rep { alg, diagram };
        for rel in &r.alg.relations {
            if !r.path_map(rel).is_zero() {
                let names: Vec<&str> = rel.iter().rev().map(|&a| r.alg.quiver.arrows[a].name.as_str()).collect();
                return Err(Error::RelationViolated(names.join("*")));
            }
        }
        Ok(r)
    }

    pub(crate) fn from_diagram(alg: Arc<PathAlgebra>, diagram: Diagram) -> Rep {
        Rep { alg, diagram }
    }

    pub fn zero(alg: &Arc<PathAlgebra>) -> Rep {
        let n = alg.n();
        Rep::new(
            alg.clone(),
            vec![0; n],
            alg.quiver.arrows.iter().map(|_| Mat::zeros(alg.field, 0, 0)).collect(),
        )
        .unwrap()
    }

    pub fn dims(&self) -> &[usize] {
        &self.diagram.dims
    }

    pub fn total_dim(&self) -> usize {
        self.diagram.total_dim()
    }

    pub fn is_zero(&self) -> bool {
        self.diagram.is_zero()
    }

    pub fn map(&self, a: usize) -> &Mat {
        &self.diagram.maps[a]
    }

    /// Matrix of a path given by arrows in traversal order.
    pub fn path_map(&self, arrows: &[usize]) -> Mat {
        let alg = &self.alg;
        let Some(&first) = arrows.first() else { unreachable!("trivial paths have no arrows") };
        let mut m = self.map(first).clone();
        for &a in &arrows[1..] {
            m = self.map(a).mul(&m).unwrap();
        }
        debug_assert_eq!(m.cols(), self.dims()[alg.quiver.arrows[first].src]);
        m
    }

    /// Matrix of a basis path (identity for trivial paths).
    pub fn basis_path_map(&self, p: usize) -> Mat {
        let path = self.alg.path(p);
        if path.is_trivial() {
            Mat::identity(self.alg.field, self.dims()[path.src])
        } else {
            self.path_map(&path.arrows)
        }
    }

    fn same_alg(&self, o: &Rep) -> Result<()> {
        if *self.alg != *o.alg {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn direct_sum(parts: &[&Rep]) -> Result<Rep> {
        let first = parts.first().ok_or_else(|| Error::Precondition("empty direct sum".into()))?;
        for p in parts {
            first.same_alg(p)?;
        }
        let ds: Vec<&Diagram> = parts.iter().map(|p| &p.diagram).collect();
        Ok(Rep::from_diagram(first.alg.clone(), Diagram::direct_sum(&ds)))
    }

    /// `D = Hom_k(−, k)`, a module over the opposite algebra.
    pub fn dual(&self) -> Rep {
        Rep::from_diagram(self.alg.opposite(), self.diagram.dual())
    }

    pub fn identity(&self) -> RepMap {
        RepMap { source: self.clone(), target: self.clone(), comps: self.diagram.identity() }
    }
}

impl RepMap {
    pub fn new(source: Rep, target: Rep, comps: Morph) -> Result<RepMap> {
        source.same_alg(&target)?;
        if !source.diagram.is_morphism(&target.diagram, &comps) {
            return Err(Error::Precondition("components do not intertwine the arrow maps".into()));
        }
        Ok(RepMap { source, target, comps })
    }

    pub fn compose(&self, f: &RepMap) -> RepMap {
        RepMap {
            source: f.source.clone(),
            target: self.target.clone(),
            comps: super::diagram::compose(&self.comps, &f.comps),
        }
    }

    pub fn is_iso(&self) -> bool {
        self.comps.iter().all(Mat::is_invertible)
    }
}

/// The indecomposable projective `P_i`.
pub fn projective(alg: &Arc<PathAlgebra>, i: usize) -> Result<Rep> {
    if i >= alg.n() {
        return Err(Error::UnknownVertex(i.to_string()));
    }
    Ok(free_module(alg, &[i]))
}

/// `⊕_r P_{verts[r]}` in the path bases used by [`PathMatrix::at_vertex`].
pub fn free_module(alg: &Arc<PathAlgebra>, verts: &[usize]) -> Rep {
    let f = alg.field;
    let n = alg.n();
    let dims: Vec<usize> = (0..n).map(|j| verts.iter().map(|&v| alg.paths_between(v, j).len()).sum()).collect();
    let maps = alg
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let ap = alg.arrow_path(ai);
            let mut m = Mat::zeros(f, dims[a.tgt], dims[a.src]);
            let (mut r0, mut c0) = (0, 0);
            for &v in verts {
                for &p in alg.paths_between(v, a.src) {
                    if let Some(q) = alg.mul(p, ap) {
                        m.set(r0 + alg.pos_in_pair(q), c0 + alg.pos_in_pair(p), f.one());
                    }
                }
                r0 += alg.paths_between(v, a.tgt).len();
                c0 += alg.paths_between(v, a.src).len();
            }
            m
        })
        .collect();
    Rep::from_diagram(alg.clone(), Diagram { field: f, dims, arrows: arrows_of(alg), maps })
}

/// The map of free modules given by a path matrix.
pub fn free_map(alg: &Arc<PathAlgebra>, m: &PathMatrix) -> RepMap {
    RepMap {
        source: free_module(alg, &m.cols),
        target: free_module(alg, &m.rows),
        comps: (0..alg.n()).map(|j| m.at_vertex(j, alg)).collect(),
    }
}

pub fn simple(alg: &Arc<PathAlgebra>, i: usize) -> Result<Rep> {
    if i >= alg.n() {
        return Err(Error::UnknownVertex(i.to_string()));
    }
    let mut dims = vec![0; alg.n()];
    dims[i] = 1;
    let maps = alg.quiver.arrows.iter().map(|a| Mat::zeros(alg.field, dims[a.tgt], dims[a.src])).collect();
    Rep::new(alg.clone(), dims, maps)
}

/// The indecomposable injective `I_i = D(P_i^op)`.
pub fn injective(alg: &Arc<PathAlgebra>, i: usize) -> Result<Rep> {
    let op = alg.opposite();
    Ok(projective(&op, i)?.dual())
}

/// Basis of `Hom(M, N)`.
pub fn hom_modules(m: &Rep, n: &Rep) -> Result<Vec<RepMap>> {
    m.same_alg(n)?;
    Ok(m.diagram
        .hom_basis(&n.diagram)?
        .into_iter()
        .map(|comps| RepMap { source: m.clone(), target: n.clone(), comps })
        .collect())
}

pub fn hom_dim(m: &Rep, n: &Rep) -> Result<usize> {
    m.same_alg(n)?;
    Ok(m.diagram.hom_basis(&n.diagram)?.len())
}

pub fn iso_modules(m: &Rep, n: &Rep) -> Result<bool> {
    m.same_alg(n)?;
    m.diagram.is_iso(&n.diagram)
}

/// Krull–Schmidt decomposition into `(indecomposable, multiplicity)`.
pub fn decompose(m: &Rep) -> Result<Vec<(Rep, usize)>> {
    Ok(super::decompose::decompose(&m.diagram)?
        .into_iter()
        .map(|(d, k)| (Rep::from_diagram(m.alg.clone(), d), k))
        .collect())
}
