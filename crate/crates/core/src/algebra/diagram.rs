//! Linear diagrams: vector spaces on vertices and linear maps on arrows.
//!
//! Both modules (representations of the quiver) and complexes of modules
//! (with an extra arrow for the differential) are diagrams; homomorphism
//! spaces, subquotients, isomorphism tests and decompositions are computed here
//! once for both.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};

/// Seed shared by every randomized search in the crate.
pub const DEFAULT_SEED: u64 = 0x51_17_1e_5e;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    pub field: Field,
    pub dims: Vec<usize>,
    /// `(source vertex, target vertex)` per arrow.
    pub arrows: Vec<(usize, usize)>,
    /// Per arrow, a `dims[target] × dims[source]` matrix.
    pub maps: Vec<Mat>,
}

/// Per-vertex components of a diagram morphism (`dims_target × dims_source`).
pub type Morph = Vec<Mat>;

impl Diagram {
    pub fn zero_like(&self) -> Diagram {
        Diagram {
            field: self.field,
            dims: vec![0; self.dims.len()],
            arrows: self.arrows.clone(),
            maps: self.arrows.iter().map(|_| Mat::zeros(self.field, 0, 0)).collect(),
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn identity(&self) -> Morph {
        self.dims.iter().map(|&d| Mat::identity(self.field, d)).collect()
    }

    pub fn check(&self) -> Result<()> {
        for (k, &(s, t)) in self.arrows.iter().enumerate() {
            let m = &self.maps[k];
            if m.rows() != self.dims[t] || m.cols() != self.dims[s] {
                return Err(Error::Dim(format!("arrow {k}: {}x{} map", m.rows(), m.cols())));
            }
        }
        Ok(())
    }

    fn same_shape(&self, o: &Diagram) -> Result<()> {
        if self.arrows != o.arrows || self.dims.len() != o.dims.len() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// Basis of `Hom(self, n)`: the solutions of `F_t M_a = N_a F_s` on every arrow.
    pub fn hom_basis(&self, n: &Diagram) -> Result<Vec<Morph>> {
        self.same_shape(n)?;
        let f = self.field;
        let nv = self.dims.len();
        let mut off = vec![0; nv + 1];
        for v in 0..nv {
            off[v + 1] = off[v] + n.dims[v] * self.dims[v];
        }
        let unknowns = off[nv];
        if unknowns == 0 {
            return Ok(vec![]);
        }
        // Unknown (v, i, j) is F_v[i][j], index off[v] + i*dims_m[v] + j.
        let var = |v: usize, i: usize, j: usize| off[v] + i * self.dims[v] + j;
        let mut rows: Vec<Vec<(usize, crate::exactla::Scalar)>> = Vec::new();
        for (k, &(s, t)) in self.arrows.iter().enumerate() {
            let (ma, na) = (&self.maps[k], &n.maps[k]);
            for i in 0..n.dims[t] {
                for j in 0..self.dims[s] {
                    let mut row = Vec::new();
                    for l in 0..self.dims[t] {
                        let c = ma.get(l, j);
                        if !c.is_zero() {
                            row.push((var(t, i, l), c.clone()));
                        }
                    }
                    for l in 0..n.dims[s] {
                        let c = na.get(i, l);
                        if !c.is_zero() {
                            row.push((var(s, l, j), c.neg()));
                        }
                    }
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
        }
        let mut eq = Mat::zeros(f, rows.len(), unknowns);
        for (r, row) in rows.iter().enumerate() {
            for (c, x) in row {
                eq.add_at(r, *c, x);
            }
        }
        let ker = eq.kernel_basis();
        Ok(ker
            .into_iter()
            .map(|vec| {
                (0..nv)
                    .map(|v| {
                        let mut m = Mat::zeros(f, n.dims[v], self.dims[v]);
                        for i in 0..n.dims[v] {
                            for j in 0..self.dims[v] {
                                m.set(i, j, vec[var(v, i, j)].clone());
                            }
                        }
                        m
                    })
                    .collect()
            })
            .collect())
    }

    pub fn is_morphism(&self, n: &Diagram, f: &Morph) -> bool {
        self.arrows.iter().enumerate().all(|(k, &(s, t))| {
            f[t].mul(&self.maps[k]).unwrap() == n.maps[k].mul(&f[s]).unwrap()
        })
    }

    /// Restriction to an invariant subspace given by per-vertex column bases.
    /// Returns the subdiagram and its inclusion.
    pub fn restrict(&self, basis: &[Mat]) -> Result<(Diagram, Morph)> {
        let mut maps = Vec::with_capacity(self.arrows.len());
        let lefts: Vec<Mat> = basis.iter().map(|b| b.left_inverse()).collect::<Result<_>>()?;
        for (k, &(s, t)) in self.arrows.iter().enumerate() {
            maps.push(lefts[t].mul(&self.maps[k].mul(&basis[s])?)?);
        }
        let d = Diagram { field: self.field, dims: basis.iter().map(Mat::cols).collect(), arrows: self.arrows.clone(), maps };
        Ok((d, basis.to_vec()))
    }

    /// Quotient by an invariant subspace. Returns the quotient and the projection.
    pub fn quotient(&self, basis: &[Mat]) -> Result<(Diagram, Morph)> {
        let qs: Vec<Mat> = basis.iter().map(Mat::left_null).collect();
        let rights: Vec<Mat> = qs.iter().map(|q| q.right_inverse()).collect::<Result<_>>()?;
        let mut maps = Vec::with_capacity(self.arrows.len());
        for (k, &(s, t)) in self.arrows.iter().enumerate() {
            maps.push(qs[t].mul(&self.maps[k])?.mul(&rights[s])?);
        }
        let d = Diagram { field: self.field, dims: qs.iter().map(Mat::rows).collect(), arrows: self.arrows.clone(), maps };
        Ok((d, qs))
    }

    /// `sub2 / sub1` for invariant subspaces `sub1 ⊆ sub2` (column bases).
    pub fn subquotient(&self, sub2: &[Mat], sub1: &[Mat]) -> Result<Diagram> {
        let (k, incl) = self.restrict(sub2)?;
        let coords: Vec<Mat> = incl
            .iter()
            .zip(sub1)
            .map(|(b, s)| {
                b.solve_mat(s)?.ok_or_else(|| Error::Precondition("subspaces are not nested".into()))
            })
            .collect::<Result<_>>()?;
        Ok(k.quotient(&coords)?.0)
    }

    pub fn direct_sum(parts: &[&Diagram]) -> Diagram {
        let first = parts[0];
        let nv = first.dims.len();
        let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = first
            .arrows
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                let mut m = Mat::zeros(first.field, dims[t], dims[s]);
                let (mut r0, mut c0) = (0, 0);
                for p in parts {
                    m.put_block(r0, c0, &p.maps[k]);
                    r0 += p.dims[t];
                    c0 += p.dims[s];
                }
                m
            })
            .collect();
        Diagram { field: first.field, dims, arrows: first.arrows.clone(), maps }
    }

    /// Dual diagram on reversed arrows, maps transposed.
    pub fn dual(&self) -> Diagram {
        Diagram {
            field: self.field,
            dims: self.dims.clone(),
            arrows: self.arrows.iter().map(|&(s, t)| (t, s)).collect(),
            maps: self.maps.iter().map(Mat::transpose).collect(),
        }
    }

    /// Isomorphism test: equal dimensions and a random combination of a hom
    /// basis invertible at every vertex (fixed seed, three attempts).
    pub fn is_iso(&self, n: &Diagram) -> Result<bool> {
        self.same_shape(n)?;
        if self.dims != n.dims {
            return Ok(false);
        }
        if self.is_zero() {
            return Ok(true);
        }
        let basis = self.hom_basis(n)?;
        if basis.is_empty() {
            return Ok(false);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
        for _ in 0..3 {
            let f = random_combination(&basis, self.field, &mut rng);
            if f.iter().all(Mat::is_invertible) {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

pub fn random_combination(basis: &[Morph], field: Field, rng: &mut ChaCha8Rng) -> Morph {
    let mut acc: Morph = basis[0].iter().map(|m| Mat::zeros(field, m.rows(), m.cols())).collect();
    for b in basis {
        let c = field.from_i64(rng.gen_range(-1000..=1000));
        for (a, m) in acc.iter_mut().zip(b) {
            *a = a.add(&m.scale(&c)).unwrap();
        }
    }
    acc
}

pub fn compose(g: &Morph, f: &Morph) -> Morph {
    g.iter().zip(f).map(|(a, b)| a.mul(b).unwrap()).collect()
}

/// Per-vertex kernel bases of a morphism.
pub fn kernel(f: &Morph) -> Vec<Mat> {
    f.iter().map(Mat::kernel).collect()
}

/// Per-vertex image bases of a morphism.
pub fn image(f: &Morph) -> Vec<Mat> {
    f.iter().map(Mat::column_space).collect()
}
