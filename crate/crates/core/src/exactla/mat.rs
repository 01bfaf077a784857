//! Dense exact matrices.

use std::fmt;

use super::scalar::{Field, Rat, Scalar};
use crate::error::{Error, Result};

/// Row-major dense matrix over a fixed field. `0×n` and `n×0` shapes are legal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form with the pivot column of each nonzero row.
#[derive(Clone, Debug)]
pub struct Rref {
    pub mat: Mat,
    pub pivots: Vec<usize>,
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, field, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_i64(field: Field, rows: &[Vec<i64>]) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Mat::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, field.from_i64(*v));
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_cols(field: Field, rows: usize, cols: &[Vec<Scalar>]) -> Mat {
        let mut m = Mat::zeros(field, rows, cols.len());
        for (j, v) in cols.iter().enumerate() {
            assert_eq!(v.len(), rows);
            for (i, x) in v.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &Scalar) {
        let i = r * self.cols + c;
        self.data[i] = self.data[i].add(v);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    fn check_same(&self, o: &Mat) -> Result<()> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::Dim(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &Mat) -> Result<Mat> {
        self.check_same(o)?;
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect();
        Ok(Mat { data, ..*self })
    }

    pub fn sub(&self, o: &Mat) -> Result<Mat> {
        self.check_same(o)?;
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect();
        Ok(Mat { data, ..*self })
    }

    pub fn neg(&self) -> Mat {
        Mat { data: self.data.iter().map(Scalar::neg).collect(), ..*self }
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat { data: self.data.iter().map(|x| x.mul(s)).collect(), ..*self }
    }

    pub fn mul(&self, o: &Mat) -> Result<Mat> {
        if self.cols != o.rows {
            return Err(Error::Dim(format!(
                "product {}x{} * {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Mat::zeros(self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, &a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::Dim(format!("{}x{} * vector of {}", self.rows, self.cols, v.len())));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut s = self.field.zero();
                for (k, x) in v.iter().enumerate() {
                    let a = self.get(i, k);
                    if !a.is_zero() && !x.is_zero() {
                        s = s.add(&a.mul(x));
                    }
                }
                s
            })
            .collect())
    }

    /// `[self | o]`.
    pub fn hstack(&self, o: &Mat) -> Result<Mat> {
        if self.rows != o.rows {
            return Err(Error::Dim(format!("hstack rows {} vs {}", self.rows, o.rows)));
        }
        let mut m = Mat::zeros(self.field, self.rows, self.cols + o.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).clone());
            }
            for c in 0..o.cols {
                m.set(r, self.cols + c, o.get(r, c).clone());
            }
        }
        Ok(m)
    }

    pub fn vstack(&self, o: &Mat) -> Result<Mat> {
        if self.cols != o.cols {
            return Err(Error::Dim(format!("vstack cols {} vs {}", self.cols, o.cols)));
        }
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Ok(Mat { rows: self.rows + o.rows, cols: self.cols, field: self.field, data })
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        let mut m = Mat::zeros(self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.set(r, j, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let mut m = Mat::zeros(self.field, idx.len(), self.cols);
        for (i, &r) in idx.iter().enumerate() {
            for c in 0..self.cols {
                m.set(i, c, self.get(r, c).clone());
            }
        }
        m
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn put_block(&mut self, r0: usize, c0: usize, block: &Mat) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        let mut m = Mat::zeros(self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, self.get(r0 + r, c0 + c).clone());
            }
        }
        m
    }

    pub fn trace(&self) -> Scalar {
        let mut s = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            s = s.add(self.get(i, i));
        }
        s
    }

    /// Rank. Over Q this uses fraction-free (Bareiss) elimination on an integer
    /// scaling of the rows; over F_p plain Gaussian elimination.
    pub fn rank(&self) -> usize {
        match self.field {
            Field::Rationals => self.rank_bareiss(),
            Field::Prime(_) => self.rref().pivots.len(),
        }
    }

    fn rank_bareiss(&self) -> usize {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::One;
        let (m, n) = (self.rows, self.cols);
        if m == 0 || n == 0 {
            return 0;
        }
        // Scale rows to integer vectors.
        let mut a: Vec<Vec<Rat>> = (0..m)
            .map(|r| {
                let row: Vec<Rat> = self.row(r).iter().map(|x| x.as_rat().unwrap().clone()).collect();
                let mut l = BigInt::one();
                for x in &row {
                    if !x.is_integer() {
                        l = l.lcm(&x.denom());
                    }
                }
                if l.is_one() {
                    row
                } else {
                    let s = Rat::from_bigint(l);
                    row.iter().map(|x| x.mul(&s)).collect()
                }
            })
            .collect();
        let mut prev = Rat::one();
        let mut rank = 0;
        let mut col = 0;
        while rank < m && col < n {
            let Some(p) = (rank..m).find(|&i| !a[i][col].is_zero()) else {
                col += 1;
                continue;
            };
            a.swap(rank, p);
            let piv = a[rank][col].clone();
            for i in rank + 1..m {
                let f = a[i][col].clone();
                for j in col + 1..n {
                    let v = piv.mul(&a[i][j]).sub(&f.mul(&a[rank][j]));
                    a[i][j] = v.div(&prev).unwrap();
                }
                a[i][col] = Rat::zero();
            }
            prev = piv;
            rank += 1;
            col += 1;
        }
        rank
    }

    /// Reduced row echelon form with deterministic pivoting (first nonzero entry
    /// in column order).
    pub fn rref(&self) -> Rref {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = a.get(r, c).inv().unwrap();
            for j in c..a.cols {
                let v = a.get(r, j).mul(&inv);
                a.set(r, j, v);
            }
            for i in 0..a.rows {
                if i == r {
                    continue;
                }
                let f = a.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..a.cols {
                    let rv = a.get(r, j);
                    if rv.is_zero() {
                        continue;
                    }
                    let v = a.get(i, j).sub(&f.mul(rv));
                    a.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { mat: a, pivots }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    /// Basis of the null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let Rref { mat, pivots } = self.rref();
        let mut is_piv = vec![false; self.cols];
        for &p in &pivots {
            is_piv[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_piv[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = mat.get(r, free).neg();
            }
            out.push(v);
        }
        out
    }

    /// Kernel basis as the columns of a matrix.
    pub fn kernel(&self) -> Mat {
        Mat::from_cols(self.field, self.cols, &self.kernel_basis())
    }

    /// A solution of `self · x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::Dim(format!("solve: {} rows vs rhs of {}", self.rows, b.len())));
        }
        let aug = self.hstack(&Mat::from_cols(self.field, self.rows, &[b.to_vec()]))?;
        let Rref { mat, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = mat.get(r, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Solves `self · X = B` column by column.
    pub fn solve_mat(&self, b: &Mat) -> Result<Option<Mat>> {
        if b.rows != self.rows {
            return Err(Error::Dim(format!("solve: {} rows vs rhs of {}", self.rows, b.rows)));
        }
        let aug = self.hstack(b)?;
        let Rref { mat, pivots } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Mat::zeros(self.field, self.cols, b.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, mat.get(r, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    /// Indices of a maximal set of linearly independent columns (leftmost first).
    pub fn pivot_cols(&self) -> Vec<usize> {
        self.rref().pivots
    }

    /// A basis of the column space, taken from the columns themselves.
    pub fn column_space(&self) -> Mat {
        self.select_cols(&self.pivot_cols())
    }

    /// Rows spanning the left null space: `Q · self = 0`, `rank Q = rows − rank`.
    pub fn left_null(&self) -> Mat {
        let k = self.transpose().kernel_basis();
        let mut q = Mat::zeros(self.field, k.len(), self.rows);
        for (i, v) in k.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                q.set(i, j, x.clone());
            }
        }
        q
    }

    /// `L` with `L · self = I` for a matrix of full column rank.
    pub fn left_inverse(&self) -> Result<Mat> {
        // Pick independent rows, invert that square block, pad with zero columns.
        let rows = self.transpose().pivot_cols();
        if rows.len() != self.cols {
            return Err(Error::Dim("left inverse of a rank-deficient matrix".into()));
        }
        let sq = self.select_rows(&rows);
        let inv = sq
            .solve_mat(&Mat::identity(self.field, self.cols))?
            .ok_or_else(|| Error::Dim("singular block".into()))?;
        let mut l = Mat::zeros(self.field, self.cols, self.rows);
        for (j, &r) in rows.iter().enumerate() {
            for i in 0..self.cols {
                l.set(i, r, inv.get(i, j).clone());
            }
        }
        Ok(l)
    }

    /// `R` with `self · R = I` for a matrix of full row rank.
    pub fn right_inverse(&self) -> Result<Mat> {
        Ok(self.transpose().left_inverse()?.transpose())
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        self.solve_mat(&Mat::identity(self.field, self.rows)).ok().flatten()
    }

    pub fn pow(&self, e: usize) -> Mat {
        let mut r = Mat::identity(self.field, self.rows);
        for _ in 0..e {
            r = r.mul(self).unwrap();
        }
        r
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[Vec<i64>]) -> Mat {
        Mat::from_i64(Field::Rationals, rows)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Mat::identity(Field::Rationals, 2).rank(), 2);
        assert_eq!(Mat::zeros(Field::Rationals, 0, 0).rank(), 0);
        assert_eq!(q(&[vec![1, 2], vec![2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(Mat::identity(Field::Rationals, 3).kernel_basis().is_empty());
        assert_eq!(Mat::zeros(Field::Rationals, 2, 3).kernel_basis().len(), 3);
        let m = q(&[vec![1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).unwrap().iter().all(Scalar::is_zero));
    }

    #[test]
    fn solve_examples() {
        let f = Field::Rationals;
        let b = vec![f.from_i64(3), f.from_i64(-4)];
        assert_eq!(Mat::identity(f, 2).solve(&b).unwrap().unwrap(), b);
        assert_eq!(q(&[vec![0]]).solve(&[f.one()]).unwrap(), None);
        assert_eq!(
            q(&[vec![2]]).solve(&[f.one()]).unwrap().unwrap(),
            vec![Scalar::Q(Rat::new(1, 2))]
        );
        assert!(matches!(q(&[vec![1]]).solve(&[]), Err(Error::Dim(_))));
    }

    #[test]
    fn empty_shapes_behave_as_zero_maps() {
        let f = Field::Rationals;
        let a = Mat::zeros(f, 0, 3);
        let b = Mat::zeros(f, 3, 0);
        assert_eq!(b.mul(&a).unwrap(), Mat::zeros(f, 3, 3));
        assert_eq!(a.mul(&b).unwrap(), Mat::zeros(f, 0, 0));
        assert_eq!(a.kernel_basis().len(), 3);
    }

    #[test]
    fn inverses() {
        let m = q(&[vec![1, 0], vec![2, 1], vec![0, 3]]);
        let l = m.left_inverse().unwrap();
        assert_eq!(l.mul(&m).unwrap(), Mat::identity(Field::Rationals, 2));
        let t = m.transpose();
        let r = t.right_inverse().unwrap();
        assert_eq!(t.mul(&r).unwrap(), Mat::identity(Field::Rationals, 2));
    }

    #[test]
    fn left_null_annihilates() {
        let m = q(&[vec![1, 2], vec![2, 4], vec![0, 1]]);
        let n = m.left_null();
        assert_eq!(n.rows(), 3 - m.rank());
        assert!(n.mul(&m).unwrap().is_zero());
    }
}
