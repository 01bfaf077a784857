//! Univariate polynomials: characteristic polynomials and rational roots.
//!
//! Coefficients are stored lowest degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::mat::Mat;
use super::scalar::{Field, Rat, Scalar};

pub type Poly = Vec<Scalar>;

fn trim(mut p: Poly) -> Poly {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Scalar], b: &[Scalar], f: Field) -> Poly {
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

fn poly_sub(a: &[Scalar], b: &[Scalar], f: Field) -> Poly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(|| f.zero());
            let y = b.get(i).cloned().unwrap_or_else(|| f.zero());
            x.sub(&y)
        })
        .collect()
}

/// Characteristic polynomial `det(tI − m)` via reduction to upper Hessenberg form.
pub fn charpoly(m: &Mat) -> Poly {
    let n = m.rows();
    assert_eq!(n, m.cols(), "charpoly of a non-square matrix");
    let f = m.field();
    let mut h = m.clone();
    // Similarity reduction to Hessenberg form.
    for c in 0..n.saturating_sub(2) {
        let Some(p) = (c + 1..n).find(|&i| !h.get(i, c).is_zero()) else {
            continue;
        };
        if p != c + 1 {
            for j in 0..n {
                let (a, b) = (h.get(p, j).clone(), h.get(c + 1, j).clone());
                h.set(p, j, b);
                h.set(c + 1, j, a);
            }
            for i in 0..n {
                let (a, b) = (h.get(i, p).clone(), h.get(i, c + 1).clone());
                h.set(i, p, b);
                h.set(i, c + 1, a);
            }
        }
        let piv = h.get(c + 1, c).clone();
        for i in c + 2..n {
            let t = h.get(i, c).div(&piv).unwrap();
            if t.is_zero() {
                continue;
            }
            for j in 0..n {
                let v = h.get(i, j).sub(&t.mul(h.get(c + 1, j)));
                h.set(i, j, v);
            }
            for r in 0..n {
                let v = h.get(r, c + 1).add(&t.mul(h.get(r, i)));
                h.set(r, c + 1, v);
            }
        }
    }
    // p_k = charpoly of the leading k×k block.
    let mut ps: Vec<Poly> = vec![vec![f.one()]];
    for k in 1..=n {
        let hk = h.get(k - 1, k - 1).clone();
        let mut pk = poly_mul(&[hk.neg(), f.one()], &ps[k - 1], f);
        let mut prod = f.one();
        for i in (1..k).rev() {
            prod = prod.mul(h.get(i, i - 1));
            let coef = prod.mul(h.get(i - 1, k - 1));
            let term: Poly = ps[i - 1].iter().map(|x| x.mul(&coef)).collect();
            pk = poly_sub(&pk, &term, f);
        }
        ps.push(trim(pk));
    }
    ps.pop().unwrap()
}

pub fn eval(p: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = x.field().zero();
    for c in p.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

fn divisors(n: &BigInt, limit: u64) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n > limit {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}

/// Roots of `p` in the ground field, in increasing order. Over Q this uses the
/// rational root theorem and gives up (returns `None`) when the extreme
/// coefficients are too large to factor; over F_p it scans the field when small.
pub fn rational_roots(p: &[Scalar]) -> Option<Vec<Scalar>> {
    let p = trim(p.to_vec());
    if p.len() <= 1 {
        return Some(vec![]);
    }
    let f = p[0].field();
    match f {
        Field::Prime(q) => {
            if q > 1 << 20 {
                return None;
            }
            Some((0..q as i64).map(|v| f.from_i64(v)).filter(|x| eval(&p, x).is_zero()).collect())
        }
        Field::Rationals => {
            let mut l = BigInt::one();
            for c in &p {
                l = l.lcm(&c.as_rat().unwrap().denom());
            }
            let lr = Rat::from_bigint(l);
            let ints: Vec<BigInt> = p.iter().map(|c| c.as_rat().unwrap().mul(&lr).numer()).collect();
            let mut roots = Vec::new();
            let low = ints.iter().position(|c| !c.is_zero()).unwrap();
            if low > 0 {
                roots.push(f.zero());
            }
            let a0 = &ints[low];
            let an = ints.last().unwrap();
            let ps = divisors(a0, 1 << 40)?;
            let qs = divisors(an, 1 << 40)?;
            let mut cands = Vec::new();
            for &pp in &ps {
                for &qq in &qs {
                    for s in [1i64, -1] {
                        let r = Rat::new(s * pp as i64, qq as i64);
                        cands.push(r);
                    }
                }
            }
            cands.sort();
            cands.dedup();
            for r in cands {
                let x = Scalar::Q(r);
                if eval(&p, &x).is_zero() {
                    roots.push(x);
                }
            }
            roots.sort_by(|a, b| a.as_rat().unwrap().cmp(b.as_rat().unwrap()));
            Some(roots)
        }
    }
}

/// `(q, r)` with `a = q·b + r`, `deg r < deg b`; `b` must be nonzero.
pub fn divrem(a: &[Scalar], b: &[Scalar]) -> (Poly, Poly) {
    let b = trim(b.to_vec());
    let f = b[0].field();
    let lead_inv = b.last().unwrap().inv().expect("nonzero divisor");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (vec![f.zero()], r);
    }
    let mut q = vec![f.zero(); r.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let c = r[k + b.len() - 1].mul(&lead_inv);
        if c.is_zero() {
            continue;
        }
        for (j, x) in b.iter().enumerate() {
            r[k + j] = r[k + j].sub(&c.mul(x));
        }
        q[k] = c;
    }
    r.truncate(b.len() - 1);
    if r.is_empty() {
        r.push(f.zero());
    }
    (trim(q), trim(r))
}

pub fn is_zero_poly(p: &[Scalar]) -> bool {
    p.iter().all(Scalar::is_zero)
}

pub fn degree(p: &[Scalar]) -> usize {
    trim(p.to_vec()).len() - 1
}

pub fn monic(p: &[Scalar]) -> Poly {
    let p = trim(p.to_vec());
    let inv = p.last().unwrap().inv().expect("nonzero polynomial");
    p.iter().map(|c| c.mul(&inv)).collect()
}

/// Monic greatest common divisor (zero only if both inputs are zero).
pub fn gcd(a: &[Scalar], b: &[Scalar]) -> Poly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !is_zero_poly(&b) {
        let r = divrem(&a, &b).1;
        a = b;
        b = r;
    }
    if is_zero_poly(&a) {
        a
    } else {
        monic(&a)
    }
}

pub fn derivative(p: &[Scalar]) -> Poly {
    let f = p[0].field();
    if p.len() <= 1 {
        return vec![f.zero()];
    }
    trim((1..p.len()).map(|i| p[i].mul(&f.from_i64(i as i64))).collect())
}

/// `p(m)` by Horner's rule.
pub fn eval_mat(p: &[Scalar], m: &Mat) -> Mat {
    let f = m.field();
    let n = m.rows();
    let mut acc = Mat::zeros(f, n, n);
    for c in p.iter().rev() {
        acc = acc.mul(m).unwrap().add(&Mat::identity(f, n).scale(c)).unwrap();
    }
    acc
}

pub fn mul(a: &[Scalar], b: &[Scalar]) -> Poly {
    trim(poly_mul(a, b, a[0].field()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_matches_determinant_expansion() {
        let f = Field::Rationals;
        let m = Mat::from_i64(f, &[vec![2, 1, 0], vec![0, 2, 0], vec![1, 0, 3]]);
        // (t-2)^2 (t-3) = t^3 - 7t^2 + 16t - 12
        let p = charpoly(&m);
        let want: Vec<Scalar> = [-12, 16, -7, 1].iter().map(|&v| f.from_i64(v)).collect();
        assert_eq!(p, want);
        let r = rational_roots(&p).unwrap();
        assert_eq!(r, vec![f.from_i64(2), f.from_i64(3)]);
    }

    #[test]
    fn charpoly_dense_oracle() {
        // Oracle: compare charpoly(m) evaluated at integers with det(xI - m) by elimination.
        let f = Field::Rationals;
        let m = Mat::from_i64(f, &[vec![1, 2, 3, 4], vec![0, 1, -1, 2], vec![5, 0, 2, 1], vec![1, 1, 1, 0]]);
        let p = charpoly(&m);
        for x in -3..4 {
            let xi = Mat::identity(f, 4).scale(&f.from_i64(x)).sub(&m).unwrap();
            assert_eq!(eval(&p, &f.from_i64(x)), det(&xi));
        }
    }

    fn det(m: &Mat) -> Scalar {
        let n = m.rows();
        let mut a = m.clone();
        let f = m.field();
        let mut d = f.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a.get(i, c).is_zero()) else {
                return f.zero();
            };
            if p != c {
                for j in 0..n {
                    let (x, y) = (a.get(p, j).clone(), a.get(c, j).clone());
                    a.set(p, j, y);
                    a.set(c, j, x);
                }
                d = d.neg();
            }
            let piv = a.get(c, c).clone();
            d = d.mul(&piv);
            for i in c + 1..n {
                let t = a.get(i, c).div(&piv).unwrap();
                for j in c..n {
                    let v = a.get(i, j).sub(&t.mul(a.get(c, j)));
                    a.set(i, j, v);
                }
            }
        }
        d
    }

    #[test]
    fn roots_over_prime_field() {
        let f = Field::Prime(5);
        // t^2 - 1
        let p = vec![f.from_i64(-1), f.zero(), f.one()];
        assert_eq!(rational_roots(&p).unwrap(), vec![f.from_i64(1), f.from_i64(4)]);
    }
}
