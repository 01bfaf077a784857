//! Factorization of univariate polynomials into irreducibles.
//!
//! Over `F_p`: Berlekamp's algorithm (subalgebra of Frobenius-fixed residues,
//! split by gcds). Over `Q`: Zassenhaus. Factor modulo a small prime, Hensel
//! lift past a coefficient bound, recombine by trial division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::mat::Mat;
use super::poly::{self, Poly};
use super::scalar::{Field, Rat, Scalar};

type Fp = Vec<u64>;

fn fp_trim(mut a: Fp) -> Fp {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    if a.is_empty() {
        a.push(0);
    }
    a
}

fn fp_is_zero(a: &[u64]) -> bool {
    a.iter().all(|&c| c == 0)
}

fn fp_deg(a: &[u64]) -> usize {
    fp_trim(a.to_vec()).len() - 1
}

fn fp_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn fp_inv(a: u64, p: u64) -> u64 {
    fp_pow(a, p - 2, p)
}

fn fp_sub(a: &[u64], b: &[u64], p: u64) -> Fp {
    let n = a.len().max(b.len());
    fp_trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0) % p) % p)
            .collect(),
    )
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Fp {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(out)
}

fn fp_divrem(a: &[u64], b: &[u64], p: u64) -> (Fp, Fp) {
    let b = fp_trim(b.to_vec());
    let mut r = fp_trim(a.to_vec());
    if r.len() < b.len() {
        return (vec![0], r);
    }
    let li = fp_inv(*b.last().unwrap(), p);
    let mut q = vec![0u64; r.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let c = r[k + b.len() - 1] * li % p;
        if c == 0 {
            continue;
        }
        for (j, &x) in b.iter().enumerate() {
            r[k + j] = (r[k + j] + p - c * x % p) % p;
        }
        q[k] = c;
    }
    r.truncate(b.len() - 1);
    (fp_trim(q), fp_trim(r))
}

fn fp_monic(a: &[u64], p: u64) -> Fp {
    let a = fp_trim(a.to_vec());
    let li = fp_inv(*a.last().unwrap(), p);
    a.iter().map(|&c| c * li % p).collect()
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Fp {
    let (mut a, mut b) = (fp_trim(a.to_vec()), fp_trim(b.to_vec()));
    while !fp_is_zero(&b) {
        let r = fp_divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    if fp_is_zero(&a) {
        a
    } else {
        fp_monic(&a, p)
    }
}

/// `(g, s, t)` with `s·a + t·b = g` monic.
fn fp_xgcd(a: &[u64], b: &[u64], p: u64) -> (Fp, Fp, Fp) {
    let (mut r0, mut r1) = (fp_trim(a.to_vec()), fp_trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![1u64], vec![0u64]);
    let (mut t0, mut t1) = (vec![0u64], vec![1u64]);
    while !fp_is_zero(&r1) {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let s2 = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t2 = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let li = fp_inv(*r0.last().unwrap(), p);
    let sc = |v: &[u64]| fp_trim(v.iter().map(|&c| c * li % p).collect());
    (sc(&r0), sc(&s0), sc(&t0))
}

fn fp_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Fp {
    let mut r: Fp = vec![1];
    let mut b = fp_divrem(base, m, p).1;
    while e > 0 {
        if e & 1 == 1 {
            r = fp_divrem(&fp_mul(&r, &b, p), m, p).1;
        }
        b = fp_divrem(&fp_mul(&b, &b, p), m, p).1;
        e >>= 1;
    }
    r
}

fn fp_deriv(a: &[u64], p: u64) -> Fp {
    if a.len() <= 1 {
        return vec![0];
    }
    fp_trim((1..a.len()).map(|i| a[i] * (i as u64 % p) % p).collect())
}

/// Monic irreducible factors of a monic squarefree polynomial over `F_p`.
fn berlekamp(f: &[u64], p: u64) -> Vec<Fp> {
    let n = fp_deg(f);
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let field = Field::Prime(p as u32);
    // Column i of Q is x^{ip} mod f.
    let xp = fp_powmod(&[0, 1], p, f, p);
    let mut q = Mat::zeros(field, n, n);
    let mut cur: Fp = vec![1];
    for i in 0..n {
        for (j, &c) in cur.iter().enumerate() {
            q.set(j, i, field.from_i64(c as i64));
        }
        cur = fp_divrem(&fp_mul(&cur, &xp, p), f, p).1;
    }
    let fixed = q.sub(&Mat::identity(field, n)).unwrap().kernel_basis();
    let k = fixed.len();
    let basis: Vec<Fp> = fixed
        .iter()
        .map(|v| {
            fp_trim(
                v.iter()
                    .map(|s| match s {
                        Scalar::Fp(x, _) => *x as u64,
                        _ => unreachable!(),
                    })
                    .collect(),
            )
        })
        .collect();
    let mut factors = vec![f.to_vec()];
    let mut rng = ChaCha8Rng::seed_from_u64(crate::algebra::DEFAULT_SEED);
    while factors.len() < k {
        // A random element of the Berlekamp subalgebra separates factors.
        let mut v: Fp = vec![0];
        for b in &basis {
            let c = rng.gen_range(0..p);
            let scaled: Fp = b.iter().map(|&x| x * c % p).collect();
            v = fp_sub(&v, &fp_sub(&[0], &scaled, p), p);
        }
        let mut next = Vec::new();
        for g in factors {
            if fp_deg(&g) <= 1 {
                next.push(g);
                continue;
            }
            let w = if p == 2 {
                v.clone()
            } else {
                fp_sub(&fp_powmod(&v, (p - 1) / 2, &g, p), &[1], p)
            };
            let h = fp_gcd(&g, &w, p);
            let dh = fp_deg(&h);
            if dh > 0 && dh < fp_deg(&g) {
                let other = fp_divrem(&g, &h, p).0;
                next.push(h);
                next.push(fp_monic(&other, p));
            } else {
                next.push(g);
            }
        }
        factors = next;
    }
    factors.sort();
    factors
}

/// Distinct monic irreducible factors over `F_p`.
fn fp_factors(a: &[u64], p: u64) -> Vec<Fp> {
    let a = fp_trim(a.to_vec());
    if fp_deg(&a) == 0 {
        return vec![];
    }
    let d = fp_deriv(&a, p);
    let mut out = if fp_is_zero(&d) {
        // a(x) = b(x^p) = b(x)^p.
        let b: Fp = a.iter().step_by(p as usize).copied().collect();
        fp_factors(&b, p)
    } else {
        let g = fp_gcd(&a, &d, p);
        let s = fp_monic(&fp_divrem(&a, &g, p).0, p);
        let mut v = berlekamp(&s, p);
        v.extend(fp_factors(&g, p));
        v
    };
    out.sort();
    out.dedup();
    out
}

type Zp = Vec<BigInt>;

fn z_trim(mut a: Zp) -> Zp {
    while a.len() > 1 && a.last().unwrap().is_zero() {
        a.pop();
    }
    a
}

fn z_mod(a: &[BigInt], p: u64) -> Fp {
    let pb = BigInt::from(p);
    fp_trim(a.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

fn z_mul(a: &[BigInt], b: &[BigInt]) -> Zp {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    z_trim(out)
}

fn z_sub(a: &[BigInt], b: &[BigInt]) -> Zp {
    let n = a.len().max(b.len());
    z_trim(
        (0..n)
            .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
            .collect(),
    )
}

fn symmetric(a: &[BigInt], m: &BigInt) -> Zp {
    let half = m / 2;
    z_trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(a: &[BigInt]) -> Zp {
    let c = content(a);
    let mut out: Zp = a.iter().map(|x| x / &c).collect();
    if out.last().unwrap().is_negative() {
        out = out.iter().map(|x| -x).collect();
    }
    out
}

fn to_q(a: &[BigInt]) -> Poly {
    a.iter().map(|c| Scalar::Q(Rat::from_bigint(c.clone()))).collect()
}

/// Exact quotient `a / b` over Z, if `b` divides `a`.
fn z_divides(a: &[BigInt], b: &[BigInt]) -> Option<Zp> {
    let (q, r) = poly::divrem(&to_q(a), &to_q(b));
    if !poly::is_zero_poly(&r) {
        return None;
    }
    q.iter()
        .map(|c| {
            let r = c.as_rat().unwrap();
            r.is_integer().then(|| r.numer())
        })
        .collect()
}

/// Lifts `f ≡ g·h (mod p)`, `g` monic, to `f ≡ G·H (mod p^k)` with `G` monic
/// and `lc(H) = lc(f)`.
fn hensel2(f: &[BigInt], g: &[u64], h: &[u64], p: u64, k: u32) -> (Zp, Zp) {
    let lc = f.last().unwrap().clone();
    let (_, _, t) = fp_xgcd(g, h, p);
    let pb = BigInt::from(p);
    let mut gz: Zp = g.iter().map(|&c| BigInt::from(c)).collect();
    let mut hz: Zp = h.iter().map(|&c| BigInt::from(c)).collect();
    *hz.last_mut().unwrap() = lc.clone();
    let mut m = pb.clone();
    for _ in 1..k {
        let diff = z_sub(f, &z_mul(&gz, &hz));
        let e: Zp = diff.iter().map(|c| c / &m).collect();
        let e = z_mod(&e, p);
        let tau = fp_divrem(&fp_mul(&t, &e, p), g, p).1;
        let (sigma, _) = fp_divrem(&fp_sub(&e, &fp_mul(&tau, &z_mod(&hz, p), p), p), g, p);
        for (i, c) in tau.iter().enumerate() {
            if i < gz.len() {
                gz[i] += &m * BigInt::from(*c);
            }
        }
        for (i, c) in sigma.iter().enumerate() {
            if i < hz.len() - 1 {
                hz[i] += &m * BigInt::from(*c);
            }
        }
        m *= &pb;
        gz = gz.iter().map(|c| c.mod_floor(&m)).collect();
        let last = hz.len() - 1;
        for c in hz.iter_mut().take(last) {
            *c = c.mod_floor(&m);
        }
    }
    (gz, hz)
}

fn primes() -> impl Iterator<Item = u64> {
    (3u64..20_000).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Irreducible factors of a primitive squarefree integer polynomial.
fn zassenhaus(f: &[BigInt]) -> Vec<Zp> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![primitive(f)];
    }
    let lc = f.last().unwrap().clone();
    // Pick, among a few suitable primes, the one giving the fewest factors.
    let mut best: Option<(u64, Vec<Fp>)> = None;
    let mut tried = 0;
    for p in primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = z_mod(f, p);
        if fp_deg(&fp_gcd(&fp, &fp_deriv(&fp, p), p)) > 0 {
            continue;
        }
        let facs = berlekamp(&fp_monic(&fp, p), p);
        if best.as_ref().is_none_or(|b| facs.len() < b.1.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= 5 || best.as_ref().unwrap().1.len() == 1 {
            break;
        }
    }
    let (p, facs) = best.expect("some prime keeps the polynomial squarefree");
    if facs.len() == 1 {
        return vec![primitive(f)];
    }
    // Coefficient bound for factors of f (Mignotte), doubled for signs.
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let bound = (BigInt::one() << (n + 1)) * (norm2.sqrt() + 1u32) * lc.abs() * 2u32;
    let mut k = 1u32;
    let pb = BigInt::from(p);
    let mut pk = pb.clone();
    while pk <= bound {
        pk *= &pb;
        k += 1;
    }
    // Lift f ≡ lc · g_1 ⋯ g_r one factor at a time.
    let mut lifted: Vec<Zp> = Vec::new();
    let mut rest_z: Zp = f.to_vec();
    for i in 0..facs.len() - 1 {
        let h = facs[i + 1..].iter().fold(vec![z_mod(std::slice::from_ref(&lc), p)[0]], |acc, g| fp_mul(&acc, g, p));
        let (g, hz) = hensel2(&rest_z, &facs[i], &h, p, k);
        lifted.push(g);
        rest_z = hz;
    }
    let lcinv_rest = {
        let li = lc.modinv(&pk).expect("lc is a unit mod p^k");
        rest_z.iter().map(|c| (c * &li).mod_floor(&pk)).collect::<Zp>()
    };
    lifted.push(lcinv_rest);
    // Recombination.
    let mut out = Vec::new();
    let mut remaining: Vec<Zp> = lifted;
    let mut cur = f.to_vec();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut found = false;
        let idx: Vec<usize> = (0..remaining.len()).collect();
        for subset in combinations(&idx, size) {
            let lcc = cur.last().unwrap().clone();
            let prod = subset.iter().fold(vec![lcc.clone()], |acc, &i| {
                z_mul(&acc, &remaining[i]).iter().map(|c| c.mod_floor(&pk)).collect()
            });
            let cand = primitive(&symmetric(&prod, &pk));
            if let Some(q) = z_divides(&cur, &cand) {
                out.push(cand);
                cur = primitive(&q);
                remaining = remaining.into_iter().enumerate().filter(|(i, _)| !subset.contains(i)).map(|x| x.1).collect();
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    out.push(primitive(&cur));
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// Distinct monic irreducible factors of a nonzero polynomial over its field,
/// sorted by degree then coefficients.
pub fn irreducible_factors(p: &[Scalar]) -> Vec<Poly> {
    if poly::degree(p) == 0 {
        return vec![];
    }
    let field = p[0].field();
    let mut out: Vec<Poly> = match field {
        Field::Prime(q) => {
            let q = q as u64;
            let a: Fp = p
                .iter()
                .map(|s| match s {
                    Scalar::Fp(x, _) => *x as u64,
                    _ => unreachable!(),
                })
                .collect();
            fp_factors(&a, q).into_iter().map(|g| g.iter().map(|&c| field.from_i64(c as i64)).collect()).collect()
        }
        Field::Rationals => {
            let s = poly::monic(&poly::divrem(p, &poly::gcd(p, &poly::derivative(p))).0);
            let mut l = BigInt::one();
            for c in &s {
                l = l.lcm(&c.as_rat().unwrap().denom());
            }
            let lr = Rat::from_bigint(l);
            let ints: Zp = s.iter().map(|c| c.as_rat().unwrap().mul(&lr).numer()).collect();
            zassenhaus(&primitive(&ints)).iter().map(|g| poly::monic(&to_q(g))).collect()
        }
    };
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| format!("{a:?}").cmp(&format!("{b:?}"))));
    out
}
