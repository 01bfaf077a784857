//! Presilting and silting predicates, the order `≥`, intermediacy and coaisle
//! membership for the co-t-structures `(U_X, V_X)`.
//!
//! `V_X = X[<0]^⊥`, so `T ∈ V_X` iff `Hom(X, T[s]) = 0` for every `s > 0`. All
//! such conditions are finite because `Hom(A, B[s])` vanishes outside the
//! window where degree supports overlap.

use serde::Serialize;

use crate::complete::{postnikov, Tower};
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};
use crate::perf::{PerfComplex, Session, SiltCandidate};

/// Default step budget for truncations and searches.
pub const DEFAULT_BUDGET: usize = 32;

/// A nonzero `Hom(X, Y[shift])` of the given dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub shift: i32,
    pub dim: usize,
}

impl std::fmt::Display for Certificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Hom in shift {} has dimension {}", self.shift, self.dim)
    }
}

/// A certificate as text, `none` when absent.
pub fn describe(c: Option<Certificate>) -> String {
    c.map_or_else(|| "none".into(), |c| c.to_string())
}

/// The verdict of `add X ≥ add Y`, with the smallest violating shift when false.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrderWitness {
    pub verdict: bool,
    pub certificate: Option<Certificate>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Truth {
    True,
    False,
    Indeterminate,
}

/// Which test decided a silting verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Layer {
    /// Not presilting.
    Presilting,
    /// Summand count or Grothendieck group classes rule out generation.
    K0,
    /// Presilting with `|Q₀|` summands over a hereditary algebra.
    Hereditary,
    /// Presilting with `|Q₀|` summands, two-term with respect to `Λ`.
    TwoTerm,
    /// `Λ` was built from shifts of `X` by a finite Postnikov tower.
    Tower,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SiltingVerdict {
    pub verdict: Truth,
    pub layer: Layer,
    pub certificate: Option<Certificate>,
    pub detail: String,
}

/// `Hom(X, Y[s])` can only be nonzero for `s` in this range.
fn window(sess: &Session, x: &SiltCandidate, y: &SiltCandidate) -> Option<(i32, i32)> {
    let mut out: Option<(i32, i32)> = None;
    for &a in &x.ids {
        for &b in &y.ids {
            let (l, h) = sess.window(a, b);
            out = Some(out.map_or((l, h), |(ol, oh)| (ol.min(l), oh.max(h))));
        }
    }
    out
}

pub fn geq(sess: &mut Session, x: &SiltCandidate, y: &SiltCandidate) -> OrderWitness {
    if let Some((_, hi)) = window(sess, x, y) {
        for s in 1..=hi {
            let dim = sess.hom_cand(x, y, s);
            if dim > 0 {
                return OrderWitness { verdict: false, certificate: Some(Certificate { shift: s, dim }) };
            }
        }
    }
    OrderWitness { verdict: true, certificate: None }
}

pub fn is_presilting(sess: &mut Session, x: &SiltCandidate) -> OrderWitness {
    geq(sess, x, x)
}

/// `T ∈ V_X`.
pub fn in_coaisle(sess: &Session, x: &SiltCandidate, t: &PerfComplex) -> bool {
    top_obstruction(sess, x, t).is_none()
}

/// The largest `s > 0` with `Hom(X, T[s]) ≠ 0`, if any.
pub fn top_obstruction(sess: &Session, x: &SiltCandidate, t: &PerfComplex) -> Option<Certificate> {
    let th = t.range()?.1;
    let xl = x.ids.iter().filter_map(|&a| sess.complex(a).range()).map(|r| r.0).min()?;
    (1..=th - xl).rev().find_map(|s| {
        let dim = sess.hom_into(x, t, s);
        (dim > 0).then_some(Certificate { shift: s, dim })
    })
}

/// `V_X` and `V_Y` agree on every probe.
pub fn coaisle_equal_on_window(sess: &Session, x: &SiltCandidate, y: &SiltCandidate, probes: &[PerfComplex]) -> bool {
    probes.iter().all(|p| in_coaisle(sess, x, p) == in_coaisle(sess, y, p))
}

/// The class of a complex in `K₀ = Z^{Q₀}`.
pub fn k0_class(x: &PerfComplex) -> Vec<i64> {
    let mut v = vec![0i64; x.alg.n()];
    for n in x.degrees() {
        let sign = if n.rem_euclid(2) == 0 { 1 } else { -1 };
        for &p in x.term(n) {
            v[p] += sign;
        }
    }
    v
}

/// Classes of the summands, as the rows of an integer matrix over Q.
fn k0_matrix(sess: &Session, x: &SiltCandidate) -> Mat {
    let rows: Vec<Vec<i64>> = x.ids.iter().map(|&i| k0_class(sess.complex(i))).collect();
    if rows.is_empty() {
        return Mat::zeros(Field::Rationals, 0, sess.alg.n());
    }
    Mat::from_i64(Field::Rationals, &rows)
}

fn is_unimodular(m: &Mat) -> bool {
    let Some(inv) = m.inverse() else { return false };
    inv.entries().iter().all(|e| e.as_rat().is_some_and(|r| r.is_integer()))
}

/// Two-term with respect to `Λ`: `Λ ≥ X ≥ Λ[1]`.
pub fn is_two_term(sess: &mut Session, x: &SiltCandidate) -> Result<bool> {
    let l = sess.candidate(&PerfComplex::lambda(&sess.alg.clone()))?;
    let l1 = sess.shift_candidate(&l, 1)?;
    Ok(geq(sess, &l, x).verdict && geq(sess, x, &l1).verdict)
}

/// Presilting and generating; generation is decided by the first layer that
/// applies (see [`Layer`]).
pub fn is_silting(sess: &mut Session, x: &SiltCandidate, budget: usize) -> Result<SiltingVerdict> {
    let verdict = |verdict, layer, certificate, detail: &str| SiltingVerdict { verdict, layer, certificate, detail: detail.into() };
    let pre = is_presilting(sess, x);
    if !pre.verdict {
        return Ok(verdict(Truth::False, Layer::Presilting, pre.certificate, "Hom(X, X[s]) ≠ 0 for some s > 0"));
    }
    let n = sess.alg.n();
    if x.len() != n {
        return Ok(verdict(Truth::False, Layer::K0, None, &format!("{} summands, but a silting object has {n}", x.len())));
    }
    let k0 = k0_matrix(sess, x);
    if !is_unimodular(&k0) {
        return Ok(verdict(Truth::False, Layer::K0, None, "summand classes do not form a basis of K0"));
    }
    if sess.alg.is_hereditary() {
        return Ok(verdict(Truth::True, Layer::Hereditary, None, "hereditary: presilting with |Q0| summands"));
    }
    if is_two_term(sess, x)? {
        return Ok(verdict(Truth::True, Layer::TwoTerm, None, "two-term: presilting with |Q0| summands"));
    }
    Ok(match generation_tower(sess, x, budget)? {
        Some(k) => verdict(Truth::True, Layer::Tower, None, &format!("Λ[-{k}] has a finite tower over shifts of X")),
        None => verdict(Truth::Indeterminate, Layer::Tower, None, &format!("no tower of Λ found within budget {budget}")),
    })
}

/// Whether every layer of a tower lies in the matching shift of `add X`.
pub fn tower_in_shifts(sess: &mut Session, x: &SiltCandidate, tower: &Tower) -> Result<bool> {
    if !tower.finite {
        return Ok(false);
    }
    if !x.contains(&sess.candidate(&tower.v_t)?) {
        return Ok(false);
    }
    for stage in &tower.stages {
        let shifted = sess.shift_candidate(x, -stage.index)?;
        if !shifted.contains(&sess.candidate(&stage.layer)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches `k` such that `Λ[−k]` has a finite Postnikov tower with respect to
/// `X` whose layers all lie in shifts of `add X`; this certifies `Λ ∈ thick X`.
fn generation_tower(sess: &mut Session, x: &SiltCandidate, budget: usize) -> Result<Option<i32>> {
    let lambda = PerfComplex::lambda(&sess.alg.clone());
    let lo = x.ids.iter().filter_map(|&i| sess.complex(i).range()).map(|r| r.0).min().unwrap_or(0);
    for k in (lo - 1)..(lo - 1 + budget as i32) {
        let t = lambda.shift(-k);
        let Ok(tower) = postnikov(sess, x, &t, budget, budget) else { continue };
        if tower_in_shifts(sess, x, &tower)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// `M ≥ X ≥ M[n]`, with the star decomposition `X ∈ add M * … * add M[n]`
/// read off a Postnikov tower of `X` when the answer is yes.
#[derive(Clone, Debug)]
pub struct Intermediate {
    pub verdict: bool,
    pub upper: OrderWitness,
    pub lower: OrderWitness,
    pub tower: Option<Tower>,
}

pub fn is_intermediate(sess: &mut Session, x: &SiltCandidate, m: &SiltCandidate, n: i32, budget: usize) -> Result<Intermediate> {
    let sv = is_silting(sess, m, budget)?;
    if sv.verdict != Truth::True {
        return Err(Error::Precondition(format!("reference object is not silting ({})", sv.detail)));
    }
    let upper = geq(sess, m, x);
    let mn = sess.shift_candidate(m, n)?;
    let lower = geq(sess, x, &mn);
    let verdict = upper.verdict && lower.verdict;
    let tower = if verdict {
        // X[−n] ∈ V_M[−n] sits in add M[−n] * … * add M, which is the claim shifted by n.
        let xs = sess.shift_candidate(x, -n)?;
        let xs = sess.object(&xs);
        Some(postnikov(sess, m, &xs, n.max(0) as usize + 1, budget)?)
    } else {
        None
    };
    Ok(Intermediate { verdict, upper, lower, tower })
}
