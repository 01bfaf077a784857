//! Approximations, co-t-structure truncations, Postnikov towers and the
//! completion procedures (Bongartz, hereditary, naive alternating truncation).

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::perf::{cocone, cone, hom_basis, minimalize, ChainMap, DSum, PerfComplex, Session, SiltCandidate};
use crate::silting::{geq, in_coaisle, is_intermediate, is_presilting, is_silting, top_obstruction, describe, Certificate, Truth};

/// Maps `X[−k]^d → E` whose components form a basis of `Hom(X, E[k])`.
fn shifted_precover(sess: &Session, x: &SiltCandidate, e: &PerfComplex, k: i32) -> Result<ChainMap> {
    let mut maps = Vec::new();
    for &a in &x.ids {
        for f in hom_basis(sess.complex(a), e, k) {
            let mut g = f.shift(-k);
            g.target = e.clone();
            maps.push(g);
        }
    }
    ChainMap::from_sum(&maps, e)
}

/// The universal map `X^d → T` with `d = dim Hom(X, T)`: an `add X`-precover.
pub fn add_precover(sess: &Session, x: &SiltCandidate, t: &PerfComplex) -> Result<ChainMap> {
    shifted_precover(sess, x, t, 0)
}

/// A truncation triangle `U → T → V → U[1]` with `V ∈ V_X`.
#[derive(Clone, Debug)]
pub struct Truncation {
    pub u: PerfComplex,
    pub v: PerfComplex,
    pub to_v: ChainMap,
    /// The obstruction killed at each step.
    pub steps: Vec<Certificate>,
}

#[derive(Clone, Debug)]
pub enum Truncated {
    Done(Truncation),
    /// The budget ran out with `Hom(X, E[shift]) ≠ 0` left on the running object.
    Exhausted { steps: usize, residual: Certificate },
}

impl Truncated {
    pub fn done(self) -> Option<Truncation> {
        match self {
            Truncated::Done(t) => Some(t),
            Truncated::Exhausted { .. } => None,
        }
    }
}

/// Truncates `T` with respect to `(U_X, V_X)`.
///
/// Each step takes the largest `k > 0` with `Hom(X, E[k]) ≠ 0` and replaces
/// `E` by the cone of the universal map `X[−k]^d → E`. For presilting `X` this
/// kills `Hom(X, E[k])` without creating obstructions at shifts `≥ k`, so the
/// procedure stops after at most one step per shift of the window.
pub fn truncate_costr(sess: &Session, x: &SiltCandidate, t: &PerfComplex, budget: usize) -> Result<Truncated> {
    let mut e = t.clone();
    let mut to_v = t.identity();
    let mut steps = Vec::new();
    while let Some(c) = top_obstruction(sess, x, &e) {
        if steps.len() >= budget {
            return Ok(Truncated::Exhausted { steps: steps.len(), residual: c });
        }
        let g = shifted_precover(sess, x, &e, c.shift)?;
        let tri = cone(&g);
        let m = minimalize(&tri.cone);
        to_v = m.to.compose(&tri.i).compose(&to_v);
        e = m.complex;
        steps.push(c);
    }
    let (u, _) = cocone(&to_v);
    let u = minimalize(&u).complex;
    Ok(Truncated::Done(Truncation { u, v: e, to_v, steps }))
}

/// A layer `C_i[−i]` of a Postnikov tower.
#[derive(Clone, Debug)]
pub struct TowerStage {
    pub index: i32,
    pub layer: PerfComplex,
}

/// `T_{i+1} → T_i → C_i[−i]`, with `T_1 → T → V_T` first.
#[derive(Clone, Debug)]
pub struct Tower {
    pub v_t: PerfComplex,
    pub stages: Vec<TowerStage>,
    /// The last `T_i` is zero.
    pub finite: bool,
}

/// The Postnikov tower of `T` with respect to the co-t-structure of `M`,
/// truncating `T_i` against `M[−i]`. Stops once `T_i = 0` or after `depth`
/// layers.
pub fn postnikov(sess: &mut Session, m: &SiltCandidate, t: &PerfComplex, depth: usize, budget: usize) -> Result<Tower> {
    let exhausted = |i: i32| Error::Precondition(format!("truncation budget exhausted at tower stage {i}"));
    let first = truncate_costr(sess, m, t, budget)?.done().ok_or_else(|| exhausted(0))?;
    let mut cur = first.u;
    let mut stages = Vec::new();
    for i in 1..=depth as i32 {
        if cur.is_zero() {
            break;
        }
        let mi = sess.shift_candidate(m, -i)?;
        let tr = truncate_costr(sess, &mi, &cur, budget)?.done().ok_or_else(|| exhausted(i))?;
        stages.push(TowerStage { index: i, layer: tr.v });
        cur = tr.u;
    }
    Ok(Tower { v_t: first.v, stages, finite: cur.is_zero() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Success,
    Failure,
    Indeterminate,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Success => "success",
            Status::Failure => "failure",
            Status::Indeterminate => "indeterminate",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), passed, detail: detail.into() }
}

#[derive(Clone, Debug)]
pub struct CompletionReport {
    pub status: Status,
    pub method: &'static str,
    pub input: SiltCandidate,
    pub reference: Option<SiltCandidate>,
    pub complement: SiltCandidate,
    pub result: SiltCandidate,
    pub checks: Vec<Check>,
    pub steps: usize,
}

fn candidate_json(sess: &Session, c: &SiltCandidate) -> Value {
    Value::Array(c.ids.iter().map(|&i| json!({"id": i, "complex": sess.complex(i).to_json()})).collect())
}

impl CompletionReport {
    pub fn to_json(&self, sess: &Session) -> Value {
        json!({
            "status": self.status,
            "method": self.method,
            "input": candidate_json(sess, &self.input),
            "reference": self.reference.as_ref().map(|r| candidate_json(sess, r)),
            "complement": candidate_json(sess, &self.complement),
            "result": candidate_json(sess, &self.result),
            "checks": self.checks,
            "steps": self.steps,
        })
    }

    pub fn summands(&self) -> usize {
        self.result.len()
    }
}

/// Shifted catalog modules and shifted summands of `objs` whose degree support
/// meets the union of the supports of `objs`, widened by one.
pub fn probe_window(sess: &mut Session, objs: &[&SiltCandidate], depth: usize) -> Result<Vec<PerfComplex>> {
    sess.register_knitted(depth)?;
    let ranges: Vec<(i32, i32)> =
        objs.iter().flat_map(|o| o.ids.iter()).filter_map(|&i| sess.complex(i).range()).collect();
    let Some(lo) = ranges.iter().map(|r| r.0).min() else { return Ok(vec![]) };
    let hi = ranges.iter().map(|r| r.1).max().unwrap();
    let mut ids = Vec::new();
    for m in 0..sess.modules().len() {
        let Ok(base) = sess.stalk_id(m, 0) else { continue };
        let (a, b) = sess.complex(base).range().unwrap();
        // stalk(M, s) occupies [a − s, b − s].
        for s in (a - hi - 1)..=(b - lo + 1) {
            ids.push(sess.shifted(base, s)?);
        }
    }
    for o in objs {
        for &i in &o.ids {
            for s in -1..=1 {
                ids.push(sess.shifted(i, s)?);
            }
        }
    }
    ids.sort_unstable();
    ids.dedup();
    Ok(ids.into_iter().map(|i| sess.complex(i).clone()).collect())
}

/// Probes where membership in `V_R` differs from membership in `V_M ∩ V_X`.
fn coaisle_identity_failures(sess: &Session, r: &SiltCandidate, m: &SiltCandidate, x: &SiltCandidate, probes: &[PerfComplex]) -> usize {
    probes
        .iter()
        .filter(|p| in_coaisle(sess, r, p) != (in_coaisle(sess, m, p) && in_coaisle(sess, x, p)))
        .count()
}

/// Default knitting depth for probe windows.
pub const PROBE_DEPTH: usize = 4;

fn result_checks(sess: &mut Session, x: &SiltCandidate, result: &SiltCandidate, budget: usize) -> Result<Vec<Check>> {
    let pre = is_presilting(sess, result);
    let sv = is_silting(sess, result, budget)?;
    let n = sess.alg.n();
    Ok(vec![
        check("presilting", pre.verdict, describe(pre.certificate)),
        check("silting", sv.verdict == Truth::True, sv.detail.clone()),
        check("summand-count", result.len() == n, format!("{} of {n}", result.len())),
        check("contains-input", result.contains(x), ""),
    ])
}

fn finish(
    method: &'static str,
    x: &SiltCandidate,
    reference: Option<SiltCandidate>,
    result: SiltCandidate,
    checks: Vec<Check>,
    steps: usize,
) -> CompletionReport {
    let complement = SiltCandidate::from_ids(result.ids.iter().copied().filter(|i| !x.ids.contains(i)).collect());
    let status = if checks.iter().all(|c| c.passed) { Status::Success } else { Status::Failure };
    CompletionReport { status, method, input: x.clone(), reference, complement, result, checks, steps }
}

/// Bongartz completion of `X` with respect to a silting `M` with `M ≥ X ≥ M[1]`:
/// `V` is the cocone of the universal map `X^d → M[1]`.
pub fn bongartz(sess: &mut Session, m: &SiltCandidate, x: &SiltCandidate, budget: usize) -> Result<CompletionReport> {
    let inter = is_intermediate(sess, x, m, 1, budget)?;
    if !inter.verdict {
        let w = if inter.upper.verdict { ("X ≥ M[1]", inter.lower) } else { ("M ≥ X", inter.upper) };
        return Err(Error::Precondition(format!("{} fails: {}", w.0, describe(w.1.certificate))));
    }
    let m1 = sess.shift_candidate(m, 1)?;
    let m1 = sess.object(&m1);
    let f = add_precover(sess, x, &m1)?;
    let (v, _) = cocone(&f);
    let vc = sess.candidate(&v)?;
    let result = x.union(&vc);
    let mut checks = result_checks(sess, x, &result, budget)?;
    let probes = probe_window(sess, &[m, x, &result], PROBE_DEPTH)?;
    let bad = coaisle_identity_failures(sess, &result, m, x, &probes);
    checks.push(check("coaisle-identity", bad == 0, format!("{bad} of {} probes disagree", probes.len())));
    Ok(finish("bongartz", x, Some(m.clone()), result, checks, 1))
}

/// Completion over a hereditary algebra: truncate `Λ[s]` against `X`, where
/// `s = −(top cohomology degree of X)`, and keep the part of the result lying
/// in `V_{Λ[s]}`.
pub fn hereditary_complete(sess: &mut Session, x: &SiltCandidate, budget: usize) -> Result<CompletionReport> {
    if !sess.alg.is_hereditary() {
        return Err(Error::NotHereditary("hereditary completion"));
    }
    let pre = is_presilting(sess, x);
    if !pre.verdict {
        return Err(Error::Precondition(format!("input is not presilting: {}", describe(pre.certificate))));
    }
    let xo = sess.object(x);
    let dx = sess.dsum_of(&xo)?;
    let top = dx.0.iter().map(|&(_, s)| -s).max().unwrap_or(0);
    let p = PerfComplex::lambda(&sess.alg.clone()).shift(-top);
    let Some(tr) = truncate_costr(sess, x, &p, budget)?.done() else {
        return Err(Error::Precondition(format!("truncation of Λ[{}] did not finish within budget {budget}", -top)));
    };
    let dv = sess.dsum_of(&tr.v)?;
    let kept = DSum(dv.0.into_iter().filter(|&(_, s)| -s <= top).collect());
    let vt = sess.dsum_complex(&kept)?;
    let result = x.union(&sess.candidate(&vt)?);
    let checks = result_checks(sess, x, &result, budget)?;
    Ok(finish("hereditary", x, None, result, checks, tr.steps.len()))
}

/// Alternates truncations against `M` and `X`, starting from `M`, until the
/// running object lies in `V_M ∩ V_X`. `M` is first shifted down until
/// `M ≥ X`.
pub fn naive_complete(sess: &mut Session, m: &SiltCandidate, x: &SiltCandidate, budget: usize) -> Result<CompletionReport> {
    let mut ms = m.clone();
    let mut shift = 0;
    while !geq(sess, &ms, x).verdict {
        shift -= 1;
        if -shift as usize > budget {
            return Err(Error::Precondition("no shift of the reference object lies above the input".into()));
        }
        ms = sess.shift_candidate(m, shift)?;
    }
    let mut d = sess.object(&ms);
    let mut steps = 0;
    let mut against_x = true;
    loop {
        let in_m = in_coaisle(sess, &ms, &d);
        let in_x = in_coaisle(sess, x, &d);
        if in_m && in_x {
            break;
        }
        if steps >= budget {
            let why = format!("no object of V_M ∩ V_X reached after {steps} truncations");
            return Ok(indeterminate(x, ms, steps, why));
        }
        let (target, skip) = if against_x { (x, in_x) } else { (&ms, in_m) };
        against_x = !against_x;
        if skip {
            continue;
        }
        match truncate_costr(sess, target, &d, budget)? {
            Truncated::Done(tr) => d = tr.v,
            Truncated::Exhausted { residual, .. } => {
                let why = format!("a truncation did not finish within {budget} steps ({})", describe(Some(residual)));
                return Ok(indeterminate(x, ms, steps, why));
            }
        }
        steps += 1;
    }
    let result = x.union(&sess.candidate(&d)?);
    let checks = result_checks(sess, x, &result, budget)?;
    Ok(finish("naive", x, Some(ms), result, checks, steps))
}

fn indeterminate(x: &SiltCandidate, ms: SiltCandidate, steps: usize, why: String) -> CompletionReport {
    let detail = format!("{why}; this bounds the search, it does not prove non-existence");
    CompletionReport {
        status: Status::Indeterminate,
        method: "naive",
        input: x.clone(),
        reference: Some(ms),
        complement: SiltCandidate::default(),
        result: x.clone(),
        checks: vec![check("alternation", false, detail)],
        steps,
    }
}

/// Whether every layer of a tower lies in the matching shift of `add base`.
fn layered(sess: &mut Session, base: &SiltCandidate, t: &PerfComplex, depth: usize, budget: usize) -> Result<bool> {
    let tower = postnikov(sess, base, t, depth, budget)?;
    crate::silting::tower_in_shifts(sess, base, &tower)
}

/// For silting `M ≥ N ≥ M[n]`: each summand of `N` is built from
/// `add M[−n], …, add M` after shifting by `−n`, and each summand of `M` from
/// `add N[−n], …, add N`.
pub fn check_intermed_cohearts(sess: &mut Session, m: &SiltCandidate, nn: &SiltCandidate, n: i32, budget: usize) -> Result<bool> {
    let upper = geq(sess, m, nn);
    let mn = sess.shift_candidate(m, n)?;
    let lower = geq(sess, nn, &mn);
    if !upper.verdict || !lower.verdict {
        return Err(Error::Precondition(format!("not sandwiched: upper {}, lower {}", describe(upper.certificate), describe(lower.certificate))));
    }
    let depth = n.max(0) as usize + 1;
    for &a in &nn.ids {
        let t = sess.complex(a).shift(-n);
        if !layered(sess, m, &t, depth, budget)? {
            return Ok(false);
        }
    }
    for &a in &m.ids {
        let t = sess.complex(a).clone();
        if !layered(sess, nn, &t, depth, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}
