//! The Ã₂ example: `M = P1 ⊕ P3 ⊕ τS2[1]`, `N = Λ[1]`, `X = S2[2]`.

use serde_json::{json, Value};

use silting::algebra::{ar_translate, parse_algebra, simple};
use silting::complete::{bongartz, hereditary_complete, naive_complete, Status};
use silting::exactla::Field;
use silting::silting::{geq, is_presilting, is_silting, DEFAULT_BUDGET};
use silting::{Error, Result};

use crate::draw::{ar_window_svg, Shade};
use crate::{builtin_algebra, Command, Context, Format, Outcome, RunConfig, EXIT_FALSE, EXIT_NOINPUT, EXIT_SOFTWARE};

pub const DEFAULT_M: &str = "P1 + P3 + tauS2[1]";
pub const N_SPEC: &str = "Lambda[1]";
pub const X_SPEC: &str = "S2[2]";

/// One stated fact of the example and whether the computation agrees.
#[derive(Debug, Clone)]
pub struct Fact {
    pub name: &'static str,
    pub expected: Value,
    pub observed: Value,
    pub agrees: bool,
}

fn fact(name: &'static str, expected: Value, observed: Value) -> Fact {
    let agrees = expected == observed;
    Fact { name, expected, observed, agrees }
}

pub struct A2Report {
    pub facts: Vec<Fact>,
    pub diagnostics: Value,
    pub svg: String,
}

impl Fact {
    pub fn to_json(&self) -> Value {
        json!({ "name": self.name, "expected": self.expected, "observed": self.observed, "agrees": self.agrees })
    }
}

impl A2Report {
    pub fn first_mismatch(&self) -> Option<&Fact> {
        self.facts.iter().find(|f| !f.agrees)
    }
}

fn status_value(s: Status) -> Value {
    serde_json::to_value(s).expect("serializable")
}

/// Runs every check of the example; `m_spec` overrides `M`.
pub fn a2_report(ctx: &mut Context, m_spec: &str) -> Result<A2Report> {
    // The configured budget bounds the naive attempt; every other check gets at
    // least the default so that a small budget only moves the naive verdict.
    let naive_budget = ctx.budget();
    let budget = naive_budget.max(DEFAULT_BUDGET);
    let m = ctx.object(m_spec)?;
    let x = ctx.object(X_SPEC)?;
    let n = ctx.object(N_SPEC)?;
    let mut facts = Vec::new();

    let sm = is_silting(&mut ctx.sess, &m, budget)?;
    facts.push(fact("M is silting", json!("true"), json!(sm.verdict)));
    facts.push(fact("X is presilting", json!(true), json!(is_presilting(&mut ctx.sess, &x).verdict)));
    facts.push(fact("X lies in V_M", json!(true), json!(geq(&mut ctx.sess, &m, &x).verdict)));
    let m2 = ctx.sess.shift_candidate(&m, 2)?;
    let w = geq(&mut ctx.sess, &x, &m2);
    facts.push(fact("M[2] lies in V_X", json!(true), json!(w.verdict)));
    let naive = naive_complete(&mut ctx.sess, &m, &x, naive_budget)?;
    facts.push(fact("naive completion with respect to M", json!("indeterminate"), status_value(naive.status)));
    let n1 = ctx.sess.shift_candidate(&n, 1)?;
    let (up, down) = (geq(&mut ctx.sess, &n, &x), geq(&mut ctx.sess, &x, &n1));
    facts.push(fact("X is two-term with respect to N", json!(true), json!(up.verdict && down.verdict)));
    let (bstatus, bsummands, bdetail) = match bongartz(&mut ctx.sess, &n, &x, budget) {
        Ok(r) => (status_value(r.status), json!(r.summands()), json!(null)),
        Err(Error::Precondition(msg)) => (json!("precondition-violated"), json!(null), json!(msg)),
        Err(e) => return Err(e),
    };
    facts.push(fact("Bongartz completion with respect to N", json!("success"), bstatus.clone()));
    facts.push(fact("Bongartz completion has 3 summands", json!(3), bsummands.clone()));

    // Not stated in the example; computed for context.
    let x_silting = is_silting(&mut ctx.sess, &x, budget)?;
    let l2 = ctx.object("Lambda[2]")?;
    let b2 = bongartz(&mut ctx.sess, &l2, &x, budget)?;
    let h = hereditary_complete(&mut ctx.sess, &x, budget)?;
    let diagnostics = json!({
        "M_silting_layer": sm.layer,
        "X_silting": x_silting,
        "M2_in_VX_certificate": w.certificate,
        "X_two_term_N": { "upper": up, "lower": down },
        "bongartz_N_detail": bdetail,
        "naive_M_steps": naive.steps,
        "naive_M_checks": naive.checks,
        "bongartz_lambda2": { "status": b2.status, "summands": b2.summands(), "result": ctx.candidate_json(&b2.result) },
        "hereditary": { "status": h.status, "summands": h.summands(), "result": ctx.candidate_json(&h.result) },
    });

    let s2 = simple(&ctx.alg, 1)?;
    let ts2 = ar_translate(&s2)?;
    let shades = vec![
        Shade { name: "V_M".into(), object: m.clone() },
        Shade { name: "V_X".into(), object: x.clone() },
        Shade { name: "V_M ∩ V_X".into(), object: m.union(&x) },
    ];
    let svg = ar_window_svg(&mut ctx.sess, ctx.config.depth as usize, 0, 3, &[s2, ts2], &shades)?;
    Ok(A2Report { facts, diagnostics, svg })
}

pub fn run(config: &RunConfig, cmd: &Command) -> Outcome {
    let Command::A2Report { m, svg } = cmd else { unreachable!("dispatched on A2Report") };
    let alg = parse_algebra(builtin_algebra("atilde2").expect("built in"), Field::Rationals).expect("built-in algebra parses");
    let mut ctx = Context::new(config.clone(), alg, "atilde2".into());
    let report = match a2_report(&mut ctx, m.as_deref().unwrap_or(DEFAULT_M)) {
        Ok(r) => r,
        Err(e) => return Outcome::err(EXIT_SOFTWARE, format!("error: {e}")),
    };
    if let Some(path) = svg {
        if let Err(e) = std::fs::write(path, &report.svg) {
            return Outcome::err(EXIT_NOINPUT, format!("{path}: {e}"));
        }
    }
    let code = if report.first_mismatch().is_some() { EXIT_FALSE } else { 0 };
    let stderr = report
        .first_mismatch()
        .map(|f| format!("mismatch: {}: expected {}, observed {}\n", f.name, f.expected, f.observed))
        .unwrap_or_default();
    let stdout = match config.format {
        Format::Svg => report.svg.clone(),
        Format::Text => {
            let mut s = String::new();
            for f in &report.facts {
                s.push_str(&format!("[{}] {}: expected {}, observed {}\n", if f.agrees { "ok" } else { "MISMATCH" }, f.name, f.expected, f.observed));
            }
            s
        }
        _ => {
            let result = json!({ "facts": report.facts.iter().map(Fact::to_json).collect::<Vec<_>>(), "diagnostics": report.diagnostics, "all_agree": code == 0 });
            format!("{}\n", serde_json::to_string_pretty(&ctx.envelope("a2-report", result)).expect("serializable"))
        }
    };
    Outcome { code, stdout, stderr }
}
