//! Command-line front end: argument parsing, report assembly and exit codes.
//!
//! Exit codes: 0 true or success, 1 false or failure, 2 indeterminate,
//! 3 precondition violated, 64 unparseable input, 66 unreadable file,
//! 70 any other error.

pub mod a2;
pub mod draw;

use std::ffi::OsString;
use std::path::Path;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use silting::algebra::{knitted_indecomposables, parse_algebra, Knit, PathAlgebra};
use silting::complete::{bongartz, hereditary_complete, naive_complete, CompletionReport, Status};
use silting::exactla::Field;
use silting::explore::{explore_silt2, silting_discrete_probe};
use silting::objspec::parse_object;
use silting::perf::{PerfComplex, Session, SiltCandidate};
use silting::silting::{geq, in_coaisle, is_presilting, is_silting, Truth};
use silting::tau::bijection_check;
use silting::Error;

pub const SCHEMA: &str = "silting-report/1";

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INDETERMINATE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_NOINPUT: i32 = 66;
pub const EXIT_SOFTWARE: i32 = 70;

const OBJECT_HELP: &str = "Object specs: expr := term ('+' term)*; term := atom ('[' int ']')*; \
atom := Lambda | P<v> | S<v> | I<v> | tau atom | tauinv atom | '(' expr ')'. \
Example: \"P1 + P3 + tauS2[1]\". X[k] is the k-th suspension.";

const ALGEBRA_HELP: &str = "Algebras: a file in the quiver language (vertices/arrow/relation lines) \
or one of the built-in names a1, a2, a3, atilde2, nakayama3.";

#[derive(Parser, Debug)]
#[command(name = "silting", version, about = "Silting objects, completions and two-term silting theory", after_help = format!("{OBJECT_HELP}\n\n{ALGEBRA_HELP}"))]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Quiver file or built-in algebra name.
    #[arg(long, global = true, default_value = "a2")]
    pub algebra: String,
    /// Ground field: q or fp:<p>.
    #[arg(long, global = true, default_value = "q")]
    pub field: String,
    /// Truncation and search step budget.
    #[arg(long, global = true, default_value_t = 32, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    /// Knitting depth for module catalogs and figures.
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    pub depth: u64,
    /// Node cap for exchange-graph exploration.
    #[arg(long, global = true, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Recorded in reports; every algorithm is deterministic.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
    Svg,
    Dot,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Bongartz,
    Hereditary,
    Naive,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide a predicate of an object.
    Check {
        object: String,
        #[arg(long, group = "predicate")]
        presilting: bool,
        #[arg(long, group = "predicate")]
        silting: bool,
        /// `REF ≥ X ≥ REF[1]` (REF defaults to Lambda).
        #[arg(long, group = "predicate")]
        two_term: bool,
        /// `X ≥ Y`.
        #[arg(long, group = "predicate", value_name = "Y")]
        geq: Option<String>,
        /// `T ∈ V_X`.
        #[arg(long, group = "predicate", value_name = "T")]
        coaisle: Option<String>,
        #[arg(long = "ref", value_name = "M")]
        reference: Option<String>,
    },
    /// Complete a presilting object to a silting object.
    Complete {
        object: String,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long = "ref", value_name = "M")]
        reference: Option<String>,
    },
    /// Reproduce the Ã2 example: predicates, both completion attempts and the figure.
    A2Report {
        /// Override the silting object M.
        #[arg(long = "m", value_name = "M")]
        m: Option<String>,
        /// Write the figure to this file.
        #[arg(long, value_name = "PATH")]
        svg: Option<String>,
    },
    /// Draw a window of the AR quiver of the derived category (hereditary only).
    Draw {
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        lo: i32,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        hi: i32,
        /// Shade nodes lying in V_X; up to three, drawn red, blue, green.
        #[arg(long, value_name = "X")]
        shade: Vec<String>,
    },
    /// Exchange graph of two-term silting objects with respect to REF.
    Explore {
        #[arg(long = "ref", value_name = "M")]
        reference: Option<String>,
    },
    /// Bounded silting-discreteness probe.
    Probe {
        /// Shift depth d: explores silting objects between Lambda and Lambda[d].
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        shift_depth: u64,
    },
    /// Two-term silting objects against support tau-tilting pairs.
    Tau,
}

/// Captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn err(code: i32, msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome { code, stdout: String::new(), stderr }
    }
}

pub fn builtin_algebra(name: &str) -> Option<&'static str> {
    Some(match name {
        "a1" => "vertices 1\n",
        "a2" => "vertices 1 2\narrow a: 1 -> 2\n",
        "a3" => "vertices 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n",
        "atilde2" => "vertices 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 1 -> 3\n",
        "nakayama3" => "vertices 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrelation b*a\n",
        _ => return None,
    })
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. }
        | Error::UndeclaredVertex { .. }
        | Error::NonMonomial { .. }
        | Error::ObjSpec { .. }
        | Error::Json(_)
        | Error::UnknownVertex(_) => EXIT_USAGE,
        Error::Precondition(_) | Error::NotHereditary(_) => EXIT_PRECONDITION,
        _ => EXIT_SOFTWARE,
    }
}

/// Everything a command needs: the session and the parsed configuration.
pub struct Context {
    pub config: RunConfig,
    pub sess: Session,
    pub alg: Arc<PathAlgebra>,
    pub algebra_name: String,
}

impl Context {
    pub fn new(config: RunConfig, alg: Arc<PathAlgebra>, algebra_name: String) -> Self {
        Context { config, sess: Session::new(alg.clone()), alg, algebra_name }
    }

    pub fn budget(&self) -> usize {
        self.config.budget as usize
    }

    pub fn object(&mut self, spec: &str) -> Result<SiltCandidate, Error> {
        let x = parse_object(&self.alg, spec, self.sess.pd_cap)?;
        self.sess.candidate(&x)
    }

    pub fn reference(&mut self, spec: Option<&str>) -> Result<SiltCandidate, Error> {
        self.object(spec.unwrap_or("Lambda"))
    }

    pub fn candidate_json(&self, c: &SiltCandidate) -> Value {
        json!(c.ids.iter().map(|&i| self.sess.complex(i).to_json()).collect::<Vec<_>>())
    }

    /// Wraps a command result with the versioned header.
    pub fn envelope(&self, command: &str, result: Value) -> Value {
        json!({
            "schema": SCHEMA,
            "command": command,
            "algebra": self.algebra_name,
            "field": self.alg.field.to_string(),
            "seed": self.config.seed,
            "result": result,
        })
    }
}

fn load_algebra(config: &RunConfig) -> Result<(Arc<PathAlgebra>, String), Outcome> {
    let field = Field::parse(&config.field).map_err(|m| Outcome::err(EXIT_USAGE, format!("--field: {m}")))?;
    let (src, name) = if Path::new(&config.algebra).is_file() {
        let src = std::fs::read_to_string(&config.algebra)
            .map_err(|e| Outcome::err(EXIT_NOINPUT, format!("{}: {e}", config.algebra)))?;
        (src, config.algebra.clone())
    } else if let Some(src) = builtin_algebra(&config.algebra) {
        (src.to_string(), config.algebra.clone())
    } else {
        return Err(Outcome::err(EXIT_NOINPUT, format!("{}: no such file or built-in algebra", config.algebra)));
    };
    let alg = parse_algebra(&src, field).map_err(|e| Outcome::err(error_code(&e), format!("{name}: {e}")))?;
    Ok((alg, name))
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome::err(code, text)
            };
        }
    };
    if matches!(cli.command, Command::A2Report { .. }) {
        return a2::run(&cli.config, &cli.command);
    }
    let (alg, name) = match load_algebra(&cli.config) {
        Ok(a) => a,
        Err(o) => return o,
    };
    let mut ctx = Context::new(cli.config.clone(), alg, name);
    match dispatch(&mut ctx, &cli.command) {
        Ok(o) => o,
        Err(e) => Outcome::err(error_code(&e), format!("error: {e}")),
    }
}

fn emit(ctx: &Context, command: &str, code: i32, result: Value, text: String) -> Outcome {
    let stdout = match ctx.config.format {
        Format::Text => text,
        _ => format!("{}\n", serde_json::to_string_pretty(&ctx.envelope(command, result)).expect("JSON values serialize")),
    };
    Outcome { code, stdout, stderr: String::new() }
}

fn truth_code(t: Truth) -> i32 {
    match t {
        Truth::True => EXIT_TRUE,
        Truth::False => EXIT_FALSE,
        Truth::Indeterminate => EXIT_INDETERMINATE,
    }
}

fn bool_code(b: bool) -> i32 {
    if b {
        EXIT_TRUE
    } else {
        EXIT_FALSE
    }
}

fn dispatch(ctx: &mut Context, cmd: &Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Check { object, presilting, silting, two_term, geq: y, coaisle, reference } => {
            let x = ctx.object(object)?;
            let budget = ctx.budget();
            let (name, code, result) = if *silting {
                let v = is_silting(&mut ctx.sess, &x, budget)?;
                ("silting", truth_code(v.verdict), serde_json::to_value(&v).expect("serializable"))
            } else if *two_term {
                let m = ctx.reference(reference.as_deref())?;
                let m1 = ctx.sess.shift_candidate(&m, 1)?;
                let upper = geq(&mut ctx.sess, &m, &x);
                let lower = geq(&mut ctx.sess, &x, &m1);
                let verdict = upper.verdict && lower.verdict;
                ("two-term", bool_code(verdict), json!({ "verdict": verdict, "upper": upper, "lower": lower }))
            } else if let Some(y) = y {
                let yc = ctx.object(y)?;
                let w = geq(&mut ctx.sess, &x, &yc);
                ("geq", bool_code(w.verdict), serde_json::to_value(w).expect("serializable"))
            } else if let Some(t) = coaisle {
                let tc = parse_object(&ctx.alg, t, ctx.sess.pd_cap)?;
                let v = in_coaisle(&ctx.sess, &x, &tc);
                ("coaisle", bool_code(v), json!({ "verdict": v }))
            } else {
                let _ = presilting;
                let w = is_presilting(&mut ctx.sess, &x);
                ("presilting", bool_code(w.verdict), serde_json::to_value(w).expect("serializable"))
            };
            let text = format!("{name}: {}\n", result["verdict"]);
            let result = json!({ "predicate": name, "object": ctx.candidate_json(&x), "report": result });
            Ok(emit(ctx, "check", code, result, text))
        }
        Command::Complete { object, method, reference } => {
            let x = ctx.object(object)?;
            let budget = ctx.budget();
            let report = match method {
                Method::Hereditary => hereditary_complete(&mut ctx.sess, &x, budget),
                Method::Bongartz => {
                    let m = ctx.reference(reference.as_deref())?;
                    bongartz(&mut ctx.sess, &m, &x, budget)
                }
                Method::Naive => {
                    let m = ctx.reference(reference.as_deref())?;
                    naive_complete(&mut ctx.sess, &m, &x, budget)
                }
            };
            let report = match report {
                Ok(r) => r,
                Err(Error::Precondition(msg)) => {
                    let result = json!({ "status": "precondition-violated", "detail": msg });
                    return Ok(emit(ctx, "complete", EXIT_PRECONDITION, result, format!("precondition violated: {msg}\n")));
                }
                Err(e) => return Err(e),
            };
            let code = completion_code(&report);
            let text = completion_text(ctx, &report);
            Ok(emit(ctx, "complete", code, report.to_json(&ctx.sess), text))
        }
        Command::Draw { lo, hi, shade } => {
            let mut shades = Vec::new();
            for s in shade.iter().take(3) {
                shades.push(draw::Shade { name: format!("V_{{{s}}}"), object: ctx.object(s)? });
            }
            let depth = ctx.config.depth as usize;
            let regular: Vec<_> = knitted_indecomposables(&ctx.alg, depth)?
                .into_iter()
                .filter(|(_, k)| *k == Knit::Other)
                .map(|(r, _)| r)
                .collect();
            let svg = draw::ar_window_svg(&mut ctx.sess, depth, *lo, *hi, &regular, &shades)?;
            Ok(Outcome { code: 0, stdout: svg, stderr: String::new() })
        }
        Command::Explore { reference } => {
            let m = ctx.reference(reference.as_deref())?;
            let g = explore_silt2(&mut ctx.sess, &m, ctx.config.cap as usize)?;
            let code = bool_code(g.complete);
            if ctx.config.format == Format::Dot {
                return Ok(Outcome { code, stdout: g.to_dot(&ctx.sess), stderr: String::new() });
            }
            let text = format!("{} two-term silting objects, {} edges, complete = {}\n", g.nodes.len(), g.edges.len(), g.complete);
            let result = g.to_json(&ctx.sess);
            Ok(emit(ctx, "explore", code, result, text))
        }
        Command::Probe { shift_depth } => {
            let p = silting_discrete_probe(&mut ctx.sess, *shift_depth as usize, ctx.config.cap as usize)?;
            Ok(emit(ctx, "probe", bool_code(p.positive), p.to_json(), p.to_text()))
        }
        Command::Tau => {
            let lambda = ctx.sess.candidate(&PerfComplex::lambda(&ctx.alg))?;
            let g = explore_silt2(&mut ctx.sess, &lambda, ctx.config.cap as usize)?;
            let catalog: Vec<_> =
                knitted_indecomposables(&ctx.alg, ctx.config.depth as usize)?.into_iter().map(|(r, _)| r).collect();
            let r = bijection_check(&ctx.sess, &g.nodes, &catalog)?;
            let text = format!(
                "{} two-term silting objects, {} support tau-tilting pairs, bijection = {}\n",
                r.two_term,
                r.pairs,
                r.ok()
            );
            let mut result = r.to_json(&ctx.sess, &g.nodes);
            result["complete"] = json!(g.complete);
            Ok(emit(ctx, "tau", bool_code(r.ok() && g.complete), result, text))
        }
        Command::A2Report { .. } => unreachable!("handled before the algebra is loaded"),
    }
}

pub fn completion_code(r: &CompletionReport) -> i32 {
    match r.status {
        Status::Success => EXIT_TRUE,
        Status::Failure => EXIT_FALSE,
        Status::Indeterminate => EXIT_INDETERMINATE,
    }
}

fn completion_text(ctx: &Context, r: &CompletionReport) -> String {
    let mut s = format!("{} completion: {}, {} summands after {} steps\n", r.method, r.status, r.summands(), r.steps);
    for &i in &r.result.ids {
        s.push_str(&format!("  {}\n", ctx.sess.complex(i).label()));
    }
    for c in &r.checks {
        s.push_str(&format!("  [{}] {} {}\n", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail));
    }
    s
}
