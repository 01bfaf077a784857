use serde_json::Value;
use silting_cli::*;

fn run(args: &[&str]) -> Outcome {
    silting_cli::run(std::iter::once("silting").chain(args.iter().copied()))
}

fn json(o: &Outcome) -> Value {
    serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", o.stdout))
}

#[test]
fn check_examples() {
    let o = run(&["--algebra", "a2", "check", "--silting", "Lambda"]);
    assert_eq!(o.code, EXIT_TRUE, "{}", o.stderr);
    assert_eq!(json(&o)["schema"], SCHEMA);
    assert_eq!(run(&["--algebra", "atilde2", "check", "--presilting", "S2[2]"]).code, EXIT_TRUE);
    // One summand cannot generate; Ext¹(S1, S2) ≠ 0.
    assert_eq!(run(&["--algebra", "a2", "check", "--silting", "P1"]).code, EXIT_FALSE);
    assert_eq!(run(&["--algebra", "a2", "check", "--presilting", "S1 + S2"]).code, EXIT_FALSE);
    assert_eq!(run(&["--algebra", "a2", "check", "--silting", "S1 + P2[1]"]).code, EXIT_TRUE);
}

#[test]
fn malformed_spec_is_a_usage_error() {
    let o = run(&["check", "--silting", "P1 +"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("offset"), "{}", o.stderr);
    assert!(o.stdout.is_empty());
}

#[test]
fn exit_code_contract() {
    let corpus: &[(&[&str], i32)] = &[
        (&["--algebra", "a3", "check", "--silting", "Lambda[2]"], EXIT_TRUE),
        (&["--algebra", "a3", "check", "--two-term", "P1[1] + S3"], EXIT_TRUE),
        (&["--algebra", "a3", "check", "--two-term", "P1[2]"], EXIT_FALSE),
        (&["--algebra", "a2", "check", "S1", "--geq", "S1[1]"], EXIT_TRUE),
        (&["--algebra", "a2", "check", "S1[1]", "--geq", "S1"], EXIT_FALSE),
        (&["--algebra", "a2", "check", "Lambda", "--coaisle", "S1"], EXIT_TRUE),
        (&["--algebra", "a2", "complete", "S1", "--method", "bongartz"], EXIT_TRUE),
        (&["--algebra", "a2", "complete", "S1[3]", "--method", "bongartz"], EXIT_PRECONDITION),
        (&["--algebra", "nakayama3", "complete", "P1", "--method", "hereditary"], EXIT_PRECONDITION),
        (&["--algebra", "nakayama3", "draw"], EXIT_PRECONDITION),
        (&["--algebra", "no-such-algebra", "check", "P1"], EXIT_NOINPUT),
        (&["--field", "fp:4", "check", "P1"], EXIT_USAGE),
        (&["--format", "pdf", "check", "P1"], EXIT_USAGE),
        (&["check", "P9"], EXIT_USAGE),
        (&[], EXIT_USAGE),
        (&["--help"], 0),
        (&["--version"], 0),
    ];
    for (args, code) in corpus {
        let o = run(args);
        assert_eq!(o.code, *code, "{args:?}: {}", o.stderr);
        if *code >= EXIT_PRECONDITION && !args.contains(&"--help") {
            assert!(!o.stderr.is_empty() || !o.stdout.is_empty(), "{args:?} printed nothing");
        }
    }
}

#[test]
fn complete_examples() {
    let o = run(&["--algebra", "atilde2", "complete", "S2[2]", "--method", "hereditary"]);
    assert_eq!(o.code, EXIT_TRUE, "{}", o.stderr);
    let j = json(&o);
    assert_eq!(j["result"]["status"], "success");
    assert_eq!(j["result"]["result"].as_array().unwrap().len(), 3);

    let o = run(&["--algebra", "atilde2", "complete", "S2[2]", "--method", "naive", "--ref", "P1+P3+tauS2[1]"]);
    assert_eq!(o.code, EXIT_INDETERMINATE);
    assert_eq!(json(&o)["result"]["status"], "indeterminate");
}

#[test]
fn complete_bongartz_with_respect_to_n() {
    let o = run(&["--algebra", "atilde2", "complete", "S2[2]", "--method", "bongartz", "--ref", "Lambda[1]"]);
    assert_eq!(o.code, EXIT_TRUE, "{}", o.stdout);
}

#[test]
fn a2_report_default_run() {
    let o = run(&["a2-report"]);
    assert_eq!(o.code, EXIT_TRUE, "{}", o.stderr);
}

#[test]
fn a2_report_small_budget_only_moves_the_naive_attempt() {
    let default = run(&["a2-report"]);
    let o = run(&["--budget", "1", "a2-report"]);
    assert_eq!(o.code, default.code);
    let (full, small) = (json(&default), json(&o));
    let facts = |j: &Value| j["result"]["facts"].as_array().unwrap().clone();
    assert_eq!(facts(&full), facts(&small));
    assert!(small["result"]["diagnostics"]["naive_M_steps"].as_u64().unwrap() <= 1);
    let naive = facts(&small).into_iter().find(|f| f["name"] == "naive completion with respect to M").unwrap();
    assert_eq!(naive["observed"], "indeterminate");
}

#[test]
fn a2_report_wrong_m_fails_the_silting_check() {
    let o = run(&["a2-report", "--m", "P1 + P3"]);
    assert_eq!(o.code, EXIT_FALSE);
    assert!(o.stderr.contains("M is silting"), "{}", o.stderr);
}

#[test]
fn a2_report_svg() {
    let o = run(&["--format", "svg", "a2-report"]);
    assert!(o.stdout.starts_with(draw::SVG_HEADER));
    for c in ["#d62728", "#1f77b4", "#2ca02c"] {
        assert!(o.stdout.contains(c), "{c} missing");
    }
}

#[test]
fn draw_a2_strip() {
    let o = run(&["--algebra", "a2", "--depth", "3", "draw", "--lo", "0", "--hi", "2"]);
    assert_eq!(o.code, EXIT_TRUE, "{}", o.stderr);
    assert!(o.stdout.starts_with(draw::SVG_HEADER));
    // Three indecomposables per shift.
    assert_eq!(o.stdout.matches("r=\"13\"").count(), 9);
    for label in ["10", "01", "11", "10[1]", "01[2]", "11[2]"] {
        assert!(o.stdout.contains(&format!(">{label}</text>")), "{label} missing");
    }
}

#[test]
fn draw_shading() {
    let o = run(&["--algebra", "a2", "draw", "--lo", "0", "--hi", "0", "--shade", "Lambda"]);
    // V_Λ holds the complexes without cohomology in positive degrees; the
    // legend adds one red square.
    assert_eq!(o.stdout.matches("fill=\"#d62728\" fill-opacity").count(), 3 + 1);
    let o = run(&["--algebra", "a2", "draw", "--lo=-1", "--hi=-1", "--shade", "Lambda"]);
    assert_eq!(o.stdout.matches("fill=\"#d62728\" fill-opacity").count(), 1);
}

#[test]
fn draw_empty_window() {
    let o = run(&["--algebra", "a2", "draw", "--lo", "1", "--hi", "0"]);
    assert_eq!(o.code, EXIT_TRUE);
    assert!(o.stdout.contains("width=\"80\" height=\"80\""));
    assert!(!o.stdout.contains("<circle"));
}

#[test]
fn explore_and_tau() {
    let o = run(&["--algebra", "a2", "--format", "dot", "explore"]);
    assert_eq!(o.code, EXIT_TRUE);
    assert_eq!(o.stdout.matches(" -- ").count(), 5);
    let o = run(&["--algebra", "a3", "tau"]);
    assert_eq!(o.code, EXIT_TRUE, "{}", o.stderr);
    let j = json(&o);
    assert_eq!(j["result"]["two_term"], 14);
    assert_eq!(j["result"]["pairs"], 14);
}

#[test]
fn probe_reports_the_disclaimer() {
    let o = run(&["--algebra", "a2", "probe"]);
    assert_eq!(o.code, EXIT_TRUE);
    let j = json(&o);
    assert!(j["result"]["disclaimer"].as_str().unwrap().starts_with("Bounded probe"));
    assert_eq!(j["result"]["verdict"], "silting-discrete up to depth 1");
    let o = run(&["--algebra", "a2", "--format", "text", "probe"]);
    assert!(o.stdout.contains("Bounded probe"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["--algebra", "a3", "explore"][..],
        &["--algebra", "a3", "tau"],
        &["--algebra", "a2", "--seed", "7", "complete", "S1", "--method", "bongartz"],
        &["--algebra", "atilde2", "--depth", "2", "draw", "--shade", "Lambda", "--shade", "S2[2]"],
    ] {
        assert_eq!(run(args), run(args), "{args:?}");
    }
}

#[test]
fn binary_matches_the_library() {
    let args = ["--algebra", "a2", "check", "--silting", "Lambda"];
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_silting")).args(args).output().unwrap();
    let lib = run(&args);
    assert_eq!(out.status.code(), Some(lib.code));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), lib.stdout);
}

#[test]
fn algebra_files_are_read() {
    let dir = std::env::temp_dir().join(format!("silting-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a2.quiver");
    std::fs::write(&path, "vertices 1 2\narrow a: 1 -> 2\n").unwrap();
    let o = run(&["--algebra", path.to_str().unwrap(), "check", "--silting", "Lambda"]);
    assert_eq!(o.code, EXIT_TRUE, "{}", o.stderr);
    std::fs::write(&path, "vertices 1\narrow a: 1 -> 7\n").unwrap();
    assert_eq!(run(&["--algebra", path.to_str().unwrap(), "check", "P1"]).code, EXIT_USAGE);
    std::fs::remove_dir_all(&dir).unwrap();
}
