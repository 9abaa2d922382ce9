use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_imbessel"));
    cmd.args(args).env_remove("IMBESSEL_THREADS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

/// Rows as header-keyed maps; `#` lines are skipped.
fn csv(text: &str) -> Vec<std::collections::HashMap<String, String>> {
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    lines
        .map(|l| header.iter().map(|h| h.to_string()).zip(l.split(',').map(str::to_string)).collect())
        .collect()
}

fn f(row: &std::collections::HashMap<String, String>, key: &str) -> f64 {
    row[key].parse().unwrap()
}

#[test]
fn eval_zero_order_is_j0() {
    let o = run(&["eval", "--kind", "osc", "--nu", "0", "--x", "1"]);
    assert_eq!(code(&o), 0);
    let rows = csv(&stdout(&o));
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["cos_part"], "0.7651976865579666");
    assert_eq!(rows[0]["sin_part"], "0");
    assert_eq!(rows[0]["kind"], "osc");
}

#[test]
fn eval_modified_zero_order_is_i0() {
    let o = run(&["eval", "--kind", "mod", "--nu", "0", "--x", "1"]);
    assert_eq!(csv(&stdout(&o))[0]["cos_part"], "1.2660658777520084");
}

#[test]
fn eval_small_argument() {
    let o = run(&["eval", "--nu", "1", "--x", "1e-6", "--tol", "1e-15"]);
    assert_eq!(code(&o), 0);
    let r = &csv(&stdout(&o))[0];
    let theta = 1e-6f64.ln();
    assert!((f(r, "cos_part") - theta.cos()).abs() <= 1e-11);
    assert!((f(r, "sin_part") - theta.sin()).abs() <= 1e-11);
}

#[test]
fn negative_argument_is_a_domain_error() {
    let o = run(&["eval", "--nu", "1", "--x", "-1"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("x must be > 0"));
    assert!(o.stdout.is_empty());
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(code(&run(&["eval", "--nu", "abc", "--x", "1"])), 2);
    assert_eq!(code(&run(&["eval", "--kind", "neither", "--nu", "1", "--x", "1"])), 2);
    assert_eq!(code(&run(&["eval", "--nu", "1", "--x", "1", "--tol", "0"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn unreachable_tolerance_exits_3() {
    let o = run(&["eval", "--kind", "mod", "--nu", "1", "--x", "5", "--tol", "1e-300"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn table_shape_and_round_trip() {
    let o = run(&["table", "--nu", "0,1", "--x-min", "0.5", "--x-max", "1.5", "--x-steps", "3"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 7);
    assert!(text.starts_with("x,nu,cos_part,sin_part,d_cos,d_sin,terms,bound\n"));
    let rows = csv(&text);
    assert_eq!(rows.iter().map(|r| f(r, "x")).collect::<Vec<_>>(), [0.5, 1.0, 1.5, 0.5, 1.0, 1.5]);
    for r in &rows {
        let direct = stdout(&run(&["eval", "--nu", &r["nu"], "--x", &r["x"], "--tol", "1e-12"]));
        assert_eq!(csv(&direct)[0]["cos_part"], r["cos_part"]);
        assert!(f(r, "bound") <= 1e-12);
    }
    for r in rows.iter().filter(|r| r["nu"] == "0") {
        assert_eq!(f(r, "sin_part"), 0.0);
        assert_eq!(f(r, "d_sin"), 0.0);
    }
}

#[test]
fn explicit_points_and_json() {
    let o = run(&["table", "--kind", "mod", "--nu", "2", "--x", "0.3,3", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[1]["x"], 3.0);
    assert!(rows[0]["cos_part"].is_f64());
}

#[test]
fn empty_grid_is_usage_error() {
    let o = run(&["table", "--nu", "1", "--x-steps", "0"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("empty"));
    assert_eq!(code(&run(&["table", "--nu", "1", "--x-min", "0"])), 2);
    assert_eq!(code(&run(&["table", "--nu", "1", "--x-min", "3", "--x-max", "1"])), 2);
}

#[test]
fn compare_passes_on_the_default_grid() {
    let o = run(&["compare"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let summary = text.lines().last().unwrap();
    assert!(summary.starts_with("# summary points=100 "), "{summary}");
    assert!(summary.ends_with("result=PASS"));
    assert!(csv(&text).iter().all(|r| r["within_bound"] == "true" && r["within_tol"] == "true"));
}

#[test]
fn compare_fails_with_too_few_terms() {
    let o = run(&["compare", "--kind", "mod", "--terms", "1"]);
    assert_eq!(code(&o), 3);
    let text = stdout(&o);
    assert!(text.contains("bound_failures=0"));
    assert!(text.trim_end().ends_with("result=FAIL"));
}

#[test]
fn compare_json_has_summary() {
    let o = run(&["compare", "--nu", "1", "--x", "0.5,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"]["result"], "PASS");
    assert_eq!(v["rows"].as_array().unwrap().len(), 2);
}

#[test]
fn bounds_track_the_eight_term_claims() {
    let o = run(&["bounds", "--nu", "1", "--x", "2", "--terms", "2,4,8,16"]);
    assert_eq!(code(&o), 0);
    let rows = csv(&stdout(&o));
    let at8 = rows.iter().find(|r| r["terms"] == "8").unwrap();
    assert!(f(at8, "tail_bound") <= 24.0 / (40320.0f64 * 40320.0));
    assert!(f(at8, "empirical_error") <= f(at8, "tail_bound"));
    let bounds: Vec<f64> = rows.iter().map(|r| f(r, "tail_bound")).collect();
    assert!(bounds.windows(2).all(|w| w[1] < w[0]), "{bounds:?}");

    let o = run(&["bounds", "--nu", "1", "--x", "1", "--terms", "8"]);
    assert!(f(&csv(&stdout(&o))[0], "empirical_error") <= 1e-13);
}

#[test]
fn classify_examples() {
    let o = run(&["classify", "--a", "2", "--b", "1", "--c", "4", "--beta", "1"]);
    assert_eq!(code(&o), 0);
    let r = &csv(&stdout(&o))[0];
    assert_eq!(r["class"], "imaginary");
    assert!((f(r, "order") - 3f64.sqrt() / 2.0).abs() < 1e-15);
    assert_eq!(f(r, "prefactor_exponent"), -0.5);
    assert_eq!(f(r, "gamma"), 2.0);

    let o = run(&["classify", "--a", "1", "--b", "-4", "--c", "1", "--beta", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["class"], "real");
    assert_eq!(v[0]["order"], 2.0);

    assert_eq!(code(&run(&["classify", "--a", "1", "--b", "1", "--c", "1", "--beta", "0"])), 2);
    assert_eq!(code(&run(&["classify", "--a", "1", "--b", "1", "--c", "-1", "--beta", "1"])), 2);
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["table", "--nu", "0,0.7,-1.3,2", "--x-steps", "50", "--x-scale", "log", "--x-min", "0.01", "--x-max", "6"];
    let one = run_env(&args, &[("IMBESSEL_THREADS", "1")]);
    let eight = run_env(&args, &[("IMBESSEL_THREADS", "8")]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, eight.stdout);
    assert_eq!(one.stdout, run(&args).stdout);
}

#[test]
fn invalid_thread_count_is_usage_error() {
    for bad in ["0", "many", "-2"] {
        let o = run_env(&["table", "--nu", "1"], &[("IMBESSEL_THREADS", bad)]);
        assert_eq!(code(&o), 2, "{bad}");
    }
}
