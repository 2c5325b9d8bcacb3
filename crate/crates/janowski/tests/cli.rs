//! End-to-end tests of the `janowski` binary: output formats, exit codes,
//! round-trips, and byte determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_janowski"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn temp_path(name: &str) -> PathBuf {
    let mut dir = std::env::temp_dir();
    dir.push(format!("janowski-cli-test-{}-{name}", std::process::id()));
    dir
}

#[test]
fn compute_json_golden_record() {
    let out = run(&["compute", "--a", "1", "--b", "-1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out).trim(),
        "{\"A\":1,\"B\":-1,\"norm\":6,\"case\":\"B_NEG1\",\"argmax_x\":1,\"axis\":\"+\",\"alpha_root\":null,\"beta\":null}"
    );
}

#[test]
fn compute_human_output() {
    let out = run(&["compute", "--a", "1", "--b", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("norm       = 2.25000000000"), "{text}");
    assert!(text.contains("case       = A1_B_LT_THIRD"), "{text}");
    assert!(text.contains("alpha_root = 0.500000000000"), "{text}");
}

#[test]
fn compute_rejects_invalid_parameters() {
    let out = run(&["compute", "--a", "0.5", "--b", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("B < A"), "{}", stderr_of(&out));

    let out = run(&["compute", "--a", "1.2", "--b", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("A <= 1"));
}

#[test]
fn unknown_flags_exit_2_with_usage_on_stderr() {
    let out = run(&["compute", "--a", "1", "--b", "0", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout_of(&out).is_empty());
    assert!(stderr_of(&out).contains("Usage"), "{}", stderr_of(&out));
}

#[test]
fn compute_json_parses_and_matches_fields() {
    let out = run(&["compute", "--a", "0.9", "--b", "-0.55", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).expect("valid json");
    assert_eq!(v["case"], "MIXED_BETA_LT1");
    assert_eq!(v["axis"], "+");
    assert!((v["norm"].as_f64().unwrap() - 2.912_940_917_403_063_4).abs() < 1e-11);
    assert!((v["beta"].as_f64().unwrap() - 0.670_025_210_172_808_1).abs() < 1e-12);
    assert!(v["alpha_root"].as_f64().is_some());
    // Field order is pinned.
    let text = stdout_of(&out);
    let order = ["\"A\":", "\"B\":", "\"norm\":", "\"case\":", "\"argmax_x\":", "\"axis\":", "\"alpha_root\":", "\"beta\":"];
    let mut last = 0;
    for key in order {
        let at = text.find(key).expect(key);
        assert!(at > last || last == 0, "field {key} out of order");
        last = at;
    }
}

#[test]
fn table_csv_round_trips_through_compute() {
    let path = temp_path("table.csv");
    let out = run(&[
        "table",
        "--a-range",
        "-1:1:9",
        "--b-range",
        "-1:1:9",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("A,B,norm,case,argmax_x,axis,alpha_root,beta"));
    let mut rows = 0;
    let mut footer = None;
    for line in lines {
        if line.starts_with('#') {
            footer = Some(line.to_string());
            continue;
        }
        rows += 1;
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 8, "{line}");
        let (a, b) = (fields[0], fields[1]);
        let norm: f64 = fields[2].parse().unwrap();
        let again = run(&["compute", "--a", a, "--b", b, "--json"]);
        assert_eq!(again.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_str(stdout_of(&again).trim()).unwrap();
        assert!(
            (v["norm"].as_f64().unwrap() - norm).abs() <= 1e-12,
            "round-trip at ({a}, {b})"
        );
    }
    // 9x9 grid minus the 45 pairs with B >= A (the A = -1 column is inside
    // that wedge: B >= -1 = A there).
    assert_eq!(rows, 36);
    assert_eq!(footer.as_deref(), Some("# skipped 45 invalid pairs"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn table_is_deterministic_and_sorted() {
    let p1 = temp_path("det1.csv");
    let p2 = temp_path("det2.csv");
    for p in [&p1, &p2] {
        let out = run(&[
            "table",
            "--a-range",
            "1:-1:5",
            "--b-range",
            "-1:1:5",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let t1 = std::fs::read(&p1).unwrap();
    let t2 = std::fs::read(&p2).unwrap();
    assert_eq!(t1, t2);
    // Descending sweep still writes ascending (A, B) rows.
    let text = String::from_utf8(t1).unwrap();
    let mut pairs = Vec::new();
    for line in text.lines().skip(1) {
        if line.starts_with('#') {
            continue;
        }
        let f: Vec<&str> = line.split(',').collect();
        pairs.push((f[0].parse::<f64>().unwrap(), f[1].parse::<f64>().unwrap()));
    }
    let mut sorted = pairs.clone();
    sorted.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.total_cmp(&y.1)));
    assert_eq!(pairs, sorted);
    std::fs::remove_file(&p1).ok();
    std::fs::remove_file(&p2).ok();
}

#[test]
fn table_json_is_valid_and_counts_skips() {
    let path = temp_path("table.json");
    let out = run(&[
        "table",
        "--a-range",
        "0:1:5",
        "--b-range",
        "0:1:5",
        "--out",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).expect("valid json document");
    let records = v["records"].as_array().unwrap();
    // Pairs with B < A <= 1: C(5,2) = 10 of the 25 grid points.
    assert_eq!(records.len(), 10);
    assert_eq!(v["skipped_invalid_pairs"], 15);
    for r in records {
        assert!(r["norm"].as_f64().unwrap() > 0.0);
    }
    std::fs::remove_file(&path).ok();
}

#[test]
fn table_write_failure_exits_4() {
    let out = run(&[
        "table",
        "--a-range",
        "0:1:3",
        "--b-range",
        "0:1:3",
        "--out",
        "/nonexistent-dir/never/table.csv",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr_of(&out).contains("cannot write"));
}

#[test]
fn malformed_range_exits_2() {
    let out = run(&[
        "table",
        "--a-range",
        "0:1",
        "--b-range",
        "0:1:3",
        "--out",
        temp_path("never.csv").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("lo:hi:n"));
}

#[test]
fn verify_lemma_suite_reports_and_passes() {
    let out = run(&["verify", "--suite", "lemma", "--samples", "1000", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("lemma: 1000/1000 pass"), "{text}");
    assert!(text.contains("lemma.circle-argmax:"), "{text}");
    assert!(text.contains("lemma.beta-flip:"), "{text}");
}

#[test]
fn verify_output_is_byte_identical_across_runs() {
    let args = ["verify", "--suite", "schwarz", "--samples", "300", "--seed", "42"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn profile_writes_plot_columns() {
    let path = temp_path("profile.csv");
    let out = run(&[
        "profile",
        "--a",
        "1",
        "--b",
        "-1",
        "--points",
        "11",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,gamma1,gamma2,h1,h2");
    assert_eq!(lines.len(), 12);
    assert!(lines[1].starts_with("0,2,2,"));
    // Endpoint row stays finite through the cancelled gamma2 form: 3 = 2 + x
    // at x = 1 for (A, B) = (1, -1).
    let last: Vec<&str> = lines[11].split(',').collect();
    assert_eq!(last[0], "1");
    let gamma2: f64 = last[2].parse().unwrap();
    assert!((gamma2 - 3.0).abs() < 1e-12);

    let bad = run(&["profile", "--a", "1", "--b", "-1", "--points", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2));
    std::fs::remove_file(&path).ok();
}
