use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lefschetz"))
        .args(args)
        .env_remove("LEFSCHETZ_FORMAT")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--format", "json", "--deterministic"];
    full.extend_from_slice(args);
    let out = run(&full);
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (v, out.status.code().unwrap())
}

#[test]
fn check_slp_of_the_lex_example() {
    let (v, code) = json(&["check", "slp", "--num", "x^3,y^4", "--den", "x^5,y^5"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["holds"], true);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert_eq!(v["command"], "check slp");
}

#[test]
fn failing_check_still_exits_zero_and_lists_failures() {
    let (v, code) = json(&[
        "check",
        "wlp",
        "--num",
        "x^2,y^2,z^2",
        "--den",
        "x^3,y^3,z^3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["holds"], false);
    let f = &v["failures"][0];
    assert_eq!(
        (f["i"].as_u64(), f["d"].as_u64(), f["rank"].as_u64()),
        (Some(3), Some(1), Some(5))
    );
}

#[test]
fn report_schema() {
    let (v, _) = json(&["hilbert", "--num", "x^2,y^2", "--den", "x^4,y^4"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        [
            "command",
            "failures",
            "inputs",
            "result",
            "runtime_ms",
            "version"
        ]
    );
    assert_eq!(
        v["result"]["series"]["text"],
        "2t^2 + 4t^3 + 3t^4 + 2t^5 + t^6"
    );
    assert_eq!(v["result"]["almost_centered"], false);
    assert_eq!(v["runtime_ms"], 0);
}

#[test]
fn lgv_with_oracle() {
    let (v, code) = json(&["lgv", "--a", "1,2", "--b", "0,1", "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["determinant"], 1);
    assert_eq!(v["result"]["count"], 1);
    assert_eq!(v["result"]["positivity"], "Positive");
}

#[test]
fn every_reproduction_passes() {
    for t in [
        "example-1var",
        "example-lex",
        "example-3var",
        "remark-tensor",
        "section4-csm",
    ] {
        let (v, code) = json(&["reproduce", t]);
        assert_eq!(code, 0, "{t}: {v}");
        assert!(v["failures"].as_array().unwrap().is_empty());
        assert!(v["result"]["claims"]
            .as_array()
            .unwrap()
            .iter()
            .all(|c| c["pass"] == true));
    }
}

#[test]
fn json_is_byte_identical_across_runs() {
    let args = [
        "--format",
        "json",
        "--deterministic",
        "check",
        "slp",
        "--num",
        "x^2",
        "--den",
        "x^4,y^4",
        "--random-forms",
        "3",
        "--seed",
        "11",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn format_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_lefschetz"))
        .args(["hilbert", "--den", "x^3"])
        .env("LEFSCHETZ_FORMAT", "json")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["length"], 3);
    let text = run(&["hilbert", "--den", "x^3"]);
    assert!(String::from_utf8(text.stdout)
        .unwrap()
        .starts_with("command: hilbert"));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(
        run(&["check", "maybe", "--den", "x"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["hilbert"]).status.code(), Some(2));
    let bad = run(&["hilbert", "--den", "x^^2"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("column 3"));
    assert_eq!(run(&["hilbert", "--den", "x^-1"]).status.code(), Some(2));
    assert_eq!(
        run(&["hilbert", "--num", "z", "--den", "x^2,y^2", "--nvars", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn small_sweeps() {
    let (v, code) = json(&[
        "sweep", "main-thm", "--max-a", "4", "--max-b", "4", "--jobs", "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["violations"], 0);
    assert_eq!(
        v["result"]["instances"],
        6 + 10 + 15 + 10 + 20 + 35 + 15 + 35 + 70
    );
    let (v, code) = json(&["sweep", "lgv-oracle", "--max-value", "4", "--max-len", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["violations"], 0);
    let (v, code) = json(&["sweep", "type2", "--max", "3", "--jobs", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["instances"], 27);
}

#[test]
fn pipeline_certificate() {
    let (v, code) = json(&[
        "pipeline", "--num", "x^3,y^4", "-a", "5", "-b", "5", "-i", "4", "-d", "2",
    ]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["result"]["certificate"]["certified"], true);
    assert_eq!(v["result"]["maximal_rank"], true);
}

#[test]
fn csm_with_criterion() {
    let (v, code) = json(&[
        "csm",
        "--ideal",
        "x^3,y^3,z^4,xz,yz",
        "--var",
        "x",
        "--criterion",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["f_values"], serde_json::json!([3, 1]));
    assert_eq!(v["result"]["criterion"]["holds"], true);
    assert_eq!(v["result"]["criterion"]["algebra_slp"], true);
}
