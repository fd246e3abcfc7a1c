//! End-to-end tests of the command-line interface: exit codes, output
//! schemas, determinism, and the report round trip.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_genusfield"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

const C3_SPEC: &str = r#"{"p":7,"n":1,"l":3,"generators":[{"gamma":"6","D":"T^3+3*T^2+2*T"}]}"#;

#[test]
fn compute_json_and_text() {
    let out = run(&["compute", "--inline", C3_SPEC, "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["case"], "C3");
    assert_eq!(v["genus_degree"], 3);
    assert_eq!(v["extended_degree"], 9);

    let out = run(&["compute", "--inline", C3_SPEC, "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("case: C3"));
    assert!(text.contains("K_ge  = k( ³√(T(T+2)²), ³√((T+1)(T+2)²) )"));
}

#[test]
fn invalid_specs_exit_2() {
    // dependent generators, witness printed on stderr
    let dep = r#"{"p":7,"n":1,"l":3,"generators":[{"gamma":"6","D":"T"},{"gamma":"1","D":"T"}]}"#;
    let out = run(&["compute", "--inline", dep]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("dependent"), "stderr: {err}");
    assert!(err.contains("[1, 2]"), "stderr: {err}");

    // --reduce re-enters with a computed basis
    let out = run(&["compute", "--inline", dep, "--reduce", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["spec"]["generators"].as_array().unwrap().len(), 1);

    // wild prime
    let wild = r#"{"p":7,"n":1,"l":7,"generators":[{"gamma":"1","D":"T"}]}"#;
    assert_eq!(run(&["compute", "--inline", wild]).status.code(), Some(2));

    // syntax error in a polynomial
    let bad = r#"{"p":7,"n":1,"l":3,"generators":[{"gamma":"1","D":"T^^2"}]}"#;
    assert_eq!(run(&["compute", "--inline", bad]).status.code(), Some(2));

    // non-Kummer prime failing the order obstruction
    let nk = r#"{"p":2,"n":1,"l":3,"primes":["T"],"C":[[1]],"twisted":false}"#;
    assert_eq!(run(&["compute", "--inline", nk]).status.code(), Some(2));
}

#[test]
fn nonkummer_compute() {
    let nk = r#"{"p":2,"n":1,"l":3,"primes":["T^2+T+1","T^4+T+1"],"C":[[1],[1]],"twisted":false}"#;
    let out = run(&["compute", "--inline", nk, "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["case"], "NK_cyclotomic");
    assert_eq!(v["genus_degree"], 3);
    assert_eq!(v["K_ge"]["cyclotomic"].as_array().unwrap().len(), 2);
    assert_eq!(v["e_inf"], 1);
}

#[test]
fn verify_passes_and_skips() {
    let out = run(&["verify", "--inline", C3_SPEC]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut saw_maximality = false;
    for line in text.trim().lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["passed"], true, "line {line}");
        if v["name"] == "maximality" {
            saw_maximality = true;
        }
    }
    assert!(saw_maximality);

    // r = 5 (D = T(T+1)(T+2)(T+3)(T+4)): maximality is skipped with a
    // marker, everything else runs
    let wide =
        r#"{"p":7,"n":1,"l":3,"generators":[{"gamma":"1","D":"T^5+3*T^4+T^2+3*T"}]}"#;
    let out = run(&["verify", "--inline", wide]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let skipped: Vec<&str> = text
        .trim()
        .lines()
        .filter(|l| l.contains("skipped"))
        .collect();
    assert_eq!(skipped.len(), 1);
    assert!(skipped[0].contains("maximality"));
}

#[test]
fn verify_expect_roundtrip_and_tamper() {
    let dir = std::env::temp_dir().join(format!("genusfield-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let report_path = dir.join("c3-report.json");

    let out = run(&["compute", "--inline", C3_SPEC, "--format", "json"]);
    std::fs::write(&report_path, stdout(&out)).unwrap();

    // the emitted report verifies against itself
    let out = run(&[
        "verify",
        "--inline",
        C3_SPEC,
        "--expect",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("expected_report_match"));

    // tampered fixture: flip the genus degree
    let tampered = stdout(&run(&["compute", "--inline", C3_SPEC, "--format", "json"]))
        .replace("\"genus_degree\": 3", "\"genus_degree\": 9");
    let tampered_path = dir.join("c3-tampered.json");
    std::fs::write(&tampered_path, tampered).unwrap();
    let out = run(&[
        "verify",
        "--inline",
        C3_SPEC,
        "--expect",
        tampered_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn input_file_matches_inline() {
    let dir = std::env::temp_dir().join(format!("genusfield-cli-in-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let spec_path = dir.join("spec.json");
    std::fs::write(&spec_path, C3_SPEC).unwrap();
    let from_file = stdout(&run(&[
        "compute",
        "--input",
        spec_path.to_str().unwrap(),
        "--format",
        "json",
    ]));
    let from_inline = stdout(&run(&["compute", "--inline", C3_SPEC, "--format", "json"]));
    assert_eq!(from_file, from_inline);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn sweep_small_and_deterministic() {
    let args = [
        "sweep", "--q", "5", "--l", "2", "--max-deg", "2", "--max-m", "2",
    ];
    let out1 = run(&args);
    assert_eq!(out1.status.code(), Some(0));
    let text = stdout(&out1);
    let lines: Vec<&str> = text.trim().lines().collect();
    let summary: serde_json::Value = serde_json::from_str(lines.last().unwrap()).unwrap();
    assert_eq!(summary["failed"], 0);
    let total = summary["total"].as_u64().unwrap();
    assert_eq!(total as usize, lines.len() - 1);
    assert!(total > 100);
    // every line verified, cases labelled
    for line in &lines[..lines.len() - 1] {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["verified"], true);
        assert!(v["case"].as_str().unwrap().starts_with('C'));
    }
    // byte-identical rerun
    let out2 = run(&args);
    assert_eq!(stdout(&out2), text);

    // empty bounds: zero cases, exit 0
    let out = run(&[
        "sweep", "--q", "5", "--l", "2", "--max-deg", "0", "--max-m", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let summary: serde_json::Value =
        serde_json::from_str(text.trim().lines().last().unwrap()).unwrap();
    assert_eq!(summary["total"], 0);

    // a (q, l) pair outside the Kummer setting is skipped and reported
    let out = run(&[
        "sweep", "--q", "5", "--l", "3", "--max-deg", "1", "--max-m", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let summary: serde_json::Value =
        serde_json::from_str(text.trim().lines().last().unwrap()).unwrap();
    assert_eq!(summary["skipped_pairs"][0], "q=5,l=3");
}

#[test]
fn sweep_q7_m1_covers_reachable_cases() {
    let out = run(&[
        "sweep", "--q", "7", "--l", "3", "--max-deg", "3", "--max-m", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let summary: serde_json::Value =
        serde_json::from_str(text.trim().lines().last().unwrap()).unwrap();
    assert_eq!(summary["failed"], 0);
    let by_case = summary["by_case"].as_object().unwrap();
    // m = 1 with degrees up to 3 reaches C1-C7 except C5 needs l | n and
    // s < r with K != E: (3, T(T+1)(T+2)) has degree 3, so C5 appears too
    for case in ["C1", "C2", "C3", "C4", "C5", "C6", "C7"] {
        if case == "C6" {
            // C6 needs m >= 2: a single generator with l not dividing n is
            // fully ramified at infinity, never inert
            assert!(!by_case.contains_key("C6"));
            continue;
        }
        assert!(by_case.contains_key(case), "missing {case}: {by_case:?}");
    }
}
