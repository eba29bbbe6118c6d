//! End-to-end checks of the binary: pinned outputs, exit codes, and the
//! stability of the JSON and DOT shapes.

use std::process::{Command, Output};

fn vtwin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vtwin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn identity_check_of_a_far_commutation() {
    let out = vtwin(&["--n", "4", "isid", "s1 s3 s1 s3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "true");
}

#[test]
fn rewrite_of_the_basic_kernel_word() {
    let out = vtwin(&["--n", "4", "rewrite", "s1 r1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "L1.2");
}

#[test]
fn projection_uses_the_leftmost_first_convention() {
    let out = vtwin(&["--n", "3", "pi", "r1 r2"]);
    assert_eq!(stdout(&out).trim(), "[3,1,2]");
    let out = vtwin(&["--n", "3", "--format", "json", "pi", "r1 r2"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["images"], serde_json::json!([3, 1, 2]));
}

#[test]
fn equal_decompose_and_nf() {
    let out = vtwin(&["--n", "3", "equal", "r1 r2 s1", "s2 r1 r2"]);
    assert_eq!(stdout(&out).trim(), "true");

    let out = vtwin(&["--n", "2", "decompose", "s1"]);
    assert_eq!(stdout(&out).trim(), "pure: L1.2\nperm: [2,1]");

    let out = vtwin(&["--n", "4", "nf", "L3.4 L1.2 L1.2^-1"]);
    assert_eq!(stdout(&out).trim(), "L3.4");
}

#[test]
fn verify_all_emits_json_and_succeeds() {
    let out = vtwin(&["--n", "4", "verify", "all"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let reports = v.as_array().unwrap();
    assert!(reports.len() >= 5);
    for rep in reports {
        assert_eq!(rep["n"], 4);
        for claim in rep["claims"].as_array().unwrap() {
            assert_eq!(claim["status"], "pass", "claim {}", claim["id"]);
        }
    }
}

#[test]
fn verify_single_suite_text_format() {
    let out = vtwin(&["--n", "5", "--format", "text", "verify", "graph"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("suite graph_claims n=5"));
    assert!(text.trim_end().ends_with("result: PASS (6/6)"));
}

#[test]
fn dot_output_parses_for_all_supported_strand_counts() {
    for n in 2..=8 {
        let out = vtwin(&["--n", &n.to_string(), "graph", "--format", "dot"]);
        let dot = stdout(&out);
        assert!(dot.starts_with("graph pvt {\n"), "n={n}");
        assert!(dot.ends_with("}\n"));
        for line in dot.lines().skip(1) {
            if line == "}" {
                continue;
            }
            assert!(line.ends_with(';'), "bad DOT line at n={n}: {line}");
            assert!(line.starts_with("  l_"), "bad DOT line at n={n}: {line}");
        }
        let vertex_lines = dot.lines().filter(|l| !l.contains("--")).count() - 2;
        assert_eq!(vertex_lines, n * (n - 1) / 2);
    }
}

#[test]
fn usage_errors_exit_with_two() {
    // missing --n
    let out = vtwin(&["isid", "s1"]);
    assert_eq!(out.status.code(), Some(2));

    // malformed word with position diagnostics
    let out = vtwin(&["--n", "3", "isid", "s1 qq"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 3"));

    // index out of range
    let out = vtwin(&["--n", "3", "isid", "s7"]);
    assert_eq!(out.status.code(), Some(2));

    // a word outside the kernel cannot be rewritten
    let out = vtwin(&["--n", "3", "rewrite", "s1"]);
    assert_eq!(out.status.code(), Some(2));

    // unknown subcommand is a clap usage error
    let out = vtwin(&["--n", "3", "frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn automorphism_enumeration_respects_the_guard() {
    let out = vtwin(&["--n", "7", "auts"]);
    assert_eq!(out.status.code(), Some(2));

    let out = vtwin(&["--n", "7", "auts", "--force", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["count"], 5040);

    let out = vtwin(&["--n", "4", "auts"]);
    let text = stdout(&out);
    assert!(text.starts_with("count: 48\n"));
    assert_eq!(text.lines().count(), 49);
}

#[test]
fn seed_is_embedded_and_changes_nothing_for_fixed_inputs() {
    let a = stdout(&vtwin(&[
        "--n",
        "4",
        "--seed",
        "99",
        "verify",
        "semidirect",
    ]));
    let b = stdout(&vtwin(&[
        "--n",
        "4",
        "--seed",
        "99",
        "verify",
        "semidirect",
    ]));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(a.trim()).unwrap();
    assert_eq!(v[0]["seed"], 99);
}
