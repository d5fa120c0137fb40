use std::path::PathBuf;
use std::process::{Command, Output};

use mzero::report::Report;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mzero"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn charset_prints_the_chain_and_status() {
    let out = run(&["charset", data("symmetric3.poly").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("characteristic set (3 elements):"));
    assert!(text.contains("x^6 - 4*x^4 + 4*x^3 - x^2"));
    assert!(text.contains("2*x^2*y + x^4 - x^2"));
    assert!(text.contains("2*x^2*z + x^4 - x^2"));
    assert!(text.contains("status: consistent"));
}

#[test]
fn decompose_json_round_trips_the_documented_schema() {
    let out = run(&[
        "decompose",
        data("symmetric3.poly").to_str().unwrap(),
        "--split-components",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let rep: Report = serde_json::from_str(&stdout_of(&out)).expect("schema must parse back");
    assert_eq!(rep.vars, vec!["x", "y", "z"]);
    assert_eq!(rep.bound, 8);
    assert!(rep.strategy.split_components);
    assert_eq!(rep.components.len(), 3);
    assert!(rep.components.iter().all(|c| c.kind == "triangular"));
    let zeros: usize = rep.components.iter().map(|c| c.rational_zeros.len()).sum();
    assert_eq!(zeros, 3);
}

#[test]
fn verify_reports_full_conservation() {
    let out = run(&[
        "verify",
        data("symmetric3.poly").to_str().unwrap(),
        "--split-components",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("(1, 0, 0) multiplicity 2: certified"));
    assert!(text.contains("(0, 1, 0) multiplicity 2: certified"));
    assert!(text.contains("(0, 0, 1) multiplicity 2: certified"));
    assert!(text.contains("accounted zeros with multiplicity: 6 rational + 2 by degree = 8"));
    assert!(text.contains("conservation: complete"));
}

#[test]
fn base_mode_leaves_the_degenerate_branch_unresolved() {
    let out = run(&["decompose", data("cubic-links.poly").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("components: 1"));
    assert!(text.contains("unresolved"));
}

#[test]
fn multiplicity_counts_the_fat_origin() {
    let out = run(&[
        "multiplicity",
        data("cubic-links.poly").to_str().unwrap(),
        "--point",
        "0,0,0",
    ]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("multiplicity: 11"));
}

#[test]
fn exit_codes_separate_input_errors_from_algorithmic_ones() {
    let bad = run(&["decompose", data("broken.poly").to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    let err = String::from_utf8(bad.stderr).unwrap();
    assert!(err.contains("parse error"));
    assert!(err.contains("explicit `*`"));

    let missing = run(&["charset", data("no-such-file.poly").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(1));

    let not_a_zero = run(&[
        "multiplicity",
        data("cubic-links.poly").to_str().unwrap(),
        "--point",
        "1,2,3",
    ]);
    assert_eq!(not_a_zero.status.code(), Some(2));
    let err = String::from_utf8(not_a_zero.stderr).unwrap();
    assert!(err.contains("not a zero"));
}

#[test]
fn strategy_flags_change_the_outcome() {
    let with_retry = run(&["decompose", data("vanishing-lead.poly").to_str().unwrap()]);
    assert!(with_retry.status.success());
    let text = stdout_of(&with_retry);
    assert!(text.contains("components: 2"));
    assert!(!text.contains("unresolved"));

    let without = run(&[
        "decompose",
        data("vanishing-lead.poly").to_str().unwrap(),
        "--no-prop3",
    ]);
    assert!(without.status.success());
    assert!(stdout_of(&without).contains("unresolved"));

    let factored = run(&[
        "decompose",
        data("cubic-links.poly").to_str().unwrap(),
        "--factor-initials",
        "--format",
        "json",
    ]);
    assert!(factored.status.success());
    let rep: Report = serde_json::from_str(&stdout_of(&factored)).unwrap();
    assert_eq!(rep.components.len(), 4);
    assert_eq!(
        rep.components.iter().filter(|c| c.kind == "unresolved").count(),
        1
    );
}

#[test]
fn fixed_bound_and_updates_are_reported() {
    let out = run(&[
        "decompose",
        data("symmetric3.poly").to_str().unwrap(),
        "--split-components",
        "--update-bound",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("degree bound: 8"));
    assert!(text.contains("final bound after updates: 1"));

    let fixed = run(&[
        "decompose",
        data("symmetric3.poly").to_str().unwrap(),
        "--bound",
        "9",
        "--format",
        "json",
    ]);
    assert!(fixed.status.success());
    let rep: Report = serde_json::from_str(&stdout_of(&fixed)).unwrap();
    assert_eq!(rep.bound, 9);

    let junk = run(&[
        "decompose",
        data("symmetric3.poly").to_str().unwrap(),
        "--bound",
        "zero",
    ]);
    assert_eq!(junk.status.code(), Some(1));
}
