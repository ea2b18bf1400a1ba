use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn pftopo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pftopo"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(pftopo(&["bogus"]).status.code(), Some(2));
    assert_eq!(pftopo(&["generate"]).status.code(), Some(2));
    assert_eq!(pftopo(&["check", "/nonexistent/family.json"]).status.code(), Some(2));
}

#[test]
fn generate_prints_size_and_rank() {
    let out = pftopo(&["generate", &fixture("rank2_incomparable.json"), "--subbase", "K1,K2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("|T| = 10, rank = 2"), "{text}");
    assert!(text.lines().any(|l| l.trim_start().starts_with("I = ")), "{text}");
}

#[test]
fn generate_json_lists_i_then_o() {
    let out = pftopo(&["--json", "generate", &fixture("rank2_incomparable.json"), "--subbase", "K1,K2"]);
    let v = json(&out);
    assert_eq!(v["command"], "generate");
    assert_eq!(v["size"], 10);
    assert_eq!(v["topology"][0]["name"], "I");
    assert_eq!(v["topology"][1]["name"], "O");
    assert_eq!(v["exceeds_bound"], false);
}

#[test]
fn strict_sums_reject_and_relaxed_sums_warn() {
    let out = pftopo(&["--json", "rank", &fixture("rank3_nested.json")]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["error"]["kind"], "ValidationError");
    assert!(v["error"]["message"].as_str().unwrap().contains("\"K2\""));

    let out = pftopo(&["rank", &fixture("rank3_nested.json"), "--relaxed-sums"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("warning: K2 at a: grade sum 1.10 > 1"));

    let out = pftopo(&["--json", "rank", &fixture("rank3_nested.json"), "--relaxed-sums"]);
    assert_eq!(json(&out)["warnings"][0], "K2 at a: grade sum 1.10 > 1");
}

#[test]
fn rank_expectation_sets_exit_code() {
    let file = fixture("rank3_balanced.json");
    assert_eq!(pftopo(&["rank", &file]).status.code(), Some(0));
    assert_eq!(pftopo(&["rank", &file, "--expect-rank", "2"]).status.code(), Some(0));
    assert_eq!(pftopo(&["rank", &file, "--expect-rank", "3"]).status.code(), Some(1));
}

#[test]
fn classify_groups_by_rho() {
    let out = pftopo(&["--json", "classify", &fixture("balanced_pairs.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["rank"], 2);
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes[0]["members"], serde_json::json!(["K3", "K4"]));
    assert_eq!(classes[1]["members"], serde_json::json!(["K1", "K2"]));
}

#[test]
fn check_accepts_a_generated_topology() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let path = path.to_str().unwrap();
    let out = pftopo(&["generate", &fixture("rank3_balanced.json"), "-o", path]);
    assert_eq!(out.status.code(), Some(0));
    let out = pftopo(&["check", path]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("axioms: topology"));
}

#[test]
fn check_reports_union_escape_first() {
    let out = pftopo(&["check", &fixture("balanced_pairs_closed_claim.json")]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let first = text.lines().find(|l| l.contains(" is not a member")).unwrap();
    assert!(first.trim_start().starts_with("O | K1 = "), "{first}");
}

#[test]
fn eval_errors_carry_kinds() {
    let file = fixture("union_pair.json");
    let out = pftopo(&["--json", "eval", &file, "--expr", "K1 & | K2"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["error"]["kind"], "SyntaxError");
    assert!(v["error"]["message"].as_str().unwrap().contains("byte 5"));

    let out = pftopo(&["--json", "eval", &file, "--expr", "K1 | K9"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["error"]["kind"], "UnknownName");
    assert!(v["error"]["message"].as_str().unwrap().contains("K9"));
}

#[test]
fn eval_text_shows_expression_and_value() {
    let out = pftopo(&["eval", &fixture("union_pair.json"), "--expr", "~K1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("~K1 = {(a, "), "{}", stdout(&out));
}

#[test]
fn single_law_holds() {
    let out = pftopo(&["laws", "--law", "L01"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("L01 Holds (1225 instances)"));
}

#[test]
fn failing_law_exits_1_with_witness() {
    let out = pftopo(&["--json", "laws", "--law", "L14"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["all_hold"], false);
    let detail = &v["verdicts"][0]["outcome"]["detail"];
    assert_eq!(detail["clause"], "a ∥ b ⇒ a ⊆ I");
    assert_eq!(detail["sets"].as_array().unwrap().len(), 2);
}

#[test]
fn reversed_mode_changes_verdicts() {
    let out = pftopo(&["laws", "--law", "L07", "--mode", "reversed"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("L07 Counterexample"));
    assert_eq!(pftopo(&["laws", "--law", "L07"]).status.code(), Some(0));
}

#[test]
fn custom_domains() {
    let out = pftopo(&["laws", "--law", "L01", "--step", "0.10"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("(81796 instances)"));

    let out = pftopo(&["laws", "--law", "L03", "--universe-size", "2", "--samples", "500", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("500"));

    let out = pftopo(&["--json", "laws", "--law", "L06", "--step", "0.05", "--universe-size", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "DomainTooLarge");

    assert_eq!(pftopo(&["laws", "--law", "L99"]).status.code(), Some(2));
    assert_eq!(pftopo(&["laws", "--step", "0.3"]).status.code(), Some(2));
}
