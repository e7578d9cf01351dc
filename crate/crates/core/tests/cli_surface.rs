use std::process::Command;

use equicorr::cli::{cmd_verify_table, run, EngineArgs, KnownTable, VerifyArgs};

fn run_args(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("equicorr").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
}

fn verify_args(range: &str) -> VerifyArgs {
    VerifyArgs {
        range: Some(range.to_string()),
        engine: EngineArgs { threads: None, ceiling: 30, force: false },
        json: false,
        csv: None,
    }
}

#[test]
fn verify_table_small_range() {
    let (code, out) = run_args(&["verify-table", "1..16"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("16 lengths, 0 mismatched"));
    let (code, out) = run_args(&["verify-table", "17..21", "--json"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    let computed: Vec<&str> = doc["rows"].as_array().unwrap().iter().map(|r| r["computed"].as_str().unwrap()).collect();
    assert_eq!(computed, ["1 [2]", "42 [2]", "", "44 [2]", "67 [2]"]);
}

#[test]
fn tampered_table_reports_mismatch() {
    let table = KnownTable::published().with_row(12, "7 [2]");
    let mut out = Vec::new();
    let code = cmd_verify_table(&verify_args("10..13"), &table, &mut out).unwrap();
    assert_eq!(code, 1);
    assert!(String::from_utf8(out).unwrap().contains("MISMATCH"));
}

#[test]
fn json_documents_do_not_depend_on_threads() {
    let (_, one) = run_args(&["search", "16", "--json", "--members", "--threads", "1"]);
    let (_, four) = run_args(&["search", "16", "--json", "--members", "--threads", "4"]);
    assert_eq!(one, four);
    let doc: serde_json::Value = serde_json::from_str(&one).unwrap();
    assert_eq!(doc["schema"], "equicorr.search/1");
    assert_eq!(doc["distribution"], "12 [2]");
}

#[test]
fn csv_export() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.csv");
    let p = path.to_str().unwrap();
    let (code, _) = run_args(&["verify-table", "8..12", "--csv", p]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, "length,volume,count\n9,2,1\n12,2,8\n");
}

#[test]
fn search_resume_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let (code, out) = run_args(&["search", "18", "--checkpoint-dir", d, "--stop-after", "20", "--verify"]);
    assert_eq!(code, 3, "{out}");
    assert!(out.contains("incomplete"));
    let (code, out) = run_args(&["resume", "--checkpoint-dir", d, "--verify"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("18: 42 [2]"));
}

#[test]
fn classify_reports() {
    let (code, out) = run_args(&["classify", "++"]);
    assert_eq!(code, 0);
    assert!(out.contains("N = 1") && out.contains("unequivocal"));
    let (_, out) = run_args(&["classify", "+-"]);
    assert!(out.contains("N = 1"));
    let (_, out) = run_args(&["search", "9", "--members"]);
    let members: Vec<&str> = out.lines().nth(1).unwrap().split_whitespace().skip(1).collect();
    let (_, report) = run_args(&["classify", members[0]]);
    assert!(report.contains("equivocal") && !report.contains("unequivocal"));
    assert!(report.contains(members[1]));
    let (code, out) = run_args(&["classify", "0"]);
    assert_eq!(code, 0);
    assert!(out.contains("only to itself"));
}

#[test]
fn compose_verdicts() {
    let (_, out) = run_args(&["search", "9", "--members"]);
    let m: Vec<String> = out.lines().nth(1).unwrap().split_whitespace().skip(1).map(String::from).collect();
    let (code, out) = run_args(&["compose", "++", &m[0], "++", &m[1]]);
    assert_eq!(code, 0);
    assert!(out.trim_end().ends_with("\nnontrivial"));
    let (_, out) = run_args(&["compose", "+-", &m[0], "+-", &m[0]]);
    assert!(out.trim_end().ends_with("\ntrivial"));
    let (code, _) = run_args(&["compose", "++", &m[0], "+++", &m[1]]);
    assert_eq!(code, 2);
}

#[test]
fn refusals() {
    assert_eq!(run_args(&["verify-table", "25..31"]).0, 3);
    assert_eq!(run_args(&["verify-table", "40..50", "--force"]).0, 2);
    assert_eq!(run_args(&["search", "nine"]).0, 2);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_equicorr");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["search", "12", "--verify"]), Some(0));
    assert_eq!(status(&["search", "40"]), Some(3));
    assert_eq!(status(&["bogus"]), Some(2));
}
