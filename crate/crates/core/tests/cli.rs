use std::process::{Command, Output};

use serde_json::Value;
use strange_duality::cli;
use strange_duality::singularities::Table;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strange-duality"))
        .args(args)
        .output()
        .expect("spawn binary")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn in_process(table: &Table, args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("strange-duality").chain(args.iter().copied());
    let code = cli::run(argv, table, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

const THAT_2_3_7: &str = "\
-2,1,1,0,1,0,0,0,0,0,-2,0
1,-2,0,0,0,0,0,0,0,0,1,0
1,0,-2,1,0,0,0,0,0,0,1,0
0,0,1,-2,0,0,0,0,0,0,0,0
1,0,0,0,-2,1,0,0,0,0,1,0
0,0,0,0,1,-2,1,0,0,0,0,0
0,0,0,0,0,1,-2,1,0,0,0,0
0,0,0,0,0,0,1,-2,1,0,0,0
0,0,0,0,0,0,0,1,-2,1,0,0
0,0,0,0,0,0,0,0,1,-2,0,0
-2,1,1,0,1,0,0,0,0,0,-2,1
0,0,0,0,0,0,0,0,0,0,1,-2
";

#[test]
fn gram_that_csv_golden() {
    let o = bin(&["gram", "that", "2", "3", "7", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), THAT_2_3_7);
}

#[test]
fn gram_divisor_csv_golden() {
    let o = bin(&["gram", "divisor", "2", "2", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-2,1,1,1\n1,-2,0,0\n1,0,-2,0\n1,0,0,-2\n");
}

#[test]
fn gram_kinds_agree_on_table_rows() {
    let (_, that) = in_process(&Table::canonical(), &["gram", "that", "3", "3", "4"]);
    for kind in ["ep", "quiver-k3"] {
        let (code, m) = in_process(&Table::canonical(), &["gram", kind, "3", "3", "4"]);
        assert_eq!(code, 0);
        if kind == "ep" {
            assert_eq!(m, that);
        } else {
            assert_eq!(m.lines().count(), that.lines().count());
        }
    }
    let (_, json) = in_process(&Table::canonical(), &["gram", "that", "2", "2", "2", "--format", "json"]);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 6);
    assert_eq!(v[4][5], 1);
}

#[test]
fn gram_domain_errors_exit_2() {
    let o = bin(&["gram", "that", "1", "2", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
    assert_eq!(bin(&["gram", "that", "2", "3"]).status.code(), Some(2));
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn list_text_and_json() {
    let o = bin(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 15);
    assert!(text.lines().nth(1).unwrap().starts_with("E12"));

    let o = bin(&["list", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 14);
    for key in ["name", "weights", "h", "dolgachev", "gabrielov", "dual"] {
        assert!(rows.iter().all(|r| r.get(key).is_some()), "{key}");
    }
    assert_eq!(rows[3]["name"], "E14");
    assert_eq!(rows[3]["dual"], "Q10");
    assert_eq!(rows[3]["weights"], serde_json::json!([3, 8, 12]));
}

#[test]
fn show_records() {
    let o = bin(&["show", "E12"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("  mu:        12"));
    assert!(s.contains("  h:         42"));
    assert!(s.contains("self-dual"));

    let s = stdout(&bin(&["show", "Q10"]));
    assert!(s.contains("  dual:      E14\n"));
    assert!(s.contains("  delta:     (2,3,9)"));

    let v: Value = serde_json::from_slice(&bin(&["show", "W13", "--json"]).stdout).unwrap();
    assert_eq!(v["record"]["dual"], "S11");
    assert_eq!(v["that_delta"]["det"], v["that_gamma"]["det"].clone());

    let o = bin(&["show", "X99"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("X99"));
}

#[test]
fn verify_filter_by_check() {
    let o = bin(&["verify", "--check", "C9", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 10);
    assert!(results.iter().all(|r| r["check_id"] == "C9" && r["status"] == "pass"));
    assert_eq!(v["summary"]["pass"], 10);
}

#[test]
fn verify_full_report_schema_and_exit_code() {
    let o = bin(&["verify", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["version"].is_string());
    let results = v["results"].as_array().unwrap();
    for r in results {
        for key in ["check_id", "subject", "status", "details", "data"] {
            assert!(r.get(key).is_some(), "{key}");
        }
    }
    let failed: Vec<&Value> = results.iter().filter(|r| r["status"] == "fail").collect();
    assert_eq!(failed.len(), 14);
    for f in failed {
        assert_eq!(f["check_id"], "C7");
        assert!(f["subject"].as_str().unwrap().ends_with(":divisor"));
    }
    let s = &v["summary"];
    assert_eq!(
        s["pass"].as_u64().unwrap() + s["fail"].as_u64().unwrap() + s["skipped"].as_u64().unwrap(),
        results.len() as u64
    );
}

#[test]
fn verify_detects_corrupted_table() {
    let mut table = Table::canonical();
    let e13 = table.records_mut().iter_mut().find(|r| r.name == "E13").unwrap();
    e13.dolgachev = [2, 4, 6];
    let (code, out) = in_process(&table, &["verify", "--check", "C2"]);
    assert_eq!(code, 1);
    assert!(out.lines().any(|l| l.starts_with("C2") && l.contains("E13") && l.contains("fail")));
    let (code, _) = in_process(&Table::canonical(), &["verify", "--check", "C2"]);
    assert_eq!(code, 0);
}

#[test]
fn verify_output_is_deterministic() {
    let a = bin(&["verify", "--json"]);
    let b = bin(&["verify", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let (_, t1) = in_process(&Table::canonical(), &["verify", "--dmax", "42"]);
    let (_, t2) = in_process(&Table::canonical(), &["verify", "--dmax", "42"]);
    assert_eq!(t1, t2);
}
