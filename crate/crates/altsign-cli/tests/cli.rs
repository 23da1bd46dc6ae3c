use std::process::{Command, Output};

use altsign::asm::{BoundaryStat, SymmetryClass};
use altsign::enumerate::{refined_table, RefinedTable};
use serde_json::Value;

fn altsign(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altsign")).args(args).env_remove("ALTSIGN_JOBS").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn count_plain_six() {
    let o = altsign(&["count", "--class", "plain", "--n", "6"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "7436");
}

#[test]
fn refine_json_round_trips() {
    let o = altsign(&["refine", "--class", "vs", "--order", "5", "--stat", "second-row", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["counts"]["1"], "1");
    assert_eq!(v["counts"]["2"], "2");
    let t = RefinedTable::from_json(&v).unwrap();
    assert_eq!(t, refined_table(5, SymmetryClass::VS, BoundaryStat::SecondRowFirstOne).unwrap());
}

#[test]
fn refine_csv_schema() {
    let o = altsign(&["refine", "--class", "os", "--order", "4", "--format", "csv"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "class,order,statistic,position,count");
    assert!(lines.contains(&"os,4,first-row,2,1"), "{text}");
}

#[test]
fn formula_matches_refine() {
    let a = altsign(&["formula", "--class", "plain", "--order", "5", "--format", "csv"]);
    let b = altsign(&["refine", "--class", "plain", "--order", "5", "--format", "csv"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn verify_passes_and_is_deterministic() {
    let args = ["verify", "--identity", "all", "--max-order", "7", "--seed", "7", "--format", "json"];
    let a = altsign(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, altsign(&args).stdout);
    let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
    for rec in v.as_array().unwrap() {
        for key in ["identity", "n", "status", "witness", "provenance", "seed"] {
            assert!(rec.get(key).is_some(), "missing {key} in {rec}");
        }
    }
}

#[test]
fn single_family() {
    let o = altsign(&["verify", "--identity", "vhp", "--max-order", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("vhp") && text.contains("n=2"), "{text}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(altsign(&["count", "--class", "nope", "--n", "3"]).status.code(), Some(2));
    assert_eq!(altsign(&["verify", "--identity", "nope"]).status.code(), Some(2));
    assert_eq!(altsign(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(altsign(&["count", "--class", "vs", "--n", "4"]).status.code(), Some(2));
}

#[test]
fn partition_and_tilings() {
    let o = altsign(&["partition", "--model", "dwbc", "--n", "2", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("z-dwbc"));
    let o = altsign(&["partition", "--model", "uturn", "--n", "2", "--symbolic-x"]);
    assert_eq!(o.status.code(), Some(0));
    let o = altsign(&["tilings", "--n", "1", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["q"][0]["lgv"], "4");
    assert_eq!(v["q"][1]["paths"], "1");
}

#[test]
fn report_documents_deviation() {
    let o = altsign(&["report", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["formula"], "A_HT(2n, i)");
    assert_eq!(v[0]["printed_confirmed"], false);
}

#[test]
fn jobs_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_altsign"))
        .args(["count", "--class", "hts", "--order", "6"])
        .env("ALTSIGN_JOBS", "2")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), stdout(&altsign(&["count", "--class", "hts", "--order", "6"])).trim());
}
