use altsign_web::{families_json, refine_json, verify_json, MAX_ORDER};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn refine_plain_agrees_with_closed_form() {
    let v = parse(&refine_json("plain", 5, "").unwrap());
    assert_eq!(v["total"], "429");
    assert_eq!(v["agree"], true);
    assert_eq!(v["enumerated"]["counts"]["1"], "42");
}

#[test]
fn refine_vs_uses_second_row() {
    let v = parse(&refine_json("vs", 5, "").unwrap());
    assert_eq!(v["enumerated"]["counts"]["2"], "2");
}

#[test]
fn refine_rejects_bad_input() {
    assert!(refine_json("nope", 4, "").is_err());
    assert!(refine_json("plain", MAX_ORDER + 1, "").is_err());
    assert!(refine_json("vs", 4, "").is_err());
}

#[test]
fn verify_one_family() {
    let v = parse(&verify_json("vhp", 6, 7).unwrap());
    let checks = v.as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["status"] == "pass"), "{v}");
    assert!(verify_json("nope", 6, 7).is_err());
}

#[test]
fn family_list() {
    let v = parse(&families_json());
    assert!(v.as_array().unwrap().iter().any(|f| f == "vsasm"));
}
