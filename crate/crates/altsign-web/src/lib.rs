//! WebAssembly bindings for the browser demo in `www/`. Each export returns a
//! JSON string; the plain `*_json` functions behind them are what the host
//! tests exercise.

use altsign::asm::{BoundaryStat, SymmetryClass};
use altsign::closed_forms::closed_form_table;
use altsign::enumerate::refined_table;
use altsign::identities::{run_family, RunOptions, FAMILIES};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Enumeration in the browser is single-threaded, so orders are kept small.
pub const MAX_ORDER: usize = 9;

fn default_stat(class: SymmetryClass) -> BoundaryStat {
    match class {
        SymmetryClass::VS | SymmetryClass::VHP => BoundaryStat::SecondRowFirstOne,
        _ => BoundaryStat::FirstRowOne,
    }
}

/// Enumerated refined table next to the closed form, when one applies.
pub fn refine_json(class: &str, order: usize, stat: &str) -> Result<String, String> {
    if order > MAX_ORDER {
        return Err(format!("order {order} is above the demo limit of {MAX_ORDER}"));
    }
    let class: SymmetryClass = class.parse().map_err(|e: altsign::Error| e.to_string())?;
    let stat =
        if stat.is_empty() { default_stat(class) } else { stat.parse().map_err(|e: altsign::Error| e.to_string())? };
    let brute = refined_table(order, class, stat).map_err(|e| e.to_string())?;
    let formula = closed_form_table(class, order, stat).ok();
    let agree = formula.as_ref().map(|f| f.counts == brute.counts);
    Ok(json!({
        "enumerated": brute.to_json(),
        "total": brute.total().to_string(),
        "closed_form": formula.map(|f| f.to_json()),
        "agree": agree,
    })
    .to_string())
}

/// Runs one identity family up to `max_order`.
pub fn verify_json(identity: &str, max_order: usize, seed: u64) -> Result<String, String> {
    if !FAMILIES.contains(&identity) {
        return Err(format!("unknown identity {identity:?}"));
    }
    let opts = RunOptions { max_order: max_order.min(MAX_ORDER + 2), seed, jobs: 1 };
    let checks = run_family(identity, &opts).map_err(|e| e.to_string())?;
    let v: Vec<Value> = checks.iter().map(|c| c.to_json()).collect();
    Ok(Value::Array(v).to_string())
}

/// Identity family names, for the page's drop-down.
pub fn families_json() -> String {
    json!(FAMILIES).to_string()
}

#[wasm_bindgen]
pub fn refine(class: &str, order: usize, stat: &str) -> Result<String, JsValue> {
    refine_json(class, order, stat).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn verify(identity: &str, max_order: usize, seed: u32) -> Result<String, JsValue> {
    verify_json(identity, max_order, u64::from(seed)).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn families() -> String {
    families_json()
}
