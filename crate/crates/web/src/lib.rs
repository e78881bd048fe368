//! WebAssembly bindings for the static demo page in `www/`.
//! Every export returns a JSON string; errors become JS exceptions.

use nilrad::algebra::{format_table, series_signature};
use nilrad::families::{build, classify_extension, ExtensionSpec, FamilyLabel, FieldTag};
use nilrad::invariants::{verify_theorem, Sampling};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn err(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

fn field(s: &str) -> Result<FieldTag, JsError> {
    s.parse().map_err(err)
}

/// Structure constants and DS/CS/US of a family member.
#[wasm_bindgen]
pub fn describe(label: &str) -> Result<String, JsError> {
    let label = FamilyLabel::parse(label).map_err(err)?;
    let l = build(&label).map_err(err)?;
    let sig = series_signature(&l);
    Ok(json!({
        "label": label.to_string(),
        "dim": l.dim(),
        "table": format_table(&l),
        "ds": sig.ds,
        "cs": sig.cs,
        "us": sig.us,
    })
    .to_string())
}

/// Invariants of a family member with every check of the verifier.
#[wasm_bindgen]
pub fn verify(label: &str, field_tag: &str, seed: u64) -> Result<String, JsError> {
    let label = FamilyLabel::parse(label).map_err(err)?;
    let sampling = Sampling {
        seed,
        ..Sampling::default()
    };
    let report = verify_theorem(&label, field(field_tag)?, sampling).map_err(err)?;
    serde_json::to_string(&report).map_err(err)
}

/// Name of the extension of `n(n,1)` by one derivation in canonical shape.
/// `a` lists `a_3, a_4, ...` separated by commas.
#[wasm_bindgen]
pub fn classify(n: usize, alpha: &str, beta: &str, a: &str, field_tag: &str) -> Result<String, JsError> {
    let a: Vec<&str> = a.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let spec = json!({"n": n, "derivations": [{"alpha": alpha, "beta": beta, "a": a}]});
    let spec = ExtensionSpec::from_json(&spec.to_string()).map_err(err)?;
    let c = classify_extension(&spec, field(field_tag)?).map_err(err)?;
    Ok(json!({"label": c.label.to_string(), "family": c.label.kind().name()}).to_string())
}
