//! WebAssembly bindings for the static page in `www/`. Every function returns JSON,
//! with an `error` field instead of a panic when the input is rejected.

use malcev_core::engine::{default_scale, run_search, verify_identity_integer, AlgebraStructure, SearchConfig};
use malcev_core::freealg::{parse_terms, OpSet};
use malcev_core::sl2rep::StructureConstants;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Searches above this degree take too long for a page.
pub const MAX_DEMO_DEGREE: usize = 5;

fn error(msg: impl ToString) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

fn opset(name: &str) -> Option<OpSet> {
    match name {
        "binary" => Some(OpSet::Binary),
        "ternary" => Some(OpSet::Ternary),
        "mixed" => Some(OpSet::Mixed),
        _ => None,
    }
}

/// Bilinear and trilinear tables of the 7-dimensional algebra.
#[wasm_bindgen]
pub fn structure_constants(scale: i32) -> String {
    match StructureConstants::build(scale.into()) {
        Ok(sc) => sc.to_json(),
        Err(e) => error(e),
    }
}

/// Identity search in one degree with the default prime, seed and stall.
#[wasm_bindgen]
pub fn search(ops: &str, degree: usize) -> String {
    let Some(ops) = opset(ops) else { return error(format!("unknown operation set {ops:?}")) };
    if degree > MAX_DEMO_DEGREE {
        return error(format!("the demo stops at degree {MAX_DEMO_DEGREE}"));
    }
    match run_search(&SearchConfig::new(degree, ops)) {
        Ok(r) => r.to_json(),
        Err(e) => error(e),
    }
}

/// Exact check of an identity in text form at random integer arguments.
/// `scale` 0 picks the default for the identity's operations.
#[wasm_bindgen]
pub fn verify(text: &str, trials: usize, scale: i32) -> String {
    let list = match parse_terms(text) {
        Ok(l) => l,
        Err(e) => return error(e),
    };
    let scale = if scale == 0 { default_scale(list.opset()) } else { scale.into() };
    let result = AlgebraStructure::new(scale).and_then(|alg| verify_identity_integer(&list, &alg, trials.clamp(1, 1000), 1, 9));
    match result {
        Ok(r) => json!({ "terms": list.terms.len(), "degree": list.degree, "scale": scale, "report": r }).to_string(),
        Err(e) => error(e),
    }
}
