//! WebAssembly bindings for the static demo page in `www/`.
//!
//! The `*_json`/`*_text` functions are plain Rust so they can be tested natively;
//! the exported names wrap them for JavaScript.

use serde_json::json;
use wasm_bindgen::prelude::*;

use commvar::commscheme;
use commvar::kernel::format::rational_string;
use commvar::lattice;
use commvar::perm::Perm;

pub const MAX_DEGREE_N: usize = 12;
pub const MAX_GRID: usize = 5;
pub const MAX_CONFIGS: usize = 500;

pub fn degree_text(n: usize) -> Result<String, String> {
    if n > MAX_DEGREE_N {
        return Err(format!("n must be at most {MAX_DEGREE_N}"));
    }
    commscheme::degree(n).map(|d| d.to_string()).map_err(|e| e.to_string())
}

pub fn k3_table_json() -> Result<String, String> {
    let k = commscheme::kpoly(3).map_err(|e| e.to_string())?;
    let table = commscheme::x1_table(&k).map_err(|e| e.to_string())?;
    let rows: Vec<_> =
        table.iter().map(|(i, j, c)| json!({ "q1": j, "q2": i, "coeff": rational_string(c) })).collect();
    Ok(serde_json::to_string(&rows).expect("serializable"))
}

pub fn configs_json(perm: &str) -> Result<String, String> {
    let v: Perm = perm.parse().map_err(|e: commvar::Error| e.to_string())?;
    if v.n() > MAX_GRID {
        return Err(format!("grids larger than {MAX_GRID} are not drawn"));
    }
    let mut out = Vec::new();
    let mut total = 0usize;
    lattice::for_each_config(&v, |c| {
        total += 1;
        if out.len() < MAX_CONFIGS {
            out.push(c.to_json());
        }
    });
    Ok(serde_json::to_string(&json!({ "perm": v.to_string(), "n": v.n(), "count": total, "configs": out }))
        .expect("serializable"))
}

/// `deg C_n` as a decimal string.
#[wasm_bindgen]
pub fn degree(n: usize) -> Result<String, JsError> {
    degree_text(n).map_err(|e| JsError::new(&e))
}

/// Coefficients of `K_3` at `x = 1` as a JSON array of `{q1, q2, coeff}`.
#[wasm_bindgen]
pub fn k3_table() -> Result<String, JsError> {
    k3_table_json().map_err(|e| JsError::new(&e))
}

/// Configurations with connectivity `perm` (one-line notation) as JSON.
#[wasm_bindgen]
pub fn configs(perm: &str) -> Result<String, JsError> {
    configs_json(perm).map_err(|e| JsError::new(&e))
}
