//! Browser bindings for the demo page in `www/`.
//!
//! Every exported function returns a JSON string; the page does the drawing.
//! The plain `*_json` functions hold the logic so they can be tested natively.

use catalan_cf::cli::{parse_as, Kind};
use catalan_cf::contfrac::{eval_cf, LevelWeights};
use catalan_cf::paths::tree_to_path;
use catalan_cf::perms::{labeled_vertices, tree_to_perm, PermWord};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest order the page may request; keeps the multivariate expansion
/// responsive in the browser.
pub const MAX_ORDER: u32 = 14;

pub fn series_json(weights: &str, order: u32) -> Result<String, String> {
    if order > MAX_ORDER {
        return Err(format!("order is capped at {MAX_ORDER} in the demo"));
    }
    let weights: LevelWeights = weights.parse().map_err(|e| format!("{e}"))?;
    let s = eval_cf(&weights, (order as usize).max(1), order).map_err(|e| e.to_string())?;
    let rows: Vec<Value> = (0..=order)
        .map(|n| {
            let terms: Vec<Value> = s
                .terms()
                .filter(|(m, _)| m.z_deg() == n)
                .map(|(m, c)| json!({ "q": m.q_deg(), "v": m.v_degs(), "coeff": c.to_string() }))
                .collect();
            json!({ "n": n, "terms": terms })
        })
        .collect();
    Ok(json!({ "weights": weights.to_string(), "text": s.to_string(), "rows": rows }).to_string())
}

pub fn tree_view_json(kind: &str, value: &str) -> Result<String, String> {
    let kind = match kind {
        "tree" => Kind::Tree,
        "path" => Kind::Path,
        "perm" => Kind::Perm,
        other => return Err(format!("unknown encoding {other:?}")),
    };
    let tree = parse_as(kind, value).map_err(|e| e.to_string())?;
    let path = tree_to_path(&tree);
    let vertices: Vec<Value> = labeled_vertices(&tree)
        .into_iter()
        .map(|v| json!({ "label": v.label, "parent": v.parent, "level": v.level }))
        .collect();
    Ok(json!({
        "tree": tree.encode(),
        "path": path.to_string(),
        "perm": tree_to_perm(&tree).as_slice(),
        "profile": tree.level_profile().counts(),
        "level_sum": tree.level_sum(),
        "area": path.area(),
        "vertices": vertices,
    })
    .to_string())
}

pub fn count_json(perm: &str, k: u32) -> Result<String, String> {
    let p: PermWord = perm.parse().map_err(|e| format!("{e}"))?;
    let count = p.count_increasing(k).map_err(|e| e.to_string())?;
    Ok(json!({
        "perm": p.as_slice(),
        "k": k,
        "count": count.to_string(),
        "witness": p.has_132().map(|(i, j, l)| [i, j, l]),
    })
    .to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

/// Continued-fraction expansion grouped by power of z.
#[wasm_bindgen]
pub fn series(weights: &str, order: u32) -> Result<String, JsValue> {
    js(series_json(weights, order))
}

/// A tree given as `tree`, `path` or `perm`, with all three encodings and
/// its preorder labels.
#[wasm_bindgen]
pub fn tree_view(kind: &str, value: &str) -> Result<String, JsValue> {
    js(tree_view_json(kind, value))
}

#[wasm_bindgen]
pub fn count_patterns(perm: &str, k: u32) -> Result<String, JsValue> {
    js(count_json(perm, k))
}
