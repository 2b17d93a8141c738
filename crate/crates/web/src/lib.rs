//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes a JSON (or compact text) string and returns a JSON
//! string; failures come back as `{"error": "..."}` so the page never has to
//! catch exceptions.

use omcode::codes::{matroid_code, Code, CodeMode};
use omcode::ideals::canonical_form;
use omcode::json::{CodeJson, Object, PseudomonomialIdealJson};
use omcode::topology::{local_obstructions, Certificate, LinkStatus, DEFAULT_COLLAPSE_BUDGET};
use serde::Deserialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

/// Most lines the demo accepts; codes of larger covers get slow in the browser.
pub const MAX_LINES: usize = 8;

fn respond(result: Result<Value, String>) -> String {
    let value = result.unwrap_or_else(|e| json!({ "error": e }));
    serde_json::to_string(&value).expect("JSON values serialize")
}

#[derive(Deserialize)]
struct LinesRequest {
    /// Canvas size; the ambient region is the open box (0, width) × (0, height).
    width: i64,
    height: i64,
    /// Each line as [a, b, c]: neuron i fires on the open half-plane a·x + b·y + c > 0.
    lines: Vec<[i64; 3]>,
}

/// The combinatorial code of half-planes drawn in a box, with its canonical form.
///
/// Input: `{"width": 600, "height": 400, "lines": [[a, b, c], ...]}`.
#[wasm_bindgen]
pub fn line_code(request: &str) -> String {
    respond(line_code_value(request))
}

fn line_code_value(request: &str) -> Result<Value, String> {
    let req: LinesRequest = serde_json::from_str(request).map_err(|e| e.to_string())?;
    if req.lines.len() > MAX_LINES {
        return Err(format!("at most {MAX_LINES} lines are supported"));
    }
    if req.width <= 0 || req.height <= 0 {
        return Err("the canvas must have positive size".into());
    }
    let ineq = |a: i64, b: i64, c: i64| json!([a.to_string(), b.to_string(), c.to_string()]);
    let cover = json!({
        "d": 2,
        "regions": req.lines.iter().map(|&[a, b, c]| json!([ineq(a, b, c)])).collect::<Vec<_>>(),
        "ambient": [ineq(1, 0, 0), ineq(-1, 0, req.width), ineq(0, 1, 0), ineq(0, -1, req.height)],
    });
    let code = match Object::from_value(cover).map_err(|e| e.to_string())? {
        Object::Cover(p) => p.code(1).map_err(|e| e.to_string())?,
        _ => unreachable!("a value with regions parses as a cover"),
    };
    let cf = canonical_form(&code).map_err(|e| e.to_string())?;
    Ok(json!({
        "code": CodeJson::from_code(&code),
        "canonical_form": PseudomonomialIdealJson::from_ideal(&cf),
    }))
}

/// The tope graph of a central arrangement or of a covector list.
///
/// Input: `{"d": 2, "forms": [["1","0"], ...]}` or `{"n": 3, "covectors": [...]}`.
#[wasm_bindgen]
pub fn tope_graph(request: &str) -> String {
    respond(tope_graph_value(request))
}

fn tope_graph_value(request: &str) -> Result<Value, String> {
    let matroid = match Object::parse(request).map_err(|e| e.to_string())? {
        Object::Arrangement(a) => a.oriented_matroid(1).map_err(|e| e.to_string())?,
        Object::Matroid(m) => m,
        other => return Err(format!("expected an arrangement or covectors, got a {}", other.kind())),
    };
    let graph = matroid.tope_graph();
    Ok(json!({
        "nodes": graph.nodes.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "edges": graph.edges.iter().map(|(a, b, s)| json!([a, b, s.to_vec()])).collect::<Vec<_>>(),
        "flags": matroid.structure_flags(),
        "w_plus": CodeJson::from_code(&matroid_code(&matroid, CodeMode::WPlus)),
    }))
}

/// Local obstructions of a code given in compact notation, e.g. `"∅ 12 13 23"`.
#[wasm_bindgen]
pub fn obstructions(n: usize, code: &str) -> String {
    respond(obstructions_value(n, code))
}

fn obstructions_value(n: usize, code: &str) -> Result<Value, String> {
    let code = Code::parse_compact(n, code).map_err(|e| e.to_string())?;
    let report = local_obstructions(&code, DEFAULT_COLLAPSE_BUDGET).map_err(|e| e.to_string())?;
    let entries: Vec<Value> = report
        .entries
        .iter()
        .map(|e| {
            let detail = match &e.certificate {
                Certificate::Homology(h) => format!("reduced homology {:?}", h.ranks),
                Certificate::Cone(v) => format!("cone with apex {v}"),
                Certificate::Collapse(seq) => format!("collapses in {} steps", seq.len()),
                Certificate::Inconclusive { .. } => "acyclic, no collapse found".to_string(),
            };
            let status = match e.status {
                LinkStatus::Obstruction => "obstruction",
                LinkStatus::Contractible => "contractible",
                LinkStatus::Unknown => "unknown",
            };
            json!({ "sigma": e.sigma.to_vec(), "status": status, "detail": detail })
        })
        .collect();
    Ok(json!({
        "code": CodeJson::from_code(&code),
        "obstructions": report.obstructions().count(),
        "entries": entries,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn two_crossing_half_planes() {
        // x > 300 and y > 200 in a 600 × 400 box: all four combinations occur.
        let out = parse(line_code(
            r#"{"width":600,"height":400,"lines":[[1,0,-300],[0,1,-200]]}"#,
        ));
        assert_eq!(out["code"]["codewords"], json!([[], [1], [2], [1, 2]]));
        assert_eq!(out["canonical_form"]["pos"], json!([]));
    }

    #[test]
    fn nested_half_planes_give_a_relation() {
        // x > 400 implies x > 200, so x1(1 − x2) vanishes on the code.
        let out = parse(line_code(
            r#"{"width":600,"height":400,"lines":[[1,0,-400],[1,0,-200]]}"#,
        ));
        assert_eq!(out["code"]["codewords"], json!([[], [2], [1, 2]]));
        assert_eq!(out["canonical_form"], json!({"n": 2, "pos": [[1]], "neg": [[2]]}));
    }

    #[test]
    fn too_many_lines_is_an_error() {
        let lines = vec![[1, 0, -1]; MAX_LINES + 1];
        let req = json!({"width": 10, "height": 10, "lines": lines}).to_string();
        assert!(parse(line_code(&req))["error"].is_string());
    }

    #[test]
    fn tope_graph_of_three_lines_is_a_hexagon() {
        let out = parse(tope_graph(r#"{"d":2,"forms":[["1","0"],["0","1"],["1","1"]]}"#));
        assert_eq!(out["nodes"].as_array().unwrap().len(), 6);
        assert_eq!(out["edges"].as_array().unwrap().len(), 6);
        assert_eq!(out["flags"]["rank"], json!(2));
    }

    #[test]
    fn tope_graph_rejects_codes() {
        let out = parse(tope_graph(r#"{"n":1,"codewords":[[]]}"#));
        assert!(out["error"].as_str().unwrap().contains("code"));
    }

    #[test]
    fn hollow_triangle_is_obstructed() {
        let out = parse(obstructions(3, "∅ 12 13 23"));
        assert_eq!(out["obstructions"], json!(3));
        assert_eq!(out["entries"][0]["status"], json!("obstruction"));
    }

    #[test]
    fn sunflower_has_no_obstructions() {
        let out = parse(obstructions(6, "∅ 23 13 4 5 6 234 135 1236 456"));
        assert_eq!(out["obstructions"], json!(0));
    }

    #[test]
    fn malformed_code_is_reported() {
        assert!(parse(obstructions(2, "1x"))["error"].is_string());
    }
}
