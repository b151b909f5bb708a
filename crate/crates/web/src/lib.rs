//! Browser bindings. Each export takes plain strings and numbers and returns
//! a JSON string; the page in `www/` renders it. The `*_json` functions are
//! ordinary Rust so they can be tested natively.

use faircut::families::{self, NamedInstance};
use faircut::format::{parse_instance, write_instance};
use faircut::heuristics::{gw_expected_proportions, gw_round, gw_sdp_solve};
use faircut::rational::{format as frac, to_f64};
use faircut::{Enumerator, Objective, UtilityModel};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Browsers stall on big enumerations, so the demo keeps graphs small.
const WEB_LIMIT: usize = 14;

fn parse(text: &str) -> Result<NamedInstance, String> {
    parse_instance(text).map_err(|e| e.to_string())
}

/// All six objectives, with witness cuts and the optimal DF-MP lottery.
pub fn solve_json(text: &str) -> Result<String, String> {
    let inst = parse(text)?;
    let e = Enumerator::with_limit(WEB_LIMIT);
    let r = e.all_objectives(&inst.graph, inst.model, &inst.partition).map_err(|e| e.to_string())?;
    let objectives: Vec<Value> = Objective::ALL
        .iter()
        .map(|&o| {
            let v = r.value(o);
            json!({ "name": o.name(), "value": frac(v), "approx": to_f64(v) })
        })
        .collect();
    let lottery: Vec<Value> = r
        .df_mp
        .distribution
        .entries()
        .map(|(cut, p)| json!({ "cut": cut.to_string(), "probability": frac(p), "approx": to_f64(p) }))
        .collect();
    let out = json!({
        "label": inst.label,
        "vertices": inst.graph.vertex_count(),
        "edges": inst.graph.edges(),
        "groups": inst.partition.groups(),
        "objectives": objectives,
        "sf_mp_cut": r.sf_mp.witness_cut.to_string(),
        "df_mp_lottery": lottery,
        "dual_weights": r.df_mp.dual_weights.iter().map(frac).collect::<Vec<_>>(),
    });
    Ok(out.to_string())
}

/// Instance text for a named family; unused parameters are ignored.
pub fn generate_text(family: &str, n: usize, k: usize, r: usize) -> Result<String, String> {
    let inst = match family {
        "diamond" => families::diamond(),
        "paw" => families::paw(),
        "clique-tail" => families::clique_with_tail(k, n).map_err(|e| e.to_string())?,
        "cycle-biclique" => families::cycle_plus_biclique(k, r).map_err(|e| e.to_string())?,
        "odd-cycle-edges" => families::odd_cycle_edges(n).map_err(|e| e.to_string())?,
        "odd-cycle-nodes" => families::odd_cycle_nodes(n).map_err(|e| e.to_string())?,
        other => return Err(format!("unknown family `{other}`")),
    };
    Ok(write_instance(&inst))
}

/// Solves the relaxation, rounds it `samples` times and reports per-edge
/// crossing rates next to the worst group's share.
pub fn round_json(text: &str, samples: u32, seed: u32) -> Result<String, String> {
    let inst = parse(text)?;
    if inst.model != UtilityModel::Edge {
        return Err("hyperplane rounding is scored with edge utilities only".into());
    }
    let seed = u64::from(seed);
    let sdp = gw_sdp_solve(&inst.graph, None, 200, seed).map_err(|e| e.to_string())?;
    let rounding = gw_round(&inst.graph, &sdp.embedding, seed, u64::from(samples)).map_err(|e| e.to_string())?;
    let expected =
        gw_expected_proportions(&inst.graph, inst.model, &inst.partition, &sdp.embedding).map_err(|e| e.to_string())?;
    let edges: Vec<Value> = inst
        .graph
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| {
            json!({
                "edge": [u, v],
                "probability": rounding.analytic_probabilities[i],
                "frequency": rounding.edge_frequencies[i],
            })
        })
        .collect();
    let out = json!({
        "sdp_objective": sdp.objective,
        "edges": edges,
        "expected_per_group": expected,
        "worst_group_expected": expected.iter().cloned().fold(f64::INFINITY, f64::min),
    });
    Ok(out.to_string())
}

#[wasm_bindgen]
pub fn solve(text: &str) -> Result<String, JsError> {
    solve_json(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn generate(family: &str, n: usize, k: usize, r: usize) -> Result<String, JsError> {
    generate_text(family, n, k, r).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn round(text: &str, samples: u32, seed: u32) -> Result<String, JsError> {
    round_json(text, samples, seed).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_the_paw() {
        let text = generate_text("paw", 0, 0, 0).unwrap();
        let v: Value = serde_json::from_str(&solve_json(&text).unwrap()).unwrap();
        let df = v["objectives"].as_array().unwrap().iter().find(|o| o["name"] == "DF-MP").unwrap();
        assert_eq!(df["value"], "2/3");
        let total: f64 = v["df_mp_lottery"].as_array().unwrap().iter().map(|e| e["approx"].as_f64().unwrap()).sum();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_oversized_graphs() {
        let text = generate_text("clique-tail", 20, 2, 0).unwrap();
        assert!(solve_json(&text).unwrap_err().contains("limited to 14"));
    }

    #[test]
    fn rounding_reports_every_edge() {
        let text = generate_text("diamond", 0, 0, 0).unwrap();
        let v: Value = serde_json::from_str(&round_json(&text, 100, 1).unwrap()).unwrap();
        assert_eq!(v["edges"].as_array().unwrap().len(), 5);
        assert!(v["sdp_objective"].as_f64().unwrap() > 3.9);
    }

    #[test]
    fn unknown_family_is_an_error() {
        assert!(generate_text("petersen", 5, 0, 0).is_err());
    }
}
