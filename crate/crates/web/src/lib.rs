//! Browser bindings: Milnor numbers from weights, transition tables from
//! scenario text, and the embedded example scenarios.

use cytrans::golden::{golden_source, list_golden, run_golden};
use cytrans::milnor::{milnor_oracle, milnor_orlik};
use cytrans::polyring::{parse_poly_infer, parse_rational};
use cytrans::report::render_table;
use cytrans::scenario::{evaluate, parse_scenario};
use cytrans::{Format, HypersurfaceGerm, WeightSystem};
use wasm_bindgen::prelude::*;

fn format_of(name: &str) -> Result<Format, String> {
    name.parse().map_err(|e: cytrans::Error| e.to_string())
}

pub fn milnor_text(weights: &str, degree: &str, poly: &str) -> Result<String, String> {
    let w = weights
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(parse_rational)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let w = WeightSystem::new(w, parse_rational(degree).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let formula = milnor_orlik(&w).map_err(|e| e.to_string())?;
    let mut out = format!("{w}\nweight formula:   {formula}\n");
    if !poly.trim().is_empty() {
        let (f, names) = parse_poly_infer(poly).map_err(|e| e.to_string())?;
        let g = HypersurfaceGerm::new(f, w).map_err(|e| e.to_string())?;
        let oracle = milnor_oracle(&g).map_err(|e| e.to_string())?;
        out.push_str(&format!("{}\nJacobian algebra: {oracle}\n", g.polynomial().display_with(&names)));
        if oracle != formula {
            out.push_str("FAILED: the two computations disagree\n");
        }
    }
    Ok(out)
}

pub fn scenario_text(source: &str, format: &str) -> Result<String, String> {
    let s = parse_scenario(source).map_err(|e| e.to_string())?;
    let r = evaluate(&s).map_err(|e| e.to_string())?;
    Ok(render_table(&r, format_of(format)?))
}

pub fn golden_text(name: &str, format: &str) -> Result<String, String> {
    let r = run_golden(name).map_err(|e| e.to_string())?;
    Ok(render_table(&r, format_of(format)?))
}

/// Milnor number by the weight formula, and by the Jacobian algebra when a
/// polynomial is supplied.
#[wasm_bindgen]
pub fn milnor(weights: &str, degree: &str, poly: &str) -> Result<String, JsError> {
    milnor_text(weights, degree, poly).map_err(|e| JsError::new(&e))
}

/// Evaluates TOML scenario text and renders the table as `text` or `records`.
#[wasm_bindgen]
pub fn transition(source: &str, format: &str) -> Result<String, JsError> {
    scenario_text(source, format).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn golden(name: &str, format: &str) -> Result<String, JsError> {
    golden_text(name, format).map_err(|e| JsError::new(&e))
}

/// Scenario source, for loading an example into the editor.
#[wasm_bindgen]
pub fn golden_scenario(name: &str) -> Option<String> {
    golden_source(name).map(str::to_string)
}

#[wasm_bindgen]
pub fn golden_names() -> Vec<String> {
    list_golden().into_iter().map(str::to_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn milnor_routes() {
        let s = milnor_text("1,1,1,1", "3", "x^3 + y^3 + z^3 + w^3").unwrap();
        assert!(s.contains("weight formula:   16"));
        assert!(s.contains("Jacobian algebra: 16"));
        assert!(milnor_text("2,1", "2", "").is_err());
    }

    #[test]
    fn every_example_renders() {
        for name in list_golden() {
            let src = golden_source(name).unwrap();
            assert_eq!(scenario_text(src, "text").unwrap(), golden_text(name, "text").unwrap());
        }
        assert!(scenario_text("kind = 3", "text").unwrap_err().contains("line 1"));
    }
}
