//! Browser bindings: pattern matrix, step-by-step certification and the
//! Hilbert/colon regularity oracle, each returning a JSON string.

use matprod_regseq::algebra::{format_poly, FieldKind};
use matprod_regseq::grobner::Budget;
use matprod_regseq::regseq::{sequence_oracle, OracleMethod};
use matprod_regseq::xypattern::{
    build_ftilde, certify_theorem, is_selected, matrix_ring, GenericProduct, OrderChoice,
    PatternSpec,
};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest matrix size the page accepts for certification.
pub const MAX_CERTIFY_N: usize = 12;
/// Largest matrix size the page accepts for the oracle.
pub const MAX_ORACLE_N: usize = 3;
/// Critical-pair budget per Gröbner run in the browser.
pub const ORACLE_PAIR_BUDGET: usize = 20_000;

fn check_n(n: usize, max: usize) -> Result<(), String> {
    if (2..=max).contains(&n) {
        Ok(())
    } else {
        Err(format!("n must be between 2 and {max}"))
    }
}

/// The selection pattern for `n`: rendered matrix, the selected entries and
/// the augmented sequence.
pub fn pattern_json(n: usize) -> Result<String, String> {
    check_n(n, MAX_CERTIFY_N)?;
    let spec = PatternSpec::new(n).map_err(|e| e.to_string())?;
    let ring = matrix_ring(n, OrderChoice::Paper, FieldKind::default()).map_err(|e| e.to_string())?;
    let g = GenericProduct::new(&ring).map_err(|e| e.to_string())?;
    let f: Vec<_> = spec
        .f
        .iter()
        .map(|&(s, t)| json!({"label": format!("f[{s},{t}]"), "poly": format_poly(&g.entry(s, t).unwrap())}))
        .collect();
    let ftilde: Vec<String> = build_ftilde(&g).iter().map(|(item, _)| item.label()).collect();
    Ok(json!({
        "n": n,
        "matrix": spec.render_matrix(),
        "selected": (1..=n).map(|i| (1..=n).map(|j| is_selected(n, i, j)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "f": f,
        "ftilde": ftilde,
    })
    .to_string())
}

/// The certificate for the selected pattern of size `n`.
pub fn certify_json(n: usize) -> Result<String, String> {
    check_n(n, MAX_CERTIFY_N)?;
    let cert = certify_theorem(n, FieldKind::default()).map_err(|e| e.to_string())?;
    let doc = cert.to_doc();
    Ok(json!({
        "certified": cert.verdict.is_certified(),
        "rechecked": cert.recheck().is_certified(),
        "certificate": doc,
    })
    .to_string())
}

/// Parses `"1,1 2,1 1,2"` into entry positions.
fn parse_entries(n: usize, text: &str) -> Result<Vec<(usize, usize)>, String> {
    text.split_whitespace()
        .map(|pair| {
            let (i, j) = pair
                .split_once(',')
                .ok_or_else(|| format!("'{pair}' is not of the form i,j"))?;
            let i: usize = i.trim().parse().map_err(|_| format!("bad row in '{pair}'"))?;
            let j: usize = j.trim().parse().map_err(|_| format!("bad column in '{pair}'"))?;
            if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
                return Err(format!("entry ({i},{j}) outside 1..{n}"));
            }
            Ok((i, j))
        })
        .collect()
}

/// Regularity of the listed entries (the selected pattern when `entries` is
/// blank) by the chosen method, over GF(32003).
pub fn oracle_json(n: usize, method: &str, entries: &str) -> Result<String, String> {
    check_n(n, MAX_ORACLE_N)?;
    let method: OracleMethod = method.parse()?;
    let positions = if entries.trim().is_empty() {
        PatternSpec::new(n).map_err(|e| e.to_string())?.f
    } else {
        parse_entries(n, entries)?
    };
    let ring = matrix_ring(n, OrderChoice::Paper, FieldKind::default()).map_err(|e| e.to_string())?;
    let g = GenericProduct::new(&ring).map_err(|e| e.to_string())?;
    let seq: Vec<_> = positions.iter().map(|&(i, j)| g.entry(i, j).unwrap()).collect();
    let budget = Budget {
        max_pairs: Some(ORACLE_PAIR_BUDGET),
        max_degree: None,
    };
    let report = sequence_oracle(&seq, method, budget).map_err(|e| e.to_string())?;
    let series = report.hilbert_actual.as_ref().map(|h| h.series(6));
    Ok(json!({
        "sequence": positions.iter().map(|(i, j)| format!("f[{i},{j}]")).collect::<Vec<_>>(),
        "regular": report.is_regular(),
        "first_failure": report.first_failure,
        "numerator": report.hilbert_actual.as_ref().map(|h| h.numerator_string()),
        "expected_numerator": report.hilbert_expected.as_ref().map(|h| h.numerator_string()),
        "series": series,
        "steps": report.steps,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn pattern(n: usize) -> Result<String, JsValue> {
    pattern_json(n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn certify(n: usize) -> Result<String, JsValue> {
    certify_json(n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn oracle(n: usize, method: &str, entries: &str) -> Result<String, JsValue> {
    oracle_json(n, method, entries).map_err(|e| JsValue::from_str(&e))
}
