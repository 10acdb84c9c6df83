use matprod_wasm::{certify_json, oracle_json, pattern_json};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn pattern_for_n8() {
    let v = parse(&pattern_json(8).unwrap());
    assert_eq!(v["f"].as_array().unwrap().len(), 20);
    let selected = &v["selected"];
    for row in [0, 2, 4, 6] {
        assert_eq!(selected[row][1], true);
    }
    assert_eq!(selected[1][1], false);
}

#[test]
fn certificate_for_n4() {
    let v = parse(&certify_json(4).unwrap());
    assert_eq!(v["certified"], true);
    assert_eq!(v["rechecked"], true);
    let steps = v["certificate"]["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 15);
    assert_eq!(steps[7]["m_next"], "x[3,4]*y[4,2]");
    assert_eq!(steps[7]["strict_form"], false);
}

#[test]
fn oracle_pattern_and_full_set() {
    let v = parse(&oracle_json(2, "hilbert", "").unwrap());
    assert_eq!(v["regular"], true);
    assert_eq!(v["series"], serde_json::json!([1, 8, 33, 96, 225, 456]));
    let v = parse(&oracle_json(2, "colon", "1,1 1,2 2,1 2,2").unwrap());
    assert_eq!(v["regular"], false);
    assert_eq!(v["first_failure"], 4);
}
