//! Reading polynomial lists and choosing the ring they live in.

use std::path::Path;
use std::sync::Arc;

use matprod_regseq::algebra::{
    parse_poly, FieldKind, MonomialOrder, PolyRing, Polynomial, VariableTable,
};
use matprod_regseq::xypattern::{matrix_ring, OrderChoice};

use crate::Failure;

/// Non-empty, non-comment lines of `text`.
pub fn polynomial_lines(text: &str) -> Vec<&str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

/// Plain variable names in order of first appearance. Matrix variables
/// `x[i,j]`, `y[i,j]` are not included; `matrix` reports whether any occur.
fn scan_names(lines: &[&str]) -> (Vec<String>, bool) {
    let mut names: Vec<String> = Vec::new();
    let mut matrix = false;
    for line in lines {
        let bytes = line.as_bytes();
        let mut k = 0;
        while k < bytes.len() {
            let c = bytes[k];
            if c.is_ascii_alphabetic() || c == b'_' {
                let start = k;
                while k < bytes.len() && (bytes[k].is_ascii_alphanumeric() || bytes[k] == b'_') {
                    k += 1;
                }
                let name = &line[start..k];
                let bracket = line[k..].trim_start().starts_with('[');
                if (name == "x" || name == "y") && bracket {
                    matrix = true;
                } else if !names.iter().any(|n| n == name) {
                    names.push(name.to_string());
                }
            } else {
                k += 1;
            }
        }
    }
    (names, matrix)
}

/// The ring for `lines`: the `n × n` matrix ring when only `x[i,j]`, `y[i,j]`
/// occur, otherwise a ring of the plain names in order of appearance.
pub fn infer_ring(
    lines: &[&str],
    n: usize,
    order: OrderChoice,
    field: FieldKind,
) -> Result<Arc<PolyRing>, Failure> {
    let (names, matrix) = scan_names(lines);
    if names.is_empty() {
        return matrix_ring(n, order, field).map_err(|e| Failure::Usage(e.to_string()));
    }
    if matrix {
        return Err(Failure::Usage(
            "input mixes matrix variables with plain names".into(),
        ));
    }
    let nv = names.len();
    let mono_order = match order {
        OrderChoice::Lex => MonomialOrder::lex(nv),
        OrderChoice::Grevlex => MonomialOrder::grevlex(nv),
        OrderChoice::Paper => {
            return Err(Failure::Usage(
                "--order paper needs matrix variables x[i,j], y[i,j]; use lex or grevlex".into(),
            ))
        }
    };
    PolyRing::new(VariableTable::named(names), mono_order, field)
        .map_err(|e| Failure::Usage(e.to_string()))
}

pub fn parse_lines(lines: &[&str], ring: &Arc<PolyRing>) -> Result<Vec<Polynomial>, Failure> {
    lines
        .iter()
        .enumerate()
        .map(|(k, l)| {
            parse_poly(l, ring).map_err(|e| Failure::Usage(format!("input line {}: {e}", k + 1)))
        })
        .collect()
}

pub fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}
