//! Which entries of `XY` are selected, and the augmented sequence with bare
//! `y` variables interleaved.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::GenericProduct;
use crate::algebra::{AlgebraError, MatrixVar, Monomial, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("matrix size must be at least 2, got {0}")]
    MatrixSize(usize),
    #[error("column {t} outside 1..{n}")]
    Column { t: usize, n: usize },
    #[error("position ({s},{t}) is not selected for n = {n}")]
    NotSelected { s: usize, t: usize, n: usize },
}

/// `k_t = 1 + (⌊n/t⌋ − 1)·t`, the last selected row in column `t`.
pub fn k_value(n: usize, t: usize) -> Result<usize, PatternError> {
    if t < 1 || t > n {
        return Err(PatternError::Column { t, n });
    }
    Ok(1 + (n / t - 1) * t)
}

/// Selected rows of column `t`: `1, 1+t, …, k_t`.
pub fn pattern_rows(n: usize, t: usize) -> Result<Vec<usize>, PatternError> {
    let k = k_value(n, t)?;
    Ok((1..=k).step_by(t).collect())
}

pub fn is_selected(n: usize, s: usize, t: usize) -> bool {
    t >= 1 && t <= n && s >= 1 && s <= n && (s - 1).is_multiple_of(t) && s <= 1 + (n / t - 1) * t
}

/// One element of the augmented sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PatternItem {
    /// The bare variable `y[row, col]`.
    Bare { row: usize, col: usize },
    /// The entry `f[row, col]`.
    Entry { row: usize, col: usize },
}

impl PatternItem {
    pub fn label(&self) -> String {
        match self {
            PatternItem::Bare { row, col } => format!("y[{row},{col}]"),
            PatternItem::Entry { row, col } => format!("f[{row},{col}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternColumn {
    pub t: usize,
    pub k: usize,
    pub rows: Vec<usize>,
}

/// The selection pattern for a given `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternSpec {
    pub n: usize,
    pub columns: Vec<PatternColumn>,
    /// Selected `(row, col)` positions in sequence order.
    pub f: Vec<(usize, usize)>,
    pub ftilde: Vec<PatternItem>,
}

impl PatternSpec {
    pub fn new(n: usize) -> Result<Self, PatternError> {
        if n < 2 {
            return Err(PatternError::MatrixSize(n));
        }
        let mut columns = Vec::with_capacity(n);
        let mut f = Vec::new();
        let mut ftilde = Vec::new();
        for t in 1..=n {
            let rows = pattern_rows(n, t)?;
            for &s in &rows {
                f.push((s, t));
                // y[s,t], …, y[s+t−2,t] go immediately before f[s,t].
                for row in s..s + t - 1 {
                    ftilde.push(PatternItem::Bare { row, col: t });
                }
                ftilde.push(PatternItem::Entry { row: s, col: t });
            }
            columns.push(PatternColumn {
                t,
                k: k_value(n, t)?,
                rows,
            });
        }
        Ok(PatternSpec { n, columns, f, ftilde })
    }

    /// The pattern matrix: `f_ij` at selected positions, `×` elsewhere,
    /// columns padded to equal width.
    pub fn render_matrix(&self) -> String {
        let n = self.n;
        let label = |i: usize, j: usize| {
            if n < 10 {
                format!("f{i}{j}")
            } else {
                format!("f{i},{j}")
            }
        };
        let cells: Vec<Vec<String>> = (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| {
                        if is_selected(n, i, j) {
                            label(i, j)
                        } else {
                            "×".to_string()
                        }
                    })
                    .collect()
            })
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(|c| c.chars().count())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for row in &cells {
            let line: Vec<String> = row
                .iter()
                .map(|c| format!("{c}{}", " ".repeat(width - c.chars().count())))
                .collect();
            out.push_str(line.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// `Σ_{t=1}^{n} ⌊n/t⌋`.
pub fn pattern_size(n: usize) -> usize {
    (1..=n).map(|t| n / t).sum()
}

/// The selected entries in sequence order.
pub fn build_f(product: &GenericProduct) -> Vec<Polynomial> {
    let spec = PatternSpec::new(product.n()).expect("n >= 2");
    spec.f
        .iter()
        .map(|&(s, t)| product.entry(s, t).expect("in range"))
        .collect()
}

/// The augmented sequence with its polynomials.
pub fn build_ftilde(product: &GenericProduct) -> Vec<(PatternItem, Polynomial)> {
    let spec = PatternSpec::new(product.n()).expect("n >= 2");
    spec.ftilde
        .iter()
        .map(|&item| {
            let p = match item {
                PatternItem::Bare { row, col } => product.y(row, col),
                PatternItem::Entry { row, col } => product.entry(row, col),
            };
            (item, p.expect("in range"))
        })
        .collect()
}

/// Predicted lead of `f[s,t]` once multiples of the preceding bare variables
/// are removed: `x[s,s]·y[s,1]` for `t = 1`, else `x[s,s+t−1]·y[s+t−1,t]`.
pub fn expected_effective_lead(
    product: &GenericProduct,
    s: usize,
    t: usize,
) -> Result<Monomial, PatternError> {
    let n = product.n();
    if !is_selected(n, s, t) {
        return Err(PatternError::NotSelected { s, t, n });
    }
    let k = s + t - 1;
    let m = |v, i, j| -> Result<Monomial, AlgebraError> { product.var_monomial(v, i, j) };
    let lead = if t == 1 {
        m(MatrixVar::X, s, s).and_then(|a| Ok(a.mul(&m(MatrixVar::Y, s, 1)?)))
    } else {
        m(MatrixVar::X, s, k).and_then(|a| Ok(a.mul(&m(MatrixVar::Y, k, t)?)))
    };
    Ok(lead.expect("s + t - 1 <= n for selected positions"))
}
