//! Why all four entries of `XY` for `n = 2` are not a regular sequence: a
//! multiple of `f22` outside the ideal lands in `J = ⟨f11, f12, f21⟩`.

use serde::{Deserialize, Serialize};

use crate::algebra::{format_poly, parse_poly, AlgebraError, FieldKind, Polynomial};
use crate::grobner::{buchberger, BuchbergerOptions, GrobnerError};

use super::{matrix_ring, GenericProduct, OrderChoice};

/// A claimed relation `multiplier·f22 ∈ J` with its checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCheck {
    /// The relation as stated, `lhs = rhs`.
    pub identity: String,
    /// `lhs − rhs`, expanded; `"0"` when the identity holds.
    pub residue: String,
    pub identity_holds: bool,
    pub multiplier: String,
    /// `multiplier·f22 ∈ J`.
    pub product_in_ideal: bool,
    /// `multiplier ∉ J`.
    pub multiplier_outside_ideal: bool,
}

impl WitnessCheck {
    /// The relation exhibits `f22` as a zerodivisor modulo `J`.
    pub fn demonstrates(&self) -> bool {
        self.identity_holds && self.product_in_ideal && self.multiplier_outside_ideal
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub ideal: Vec<String>,
    /// The commonly quoted relation
    /// `x12·y21·f11 + x11·y12·f12 − x22·y21·f21 − x21·y12·f22 = 0`
    /// with the witness `x21·y12`.
    pub quoted: WitnessCheck,
    /// A relation that does hold:
    /// `x12·y11·f22 = x22·y11·f12 − x22·y12·f11 + x12·y12·f21`.
    pub corrected: WitnessCheck,
    pub ideal_gb_size: usize,
    pub field: String,
}

fn check(
    lhs: &Polynomial,
    rhs: &Polynomial,
    identity: &str,
    multiplier: &Polynomial,
    f22: &Polynomial,
    gb: &crate::grobner::GroebnerBasis,
) -> Result<WitnessCheck, AlgebraError> {
    let residue = lhs - rhs;
    Ok(WitnessCheck {
        identity: identity.to_string(),
        residue: format_poly(&residue),
        identity_holds: residue.is_zero(),
        multiplier: format_poly(multiplier),
        product_in_ideal: gb.contains(&(multiplier * f22))?,
        multiplier_outside_ideal: !gb.contains(multiplier)?,
    })
}

/// Evaluates both relations over `field`. Both have integer coefficients,
/// so the verdicts over the rationals carry over to every prime field.
pub fn counterexample_n2(field: FieldKind) -> Result<CounterexampleReport, GrobnerError> {
    let ring = matrix_ring(2, OrderChoice::Paper, field)?;
    let g = GenericProduct::new(&ring)?;
    let f = |i, j| g.entry(i, j);
    let (f11, f12, f21, f22) = (f(1, 1)?, f(1, 2)?, f(2, 1)?, f(2, 2)?);
    let p = |s: &str| parse_poly(s, &ring);
    let gb = buchberger(
        &ring,
        &[f11.clone(), f12.clone(), f21.clone()],
        &BuchbergerOptions::default(),
    )?;

    let quoted_lhs = &(&(&(&p("x[1,2]*y[2,1]")? * &f11) + &(&p("x[1,1]*y[1,2]")? * &f12))
        - &(&p("x[2,2]*y[2,1]")? * &f21))
        - &(&p("x[2,1]*y[1,2]")? * &f22);
    let quoted = check(
        &quoted_lhs,
        &Polynomial::zero(&ring),
        "x12*y21*f11 + x11*y12*f12 - x22*y21*f21 - x21*y12*f22 = 0",
        &p("x[2,1]*y[1,2]")?,
        &f22,
        &gb,
    )?;

    let corrected_rhs = &(&(&p("x[2,2]*y[1,1]")? * &f12) - &(&p("x[2,2]*y[1,2]")? * &f11))
        + &(&p("x[1,2]*y[1,2]")? * &f21);
    let corrected = check(
        &(&p("x[1,2]*y[1,1]")? * &f22),
        &corrected_rhs,
        "x12*y11*f22 = x22*y11*f12 - x22*y12*f11 + x12*y12*f21",
        &p("x[1,2]*y[1,1]")?,
        &f22,
        &gb,
    )?;

    Ok(CounterexampleReport {
        ideal: [&f11, &f12, &f21].iter().map(|q| format_poly(q)).collect(),
        quoted,
        corrected,
        ideal_gb_size: gb.len(),
        field: field.to_string(),
    })
}
