//! Computational regularity tests for sequences of homogeneous polynomials.
//!
//! * Hilbert method: a homogeneous sequence of degrees `d₁..d_r` in `N`
//!   variables is regular iff the quotient has series `Π(1 − t^{dᵢ})/(1 − t)^N`.
//! * Colon method: `fᵢ` is a nonzerodivisor modulo `J = ⟨f₁..f_{i−1}⟩` iff
//!   `J : fᵢ = J`, with `J ∩ ⟨fᵢ⟩` computed by eliminating an auxiliary
//!   variable.
//!
//! Both run under grevlex, whatever order the input ring carries.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{
    AlgebraError, MonomialOrder, OrderKind, PolyRing, Polynomial,
};
use crate::grobner::{
    buchberger, hilbert_numerator, multi_divide, BuchbergerOptions, Budget, GroebnerBasis,
    GrobnerError, HilbertData,
};

/// Name of the auxiliary elimination variable.
pub const AUX_VARIABLE: &str = "_t";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleMethod {
    #[default]
    Hilbert,
    Colon,
}

impl std::str::FromStr for OracleMethod {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "hilbert" => Ok(OracleMethod::Hilbert),
            "colon" => Ok(OracleMethod::Colon),
            _ => Err(format!("unknown method '{s}'")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleVerdict {
    Regular,
    NotRegular,
}

/// What was observed for one prefix `f₁..fᵢ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDetail {
    /// 1-based index of the last element of the prefix.
    pub index: usize,
    pub regular: bool,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub method: OracleMethod,
    pub verdict: OracleVerdict,
    /// 1-based index of the first element that is a zerodivisor modulo its
    /// predecessors.
    pub first_failure: Option<usize>,
    pub steps: Vec<StepDetail>,
    /// Hilbert numerator of the whole sequence (Hilbert method only).
    pub hilbert_actual: Option<HilbertData>,
    /// Numerator a regular sequence of these degrees would have.
    pub hilbert_expected: Option<HilbertData>,
}

impl OracleReport {
    pub fn is_regular(&self) -> bool {
        self.verdict == OracleVerdict::Regular
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("element {0} is not homogeneous")]
    NotHomogeneous(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("the base sequence is not regular (element {0})")]
    BaseNotRegular(usize),
}

impl From<GrobnerError> for OracleError {
    fn from(e: GrobnerError) -> Self {
        match e {
            GrobnerError::Algebra(a) => OracleError::Algebra(a),
            GrobnerError::NotHomogeneous(k) => OracleError::NotHomogeneous(k),
            other => OracleError::Inconclusive(other.to_string()),
        }
    }
}

fn options(budget: Budget) -> BuchbergerOptions {
    BuchbergerOptions {
        budget,
        ..Default::default()
    }
}

/// The ring with the same variables and field under grevlex.
pub fn grevlex_ring(ring: &PolyRing) -> Result<Arc<PolyRing>, AlgebraError> {
    ring.with_order(MonomialOrder::grevlex(ring.nvars()))
}

fn prepare(seq: &[Polynomial]) -> Result<Option<Arc<PolyRing>>, OracleError> {
    let Some(first) = seq.first() else {
        return Ok(None);
    };
    for (k, p) in seq.iter().enumerate() {
        if !p.is_homogeneous() {
            return Err(OracleError::NotHomogeneous(k + 1));
        }
    }
    Ok(Some(grevlex_ring(first.ring())?))
}

/// Positive-degree elements only: a zero or unit element is never part of a
/// regular sequence.
fn degenerate(p: &Polynomial) -> Option<&'static str> {
    if p.is_zero() {
        Some("zero element")
    } else if p.degree() == Some(0) {
        Some("unit element")
    } else {
        None
    }
}

fn hilbert_pair(
    ring: &Arc<PolyRing>,
    prefix: &[Polynomial],
    budget: Budget,
) -> Result<(HilbertData, HilbertData), OracleError> {
    let gb = buchberger(ring, prefix, &options(budget))?;
    let actual = hilbert_numerator(&gb.lead_ideal(), ring.nvars());
    let degrees: Vec<u32> = prefix.iter().map(|p| p.degree().unwrap_or(0)).collect();
    let expected = HilbertData::complete_intersection(&degrees, ring.nvars());
    Ok((actual, expected))
}

/// Regularity by comparing Hilbert series with the complete-intersection
/// series. The whole sequence is tested first; prefixes are scanned only to
/// locate the first failure.
pub fn regular_oracle_hilbert(seq: &[Polynomial], budget: Budget) -> Result<OracleReport, OracleError> {
    let mut report = OracleReport {
        method: OracleMethod::Hilbert,
        verdict: OracleVerdict::Regular,
        first_failure: None,
        steps: Vec::new(),
        hilbert_actual: None,
        hilbert_expected: None,
    };
    let Some(ring) = prepare(seq)? else {
        return Ok(report);
    };
    let seq: Vec<Polynomial> = seq
        .iter()
        .map(|p| p.to_ring(&ring))
        .collect::<Result<_, _>>()?;
    if let Some(k) = seq.iter().position(|p| degenerate(p).is_some()) {
        report.verdict = OracleVerdict::NotRegular;
        report.first_failure = Some(k + 1);
        report.steps.push(StepDetail {
            index: k + 1,
            regular: false,
            note: degenerate(&seq[k]).unwrap_or_default().to_string(),
        });
        return Ok(report);
    }

    let (actual, expected) = hilbert_pair(&ring, &seq, budget)?;
    let whole_ok = actual == expected;
    report.steps.push(StepDetail {
        index: seq.len(),
        regular: whole_ok,
        note: format!(
            "numerator {} (regular: {})",
            actual.numerator_string(),
            expected.numerator_string()
        ),
    });
    report.hilbert_actual = Some(actual);
    report.hilbert_expected = Some(expected);
    if whole_ok {
        return Ok(report);
    }
    report.verdict = OracleVerdict::NotRegular;
    for i in 1..seq.len() {
        let (a, e) = hilbert_pair(&ring, &seq[..i], budget)?;
        if a != e {
            report.first_failure = Some(i);
            report.steps.push(StepDetail {
                index: i,
                regular: false,
                note: format!("prefix numerator {} (regular: {})", a.numerator_string(), e.numerator_string()),
            });
            return Ok(report);
        }
    }
    report.first_failure = Some(seq.len());
    Ok(report)
}

/// Whether `f` is a nonzerodivisor modulo the ideal of `prefix_gb`, i.e.
/// `J : f = J`. `f` must live in the basis ring.
///
/// `J ∩ ⟨f⟩` is read off a Gröbner basis of `t·J + (1 − t)·f` under an order
/// eliminating the auxiliary `t`; dividing its generators by `f` gives
/// generators of `J : f`, each of which must lie in `J`.
pub fn nonzerodivisor_colon(
    prefix_gb: &GroebnerBasis,
    f: &Polynomial,
    budget: Budget,
) -> Result<bool, OracleError> {
    let ring = prefix_gb.ring();
    let f = f.to_ring(ring)?;
    if f.is_zero() {
        return Ok(false);
    }
    if prefix_gb.is_unit_ideal() {
        // R/J = 0: every element is trivially a nonzerodivisor, but the
        // quotient is not proper, so the sequence is not regular.
        return Ok(false);
    }
    let n = ring.nvars();
    let mut prec = vec![n];
    prec.extend(0..n);
    let aux_ring = PolyRing::new(
        ring.vars().with_extra(AUX_VARIABLE),
        MonomialOrder::new(OrderKind::Block { split: 1 }, prec)?,
        ring.field(),
    )?;
    let t = Polynomial::variable(&aux_ring, n);
    let one_minus_t = &Polynomial::one(&aux_ring) - &t;
    let mut gens: Vec<Polynomial> = prefix_gb
        .gens()
        .iter()
        .map(|g| Ok(&t * &g.to_ring(&aux_ring)?))
        .collect::<Result<_, AlgebraError>>()?;
    gens.push(&one_minus_t * &f.to_ring(&aux_ring)?);
    let elim = buchberger(&aux_ring, &gens, &options(budget))?;

    for g in elim.gens() {
        if g.terms().iter().any(|term| term.mono.exponent(n) != 0) {
            continue;
        }
        let g = g.to_ring(ring)?;
        let (q, r) = multi_divide(&g, std::slice::from_ref(&f))?;
        if !r.is_zero() {
            return Err(OracleError::Inconclusive(
                "intersection generator not divisible by the element".into(),
            ));
        }
        if !prefix_gb.contains(&q[0])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Regularity by successive colon tests; stops at the first zerodivisor.
pub fn regular_oracle_colon(seq: &[Polynomial], budget: Budget) -> Result<OracleReport, OracleError> {
    let mut report = OracleReport {
        method: OracleMethod::Colon,
        verdict: OracleVerdict::Regular,
        first_failure: None,
        steps: Vec::new(),
        hilbert_actual: None,
        hilbert_expected: None,
    };
    let Some(ring) = prepare(seq)? else {
        return Ok(report);
    };
    let seq: Vec<Polynomial> = seq
        .iter()
        .map(|p| p.to_ring(&ring))
        .collect::<Result<_, _>>()?;
    for (k, f) in seq.iter().enumerate() {
        let (ok, note) = match degenerate(f) {
            Some(why) => (false, why.to_string()),
            None => {
                let gb = buchberger(&ring, &seq[..k], &options(budget))?;
                let ok = nonzerodivisor_colon(&gb, f, budget)?;
                let note = if ok { "J : f = J" } else { "J : f strictly contains J" };
                (ok, note.to_string())
            }
        };
        report.steps.push(StepDetail {
            index: k + 1,
            regular: ok,
            note,
        });
        if !ok {
            report.verdict = OracleVerdict::NotRegular;
            report.first_failure = Some(k + 1);
            break;
        }
    }
    Ok(report)
}

pub fn sequence_oracle(
    seq: &[Polynomial],
    method: OracleMethod,
    budget: Budget,
) -> Result<OracleReport, OracleError> {
    match method {
        OracleMethod::Hilbert => regular_oracle_hilbert(seq, budget),
        OracleMethod::Colon => regular_oracle_colon(seq, budget),
    }
}

/// What happened to one candidate in [`greedy_extend`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "outcome")]
pub enum CandidateOutcome {
    Accepted { index: usize },
    Rejected { index: usize },
    Skipped { index: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyResult {
    pub accepted: Vec<Polynomial>,
    pub log: Vec<CandidateOutcome>,
}

/// Starting from a regular `base`, appends each candidate (in order) that
/// keeps the sequence regular. Candidates whose test runs out of budget are
/// skipped and logged.
pub fn greedy_extend(
    base: &[Polynomial],
    candidates: &[Polynomial],
    method: OracleMethod,
    budget: Budget,
) -> Result<GreedyResult, OracleError> {
    let report = sequence_oracle(base, method, budget)?;
    if let Some(k) = report.first_failure {
        return Err(OracleError::BaseNotRegular(k));
    }
    let mut current: Vec<Polynomial> = base.to_vec();
    let mut result = GreedyResult {
        accepted: Vec::new(),
        log: Vec::new(),
    };
    for (index, c) in candidates.iter().enumerate() {
        if !c.is_homogeneous() {
            return Err(OracleError::NotHomogeneous(base.len() + index + 1));
        }
        let verdict = match method {
            OracleMethod::Hilbert => {
                let mut trial = current.clone();
                trial.push(c.clone());
                regular_oracle_hilbert(&trial, budget).map(|r| r.is_regular())
            }
            OracleMethod::Colon => (|| {
                if degenerate(c).is_some() {
                    return Ok(false);
                }
                let ring = grevlex_ring(c.ring())?;
                let gb = buchberger(&ring, &current, &options(budget))?;
                nonzerodivisor_colon(&gb, c, budget)
            })(),
        };
        match verdict {
            Ok(true) => {
                current.push(c.clone());
                result.accepted.push(c.clone());
                result.log.push(CandidateOutcome::Accepted { index });
            }
            Ok(false) => result.log.push(CandidateOutcome::Rejected { index }),
            Err(OracleError::Inconclusive(reason)) => {
                result.log.push(CandidateOutcome::Skipped { index, reason })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, FieldKind, VariableTable};
    use crate::xypattern::{build_f, matrix_ring, GenericProduct, OrderChoice};

    fn product(n: usize) -> GenericProduct {
        GenericProduct::new(&matrix_ring(n, OrderChoice::Paper, FieldKind::default()).unwrap()).unwrap()
    }

    fn both(seq: &[Polynomial]) -> (OracleReport, OracleReport) {
        let b = Budget::default();
        (
            regular_oracle_hilbert(seq, b).unwrap(),
            regular_oracle_colon(seq, b).unwrap(),
        )
    }

    #[test]
    fn pattern_sequence_n2_is_regular() {
        let g = product(2);
        let f = build_f(&g);
        let (h, c) = both(&f);
        assert!(h.is_regular());
        assert!(c.is_regular());
        assert_eq!(&h.hilbert_actual.unwrap().series(3), &[1, 8, 33]);
    }

    #[test]
    fn full_entry_set_n2_fails_at_fourth() {
        let g = product(2);
        let seq: Vec<_> = g.entries().into_iter().map(|(_, p)| p).collect();
        // row-major entries: f11, f12, f21, f22 — reorder so the pattern comes first
        let seq = vec![seq[0].clone(), seq[2].clone(), seq[1].clone(), seq[3].clone()];
        let (h, c) = both(&seq);
        assert!(!h.is_regular());
        assert_eq!(h.first_failure, Some(4));
        assert_eq!(c.first_failure, Some(4));
    }

    #[test]
    fn variables_and_empty() {
        let g = product(2);
        let (h, c) = both(&[g.x(1, 1).unwrap(), g.y(1, 1).unwrap()]);
        assert!(h.is_regular() && c.is_regular());
        let (h, c) = both(&[]);
        assert!(h.is_regular() && c.is_regular());
    }

    #[test]
    fn repeated_and_degenerate_elements() {
        let g = product(2);
        let x = g.x(1, 1).unwrap();
        let (h, c) = both(&[x.clone(), x.clone()]);
        assert_eq!((h.first_failure, c.first_failure), (Some(2), Some(2)));
        let zero = Polynomial::zero(g.ring());
        let (h, c) = both(&[x.clone(), zero]);
        assert_eq!((h.first_failure, c.first_failure), (Some(2), Some(2)));
        let one = Polynomial::one(g.ring());
        let (h, c) = both(&[one]);
        assert_eq!((h.first_failure, c.first_failure), (Some(1), Some(1)));
    }

    #[test]
    fn textbook_zerodivisor() {
        // x·y, x·z in K[x,y,z]: x·z kills y modulo x·y? (xy : xz) = (y) ≠ (xy).
        let vars = VariableTable::named(["x", "y", "z"]);
        let ring = PolyRing::new(vars, MonomialOrder::grevlex(3), FieldKind::default()).unwrap();
        let p = |s| parse_poly(s, &ring).unwrap();
        let (h, c) = both(&[p("x*y"), p("x*z")]);
        assert_eq!((h.first_failure, c.first_failure), (Some(2), Some(2)));
        let (h, c) = both(&[p("x*y"), p("x + z")]);
        assert!(h.is_regular() && c.is_regular());
    }

    #[test]
    fn monomial_colon() {
        let g = product(2);
        let ring = grevlex_ring(g.ring()).unwrap();
        let j = &g.x(1, 1).unwrap() * &g.y(1, 1).unwrap();
        let gb = buchberger(&ring, &[j], &BuchbergerOptions::default()).unwrap();
        assert!(!nonzerodivisor_colon(&gb, &g.x(1, 1).unwrap(), Budget::default()).unwrap());
        assert!(nonzerodivisor_colon(&gb, &g.x(2, 2).unwrap(), Budget::default()).unwrap());
    }

    #[test]
    fn non_homogeneous_is_an_error() {
        let vars = VariableTable::named(["x", "y"]);
        let ring = PolyRing::new(vars, MonomialOrder::grevlex(2), FieldKind::default()).unwrap();
        let p = parse_poly("x^2 + y", &ring).unwrap();
        assert_eq!(
            regular_oracle_hilbert(std::slice::from_ref(&p), Budget::default()).unwrap_err(),
            OracleError::NotHomogeneous(1)
        );
        assert!(regular_oracle_colon(&[p], Budget::default()).is_err());
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let g = product(2);
        let seq: Vec<_> = g.entries().into_iter().map(|(_, p)| p).collect();
        let budget = Budget {
            max_pairs: Some(1),
            max_degree: None,
        };
        assert!(matches!(
            regular_oracle_hilbert(&seq, budget),
            Err(OracleError::Inconclusive(_))
        ));
    }

    #[test]
    fn greedy_picks_pattern_entries() {
        let g = product(2);
        let entries: Vec<_> = g.entries().into_iter().map(|(_, p)| p).collect();
        for method in [OracleMethod::Hilbert, OracleMethod::Colon] {
            let r = greedy_extend(&[], &entries, method, Budget::default()).unwrap();
            // f11, f12 accepted; f21 accepted; f22 rejected
            assert_eq!(r.accepted.len(), 3, "{method:?}");
            assert_eq!(r.log[3], CandidateOutcome::Rejected { index: 3 });
        }
        let f = build_f(&g);
        let r = greedy_extend(&f, &entries[3..], OracleMethod::Colon, Budget::default()).unwrap();
        assert!(r.accepted.is_empty());
        let r = greedy_extend(&f, &[], OracleMethod::Hilbert, Budget::default()).unwrap();
        assert!(r.accepted.is_empty() && r.log.is_empty());
        let r = greedy_extend(&[], &[g.x(1, 1).unwrap(), g.y(1, 1).unwrap()], OracleMethod::Colon, Budget::default())
            .unwrap();
        assert_eq!(r.accepted.len(), 2);
        let base = [entries[0].clone(), entries[0].clone()];
        assert_eq!(
            greedy_extend(&base, &entries, OracleMethod::Hilbert, Budget::default()).unwrap_err(),
            OracleError::BaseNotRegular(2)
        );
    }
}
