//! The two lead-term criteria for regular sequences.
//!
//! A sequence whose leading monomials are pairwise coprime is regular. An
//! element whose terms are partly divisible by earlier bare monomials can be
//! replaced by its residue (the element minus those multiples) since the
//! monomials lie in the prefix ideal; if the residue's lead is coprime to all
//! earlier effective leads the extended sequence is again regular.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraError, Monomial, Polynomial, Scalar, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    /// Certified directly from its true lead.
    Base,
    /// A single monomial (usually a bare variable).
    BareMonomial,
    /// Certified from the lead of its residue.
    Technical,
}

/// A certified sequence member together with the lead that certified it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EffectiveElement {
    pub element: Polynomial,
    pub effective_lead: Monomial,
    pub role: Role,
}

impl EffectiveElement {
    /// A base or bare-monomial element, whose effective lead is its true lead.
    pub fn base(element: Polynomial) -> Result<Self, AlgebraError> {
        let effective_lead = element.lead_monomial()?.clone();
        let role = if element.as_monomial().is_some() {
            Role::BareMonomial
        } else {
            Role::Base
        };
        Ok(EffectiveElement {
            element,
            effective_lead,
            role,
        })
    }
}

/// Outcome of [`check_coprime_leads`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoprimeCheck {
    Coprime,
    /// Elements `i < j` have leads sharing a variable.
    Shared {
        i: usize,
        j: usize,
        lead_i: Monomial,
        lead_j: Monomial,
    },
}

impl CoprimeCheck {
    pub fn holds(&self) -> bool {
        matches!(self, CoprimeCheck::Coprime)
    }
}

/// Whether all pairwise leading-monomial gcds are 1, with the first offending
/// pair otherwise.
pub fn check_coprime_leads(seq: &[Polynomial]) -> Result<CoprimeCheck, AlgebraError> {
    let leads = seq
        .iter()
        .map(|p| p.lead_monomial().cloned())
        .collect::<Result<Vec<_>, _>>()?;
    for i in 0..leads.len() {
        for j in i + 1..leads.len() {
            if !leads[i].is_coprime(&leads[j]) {
                return Ok(CoprimeCheck::Shared {
                    i,
                    j,
                    lead_i: leads[i].clone(),
                    lead_j: leads[j].clone(),
                });
            }
        }
    }
    Ok(CoprimeCheck::Coprime)
}

/// One subtracted multiple `multiplier · monomial`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subtraction {
    pub monomial: Monomial,
    pub multiplier: Term,
}

/// Recorded gcd conditions of a technical step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdChecks {
    /// Earlier effective leads are pairwise coprime.
    pub prior_pairwise_coprime: bool,
    /// The subtracted monomials and the residue lead are pairwise coprime.
    pub monomials_pairwise_coprime: bool,
    /// The residue lead is coprime to every other earlier effective lead.
    pub leads_coprime_to_monomials: bool,
    /// Every other residue term is strictly below the residue lead.
    pub tail_dominated: bool,
}

impl GcdChecks {
    pub fn all(&self) -> bool {
        self.prior_pairwise_coprime
            && self.monomials_pairwise_coprime
            && self.leads_coprime_to_monomials
            && self.tail_dominated
    }
}

/// A certified step `h = Σ multiplierᵢ·mᵢ + c·m_next + (lower terms)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TechnicalStep {
    pub element: Polynomial,
    pub subtractions: Vec<Subtraction>,
    pub m_next: Monomial,
    /// Coefficient `c` of `m_next` in the residue; the residue is scaled by
    /// `c⁻¹` before its lead is read off.
    pub lead_coefficient: Scalar,
    pub checks: GcdChecks,
    /// Every multiplier divides the lead of an earlier non-monomial element.
    pub strict_form: bool,
}

impl TechnicalStep {
    pub fn effective(&self) -> EffectiveElement {
        EffectiveElement {
            element: self.element.clone(),
            effective_lead: self.m_next.clone(),
            role: Role::Technical,
        }
    }

    /// `h − Σ multiplierᵢ·mᵢ`.
    pub fn residue(&self) -> Polynomial {
        residue(&self.element, &self.subtractions)
    }
}

pub(crate) fn residue(h: &Polynomial, subs: &[Subtraction]) -> Polynomial {
    subs.iter().fold(h.clone(), |acc, s| {
        acc.sub_mul_term(&s.multiplier.coeff, &s.multiplier.mono, &Polynomial::monomial(h.ring(), s.monomial.clone()))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepFailure {
    ZeroElement,
    /// Condition (ii): earlier effective leads `i` and `j` share a variable.
    PriorNotCoprime { i: usize, j: usize },
    /// Nothing remains after subtracting multiples of earlier monomials.
    DegenerateResidue,
    /// Condition (iii): the residue lead shares a variable with subtracted
    /// monomial (earlier element `index`).
    MonomialsNotCoprime { index: usize },
    /// Condition (iv): the residue lead shares a variable with the effective
    /// lead of earlier element `index`.
    LeadNotCoprime { index: usize },
    /// A residue term is not below the residue lead.
    TailNotDominated,
}

impl fmt::Display for StepFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepFailure::ZeroElement => write!(f, "zero element"),
            StepFailure::PriorNotCoprime { i, j } => {
                write!(f, "condition (ii): prior leads {i} and {j} share a variable")
            }
            StepFailure::DegenerateResidue => write!(f, "degenerate step: residue is zero"),
            StepFailure::MonomialsNotCoprime { index } => write!(
                f,
                "condition (iii): residue lead shares a variable with subtracted monomial {index}"
            ),
            StepFailure::LeadNotCoprime { index } => write!(
                f,
                "condition (iv): residue lead shares a variable with prior lead {index}"
            ),
            StepFailure::TailNotDominated => write!(f, "residue tail not below its lead"),
        }
    }
}

/// Decomposes `h` against the certified prefix and checks the technical-step
/// conditions.
///
/// Every term of `h` divisible by an earlier bare monomial (first match in
/// prefix order) is moved to the subtraction list; the lead of what remains is
/// `m_next`.
pub fn check_technical_step(
    prior: &[EffectiveElement],
    h: &Polynomial,
) -> Result<TechnicalStep, StepFailure> {
    if h.is_zero() {
        return Err(StepFailure::ZeroElement);
    }
    for i in 0..prior.len() {
        for j in i + 1..prior.len() {
            if !prior[i].effective_lead.is_coprime(&prior[j].effective_lead) {
                return Err(StepFailure::PriorNotCoprime { i, j });
            }
        }
    }

    let bare: Vec<(usize, &Monomial)> = prior
        .iter()
        .enumerate()
        .filter(|(_, e)| e.role == Role::BareMonomial)
        .map(|(k, e)| (k, &e.effective_lead))
        .collect();
    let mut subtractions = Vec::new();
    let mut used = Vec::new();
    let mut rest = Vec::new();
    for t in h.terms() {
        match bare.iter().find_map(|&(k, m)| t.mono.div(m).map(|q| (k, m, q))) {
            Some((k, m, q)) => {
                subtractions.push(Subtraction {
                    monomial: m.clone(),
                    multiplier: Term::new(t.coeff.clone(), q),
                });
                if !used.contains(&k) {
                    used.push(k);
                }
            }
            None => rest.push(t.clone()),
        }
    }
    let residue = residue(h, &subtractions);
    debug_assert_eq!(residue.terms(), rest.as_slice());
    let lead = residue.leading_term().map_err(|_| StepFailure::DegenerateResidue)?;
    let m_next = lead.mono.clone();
    let lead_coefficient = lead.coeff.clone();

    let order = h.ring().order();
    let tail_dominated = residue.terms()[1..]
        .iter()
        .all(|t| order.compare(&t.mono, &m_next) == Ordering::Less);
    if !tail_dominated {
        return Err(StepFailure::TailNotDominated);
    }
    for &k in &used {
        if !prior[k].effective_lead.is_coprime(&m_next) {
            return Err(StepFailure::MonomialsNotCoprime { index: k });
        }
    }
    for (k, e) in prior.iter().enumerate() {
        if !used.contains(&k) && !e.effective_lead.is_coprime(&m_next) {
            return Err(StepFailure::LeadNotCoprime { index: k });
        }
    }

    let strict_form = subtractions.iter().all(|s| {
        prior
            .iter()
            .filter(|e| e.role != Role::BareMonomial)
            .any(|e| s.multiplier.mono.divides(&e.effective_lead))
    });

    Ok(TechnicalStep {
        element: h.clone(),
        subtractions,
        m_next,
        lead_coefficient,
        checks: GcdChecks {
            prior_pairwise_coprime: true,
            monomials_pairwise_coprime: true,
            leads_coprime_to_monomials: true,
            tail_dominated,
        },
        strict_form,
    })
}
