use std::cmp::Ordering;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::lemma::{
    check_technical_step, residue, EffectiveElement, GcdChecks, Role, StepFailure, Subtraction,
    TechnicalStep,
};
use crate::algebra::{
    format_monomial_in, format_poly, parse_poly, AlgebraError, FieldKind, Monomial, PolyRing,
    Polynomial, Term,
};
use crate::xypattern::{matrix_ring, OrderChoice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StepKind {
    CoprimeExtend,
    Technical,
}

/// One certified step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateStep {
    pub kind: StepKind,
    pub effective: EffectiveElement,
    /// Present for technical steps.
    pub technical: Option<TechnicalStep>,
    /// Optional human-readable tag (for example `f[3,2]`).
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Certified,
    Failed { step: usize, reason: String },
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, Verdict::Certified)
    }
}

/// Step-by-step record of a regularity proof with its verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityCertificate {
    pub ring: Arc<PolyRing>,
    pub order: OrderChoice,
    pub steps: Vec<CertificateStep>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

/// Builds a certificate one element at a time. After the first failure further
/// elements are ignored.
#[derive(Debug, Clone)]
pub struct Certifier {
    ring: Arc<PolyRing>,
    order: OrderChoice,
    steps: Vec<CertificateStep>,
    prior: Vec<EffectiveElement>,
    failure: Option<(usize, String)>,
    notes: Vec<String>,
}

impl Certifier {
    pub fn new(ring: &Arc<PolyRing>, order: OrderChoice) -> Self {
        Certifier {
            ring: ring.clone(),
            order,
            steps: Vec::new(),
            prior: Vec::new(),
            failure: None,
            notes: Vec::new(),
        }
    }

    pub fn prior(&self) -> &[EffectiveElement] {
        &self.prior
    }

    pub fn failed(&self) -> bool {
        self.failure.is_some()
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Marks the current step as failed for an external reason.
    pub fn fail(&mut self, reason: impl Into<String>) {
        if self.failure.is_none() {
            self.failure = Some((self.steps.len(), reason.into()));
        }
    }

    /// Appends `element` because its lead is coprime to every earlier
    /// effective lead.
    pub fn extend_coprime(&mut self, element: &Polynomial, label: Option<String>) -> bool {
        if self.failed() {
            return false;
        }
        let effective = match EffectiveElement::base(element.clone()) {
            Ok(e) => e,
            Err(_) => {
                self.fail(StepFailure::ZeroElement.to_string());
                return false;
            }
        };
        if let Some(k) = self
            .prior
            .iter()
            .position(|p| !p.effective_lead.is_coprime(&effective.effective_lead))
        {
            self.fail(format!("lead shares a variable with prior lead {k}"));
            return false;
        }
        self.prior.push(effective.clone());
        self.steps.push(CertificateStep {
            kind: StepKind::CoprimeExtend,
            effective,
            technical: None,
            label,
        });
        true
    }

    /// Appends `element` through a technical step.
    pub fn extend_technical(&mut self, element: &Polynomial, label: Option<String>) -> bool {
        if self.failed() {
            return false;
        }
        match check_technical_step(&self.prior, element) {
            Ok(step) => {
                let effective = step.effective();
                self.prior.push(effective.clone());
                self.steps.push(CertificateStep {
                    kind: StepKind::Technical,
                    effective,
                    technical: Some(step),
                    label,
                });
                true
            }
            Err(e) => {
                self.fail(e.to_string());
                false
            }
        }
    }

    /// Monomials and elements with no term divisible by an earlier bare
    /// monomial go through the coprime route; the rest are technical steps.
    pub fn extend(&mut self, element: &Polynomial, label: Option<String>) -> bool {
        let touches_bare = element.terms().iter().any(|t| {
            self.prior
                .iter()
                .any(|p| p.role == Role::BareMonomial && p.effective_lead.divides(&t.mono))
        });
        if element.as_monomial().is_some() || !touches_bare {
            self.extend_coprime(element, label)
        } else {
            self.extend_technical(element, label)
        }
    }

    pub fn finish(self) -> RegularityCertificate {
        let verdict = match self.failure {
            None => Verdict::Certified,
            Some((step, reason)) => Verdict::Failed { step, reason },
        };
        RegularityCertificate {
            ring: self.ring,
            order: self.order,
            steps: self.steps,
            verdict,
            notes: self.notes,
        }
    }
}

/// Certifies `seq` in order with [`Certifier::extend`].
pub fn certify_sequence(
    ring: &Arc<PolyRing>,
    order: OrderChoice,
    seq: &[Polynomial],
) -> RegularityCertificate {
    let mut c = Certifier::new(ring, order);
    for p in seq {
        if !c.extend(p, None) {
            break;
        }
    }
    c.finish()
}

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error("malformed certificate JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("'{0}' is not a monomial")]
    NotMonomial(String),
}

/// Serialized form of a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub n: usize,
    pub order: OrderChoice,
    pub field: String,
    pub steps: Vec<StepDoc>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDoc {
    pub kind: StepKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub role: Role,
    pub element: String,
    pub effective_lead: String,
    /// `[monomial, multiplier]` pairs.
    pub subtractions: Vec<[String; 2]>,
    pub m_next: String,
    pub checks: ChecksDoc,
    pub strict_form: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChecksDoc {
    #[serde(flatten)]
    pub gcd: GcdChecks,
    pub lead_coefficient: String,
}

impl RegularityCertificate {
    pub fn n(&self) -> usize {
        self.ring.vars().n()
    }

    pub fn to_doc(&self) -> CertificateDoc {
        let ring = &self.ring;
        let mono = |m: &Monomial| format_monomial_in(m, ring);
        let steps = self
            .steps
            .iter()
            .map(|s| {
                let e = &s.effective;
                let lead_coeff = e.element.leading_term().map(|t| t.coeff.to_string());
                match &s.technical {
                    Some(t) => StepDoc {
                        kind: s.kind,
                        label: s.label.clone(),
                        role: e.role,
                        element: format_poly(&e.element),
                        effective_lead: mono(&e.effective_lead),
                        subtractions: t
                            .subtractions
                            .iter()
                            .map(|sub| {
                                let mult = Polynomial::from_term(
                                    ring,
                                    sub.multiplier.coeff.clone(),
                                    sub.multiplier.mono.clone(),
                                );
                                [mono(&sub.monomial), format_poly(&mult)]
                            })
                            .collect(),
                        m_next: mono(&t.m_next),
                        checks: ChecksDoc {
                            gcd: t.checks,
                            lead_coefficient: t.lead_coefficient.to_string(),
                        },
                        strict_form: t.strict_form,
                    },
                    None => StepDoc {
                        kind: s.kind,
                        label: s.label.clone(),
                        role: e.role,
                        element: format_poly(&e.element),
                        effective_lead: mono(&e.effective_lead),
                        subtractions: Vec::new(),
                        m_next: mono(&e.effective_lead),
                        checks: ChecksDoc {
                            gcd: GcdChecks {
                                prior_pairwise_coprime: true,
                                monomials_pairwise_coprime: true,
                                leads_coprime_to_monomials: true,
                                tail_dominated: true,
                            },
                            lead_coefficient: lead_coeff.unwrap_or_default(),
                        },
                        strict_form: true,
                    },
                }
            })
            .collect();
        CertificateDoc {
            n: self.n(),
            order: self.order,
            field: self.ring.field().to_string(),
            steps,
            verdict: self.verdict.clone(),
            notes: self.notes.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("serializable")
    }

    /// Reconstructs a certificate from its document. Decompositions are taken
    /// from the document as stored, not recomputed.
    pub fn from_doc(doc: &CertificateDoc) -> Result<Self, CertificateError> {
        let field: FieldKind = doc.field.parse()?;
        let ring = matrix_ring(doc.n, doc.order, field)?;
        let mono = |s: &str| -> Result<Monomial, CertificateError> {
            let p = parse_poly(s, &ring)?;
            p.as_monomial()
                .cloned()
                .ok_or_else(|| CertificateError::NotMonomial(s.to_string()))
        };
        let mut steps = Vec::with_capacity(doc.steps.len());
        for s in &doc.steps {
            let element = parse_poly(&s.element, &ring)?;
            let effective = EffectiveElement {
                element: element.clone(),
                effective_lead: mono(&s.effective_lead)?,
                role: s.role,
            };
            let technical = match s.kind {
                StepKind::CoprimeExtend => None,
                StepKind::Technical => {
                    let mut subtractions = Vec::with_capacity(s.subtractions.len());
                    for [m, mult] in &s.subtractions {
                        let mult = parse_poly(mult, &ring)?;
                        let t = match mult.terms() {
                            [t] => t.clone(),
                            _ => return Err(CertificateError::NotMonomial(format_poly(&mult))),
                        };
                        subtractions.push(Subtraction {
                            monomial: mono(m)?,
                            multiplier: Term::new(t.coeff, t.mono),
                        });
                    }
                    let lead_coefficient = parse_poly(&s.checks.lead_coefficient, &ring)?
                        .leading_term()
                        .map(|t| t.coeff.clone())
                        .unwrap_or_else(|_| field.zero());
                    Some(TechnicalStep {
                        element,
                        subtractions,
                        m_next: mono(&s.m_next)?,
                        lead_coefficient,
                        checks: s.checks.gcd,
                        strict_form: s.strict_form,
                    })
                }
            };
            steps.push(CertificateStep {
                kind: s.kind,
                effective,
                technical,
                label: s.label.clone(),
            });
        }
        Ok(RegularityCertificate {
            ring,
            order: doc.order,
            steps,
            verdict: doc.verdict.clone(),
            notes: doc.notes.clone(),
        })
    }

    pub fn from_json(text: &str) -> Result<Self, CertificateError> {
        let doc: CertificateDoc =
            serde_json::from_str(text).map_err(|e| CertificateError::Json(e.to_string()))?;
        Self::from_doc(&doc)
    }

    /// Re-runs every gcd and lead check from the stored data alone and returns
    /// the verdict those checks support. A stored failure is kept as is.
    pub fn recheck(&self) -> Verdict {
        if let Verdict::Failed { .. } = self.verdict {
            return self.verdict.clone();
        }
        let order = self.ring.order();
        let mut leads: Vec<(&Monomial, Role)> = Vec::new();
        for (k, s) in self.steps.iter().enumerate() {
            let fail = |reason: &str| Verdict::Failed {
                step: k,
                reason: reason.to_string(),
            };
            let e = &s.effective;
            match (&s.kind, &s.technical) {
                (StepKind::CoprimeExtend, None) => {
                    match e.element.lead_monomial() {
                        Ok(m) if *m == e.effective_lead => {}
                        _ => return fail("effective lead is not the element's lead"),
                    }
                    if (e.role == Role::BareMonomial) != e.element.as_monomial().is_some() {
                        return fail("role does not match the element");
                    }
                }
                (StepKind::Technical, Some(t)) => {
                    if t.m_next != e.effective_lead || t.element != e.element {
                        return fail("technical record disagrees with the step");
                    }
                    for sub in &t.subtractions {
                        let known = leads
                            .iter()
                            .any(|(m, r)| *r == Role::BareMonomial && **m == sub.monomial);
                        if !known {
                            return fail("subtracted monomial is not an earlier bare monomial");
                        }
                    }
                    let res = residue(&t.element, &t.subtractions);
                    let Ok(lead) = res.leading_term() else {
                        return fail("residue is zero");
                    };
                    if lead.mono != t.m_next || lead.coeff != t.lead_coefficient {
                        return fail("residue lead differs from m_next");
                    }
                    if res.terms()[1..]
                        .iter()
                        .any(|x| order.compare(&x.mono, &t.m_next) != Ordering::Less)
                    {
                        return fail("residue tail not below m_next");
                    }
                }
                _ => return fail("step kind and record disagree"),
            }
            if let Some(j) = leads.iter().position(|(m, _)| !m.is_coprime(&e.effective_lead)) {
                return fail(&format!("effective lead shares a variable with step {j}"));
            }
            leads.push((&e.effective_lead, e.role));
        }
        Verdict::Certified
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xypattern::GenericProduct;

    fn ring(n: usize) -> Arc<PolyRing> {
        matrix_ring(n, OrderChoice::Paper, FieldKind::default()).unwrap()
    }

    #[test]
    fn certify_small_sequence_and_round_trip() {
        let r = ring(2);
        let g = GenericProduct::new(&r).unwrap();
        let seq = [
            g.entry(1, 1).unwrap(),
            g.entry(2, 1).unwrap(),
            g.y(1, 2).unwrap(),
            g.entry(1, 2).unwrap(),
        ];
        let cert = certify_sequence(&r, OrderChoice::Paper, &seq);
        assert!(cert.verdict.is_certified());
        assert_eq!(cert.steps.len(), 4);
        assert_eq!(cert.steps[3].kind, StepKind::Technical);
        assert_eq!(cert.recheck(), Verdict::Certified);

        let json = cert.to_json();
        let back = RegularityCertificate::from_json(&json).unwrap();
        assert_eq!(back.recheck(), Verdict::Certified);
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn failure_is_recorded() {
        let r = ring(2);
        let g = GenericProduct::new(&r).unwrap();
        let seq = [g.entry(1, 1).unwrap(), g.entry(1, 2).unwrap()];
        let cert = certify_sequence(&r, OrderChoice::Paper, &seq);
        assert!(matches!(cert.verdict, Verdict::Failed { step: 1, .. }));
    }

    #[test]
    fn tampered_certificate_fails_recheck() {
        let r = ring(2);
        let g = GenericProduct::new(&r).unwrap();
        let seq = [
            g.entry(1, 1).unwrap(),
            g.entry(2, 1).unwrap(),
            g.y(1, 2).unwrap(),
            g.entry(1, 2).unwrap(),
        ];
        let mut doc = certify_sequence(&r, OrderChoice::Paper, &seq).to_doc();
        doc.steps[3].m_next = "x[1,1]*y[1,2]".into();
        doc.steps[3].effective_lead = "x[1,1]*y[1,2]".into();
        let cert = RegularityCertificate::from_doc(&doc).unwrap();
        assert!(matches!(cert.recheck(), Verdict::Failed { step: 3, .. }));

        let mut doc = certify_sequence(&r, OrderChoice::Paper, &seq).to_doc();
        doc.steps.swap(2, 3);
        let cert = RegularityCertificate::from_doc(&doc).unwrap();
        assert!(matches!(cert.recheck(), Verdict::Failed { step: 2, .. }));
    }

    #[test]
    fn json_shape() {
        let r = ring(2);
        let g = GenericProduct::new(&r).unwrap();
        let cert = certify_sequence(&r, OrderChoice::Paper, &[g.entry(1, 1).unwrap()]);
        let v: serde_json::Value = serde_json::from_str(&cert.to_json()).unwrap();
        assert_eq!(v["n"], 2);
        assert_eq!(v["order"], "paper");
        assert_eq!(v["field"], "gfp:32003");
        assert_eq!(v["verdict"], "certified");
        let step = &v["steps"][0];
        for key in ["kind", "element", "effective_lead", "subtractions", "m_next", "checks", "strict_form"] {
            assert!(step.get(key).is_some(), "missing {key}");
        }
        assert_eq!(step["kind"], "COPRIME_EXTEND");
    }
}
