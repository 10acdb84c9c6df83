use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{AlgebraError, Monomial, PolyRing, Scalar};

/// A non-zero coefficient times a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Scalar,
    pub mono: Monomial,
}

impl Term {
    pub fn new(coeff: Scalar, mono: Monomial) -> Self {
        Term { coeff, mono }
    }
}

/// A polynomial in canonical form: terms strictly descending under the ring's
/// order, distinct monomials, no zero coefficients. Zero is the empty list.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Scalar) -> Self {
        Polynomial::from_term(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn from_term(ring: &Arc<PolyRing>, c: Scalar, mono: Monomial) -> Self {
        debug_assert_eq!(mono.nvars(), ring.nvars());
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![Term::new(c, mono)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn monomial(ring: &Arc<PolyRing>, mono: Monomial) -> Self {
        Polynomial::from_term(ring, ring.field().one(), mono)
    }

    /// The variable in `slot`.
    pub fn variable(ring: &Arc<PolyRing>, slot: usize) -> Self {
        Polynomial::monomial(ring, Monomial::var_power(ring.nvars(), slot, 1))
    }

    /// Sorts, merges equal monomials and drops zeros.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<Term>) -> Self {
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff = &last.coeff + &t.coeff,
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Polynomial { ring: ring.clone(), terms: out }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The maximal term under the ring's order.
    pub fn leading_term(&self) -> Result<&Term, AlgebraError> {
        self.terms.first().ok_or(AlgebraError::ZeroPolynomial)
    }

    pub fn lead_monomial(&self) -> Result<&Monomial, AlgebraError> {
        self.leading_term().map(|t| &t.mono)
    }

    /// True when every term has the same total degree (zero counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|s| s.mono.degree() == t.mono.degree()),
        }
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    /// True when the polynomial is a single monomial with coefficient one.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.as_slice() {
            [t] if t.coeff.is_one() => Some(&t.mono),
            _ => None,
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), AlgebraError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_ring(other)?;
        Ok(self.merge(other.terms.iter().cloned()))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_ring(other)?;
        Ok(self.merge(other.terms.iter().map(|t| Term::new(-&t.coeff, t.mono.clone()))))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_ring(other)?;
        let mut acc = Polynomial::zero(&self.ring);
        for t in &other.terms {
            acc = acc.merge(self.mul_term_iter(&t.coeff, &t.mono));
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.mono.clone()))
                .collect(),
        }
    }

    /// `c · m · self`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.mul_term_iter(c, m).collect(),
        }
    }

    fn mul_term_iter<'a>(
        &'a self,
        c: &'a Scalar,
        m: &'a Monomial,
    ) -> impl Iterator<Item = Term> + 'a {
        self.terms
            .iter()
            .map(move |t| Term::new(&t.coeff * c, t.mono.mul(m)))
    }

    /// `self − c · m · g`, the reduction step of division.
    pub fn sub_mul_term(&self, c: &Scalar, m: &Monomial, g: &Polynomial) -> Polynomial {
        let neg = -c;
        self.merge(g.mul_term_iter(&neg, m))
    }

    // Merges a descending term stream into self.
    fn merge(&self, other: impl Iterator<Item = Term>) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len());
        let mut left = self.terms.iter().peekable();
        let mut right = other.peekable();
        loop {
            let ord = match (left.peek(), right.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(a), Some(b)) => order.compare(&a.mono, &b.mono),
            };
            match ord {
                Ordering::Greater => out.push(left.next().unwrap().clone()),
                Ordering::Less => {
                    let t = right.next().unwrap();
                    if !t.coeff.is_zero() {
                        out.push(t);
                    }
                }
                Ordering::Equal => {
                    let a = left.next().unwrap();
                    let b = right.next().unwrap();
                    let c = &a.coeff + &b.coeff;
                    if !c.is_zero() {
                        out.push(Term::new(c, b.mono));
                    }
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// This polynomial without its leading term.
    pub fn tail(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }

    /// Scales so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) if t.coeff.is_one() => self.clone(),
            Some(t) => self.scale(&t.coeff.inv().expect("non-zero leading coefficient")),
        }
    }

    /// Re-expresses this polynomial in `target`: re-sorts under its order,
    /// converts coefficients, and pads or truncates exponent vectors (truncated
    /// variables must not occur).
    pub fn to_ring(&self, target: &Arc<PolyRing>) -> Result<Polynomial, AlgebraError> {
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        let field = target.field();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mono = t.mono.resized(target.nvars()).ok_or(AlgebraError::RingMismatch)?;
                Ok(Term::new(field.convert(&t.coeff)?, mono))
            })
            .collect::<Result<Vec<_>, AlgebraError>>()?;
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Checks the canonical-form invariant.
    pub fn is_canonical(&self) -> bool {
        let order = self.ring.order();
        self.terms.iter().all(|t| !t.coeff.is_zero() && self.ring.field().contains(&t.coeff))
            && self
                .terms
                .windows(2)
                .all(|w| order.compare(&w[0].mono, &w[1].mono) == Ordering::Greater)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomials from different rings")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomials from different rings")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomials from different rings")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-&self.ring.field().one())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_poly(self))
    }
}
