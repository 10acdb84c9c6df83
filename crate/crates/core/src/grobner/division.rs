use crate::algebra::{AlgebraError, Polynomial, Term};

/// Multivariate division of `f` by an ordered divisor list.
///
/// Returns quotients and remainder with `f = Σ qᵢ·dᵢ + r`, where no term of
/// `r` is divisible by any `Lt(dᵢ)`. The first divisor (in list order) whose
/// lead divides the current lead is used.
pub fn multi_divide(
    f: &Polynomial,
    divisors: &[Polynomial],
) -> Result<(Vec<Polynomial>, Polynomial), AlgebraError> {
    let ring = f.ring();
    let mut leads = Vec::with_capacity(divisors.len());
    for d in divisors {
        if **d.ring() != **ring {
            return Err(AlgebraError::RingMismatch);
        }
        let lt = d.leading_term()?;
        leads.push((lt.mono.clone(), lt.coeff.inv().expect("non-zero lead")));
    }

    let mut quotients: Vec<Vec<Term>> = vec![Vec::new(); divisors.len()];
    let mut remainder = Vec::new();
    let mut p = f.clone();
    while let Some(lt) = p.terms().first() {
        let hit = leads
            .iter()
            .enumerate()
            .find_map(|(i, (m, inv))| lt.mono.div(m).map(|q| (i, q, &lt.coeff * inv)));
        match hit {
            Some((i, q, c)) => {
                quotients[i].push(Term::new(c.clone(), q.clone()));
                p = p.sub_mul_term(&c, &q, &divisors[i]);
            }
            None => {
                remainder.push(lt.clone());
                p = p.tail();
            }
        }
    }
    Ok((
        quotients
            .into_iter()
            .map(|ts| Polynomial::from_terms(ring, ts))
            .collect(),
        Polynomial::from_terms(ring, remainder),
    ))
}

/// Remainder of `f` on full reduction by `basis` (no quotients kept).
pub(crate) fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring();
    let leads: Vec<_> = basis
        .iter()
        .map(|g| {
            let lt = g.leading_term().expect("basis elements are non-zero");
            (lt.mono.clone(), lt.coeff.inv().expect("non-zero lead"))
        })
        .collect();
    let mut remainder = Vec::new();
    let mut p = f.clone();
    while let Some(lt) = p.terms().first() {
        let hit = leads
            .iter()
            .enumerate()
            .find_map(|(i, (m, inv))| lt.mono.div(m).map(|q| (i, q, &lt.coeff * inv)));
        match hit {
            Some((i, q, c)) => p = p.sub_mul_term(&c, &q, &basis[i]),
            None => {
                remainder.push(lt.clone());
                p = p.tail();
            }
        }
    }
    Polynomial::from_terms(ring, remainder)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, FieldKind, MonomialOrder, PolyRing, VariableTable};
    use proptest::prelude::*;
    use std::sync::Arc;

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(
            VariableTable::matrices(2).unwrap(),
            MonomialOrder::grevlex(8),
            FieldKind::Rational,
        )
        .unwrap()
    }

    fn p(s: &str, r: &Arc<PolyRing>) -> Polynomial {
        parse_poly(s, r).unwrap()
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let (q, rem) = multi_divide(&p("x[1,1]^2*y[1,1]", &r), &[p("x[1,1]*y[1,1]", &r)]).unwrap();
        assert_eq!(q[0], p("x[1,1]", &r));
        assert!(rem.is_zero());
    }

    #[test]
    fn no_lead_divides() {
        let r = ring();
        let (q, rem) = multi_divide(&p("y[2,2]", &r), &[p("x[1,1]*y[1,1]", &r)]).unwrap();
        assert!(q[0].is_zero());
        assert_eq!(rem, p("y[2,2]", &r));
    }

    #[test]
    fn constructed_multiple() {
        let r = ring();
        let f11 = p("x[1,1]*y[1,1] + x[1,2]*y[2,1]", &r);
        let f21 = p("x[2,1]*y[1,1] + x[2,2]*y[2,1]", &r);
        let (q, rem) = multi_divide(&(&f11 * &f21), std::slice::from_ref(&f11)).unwrap();
        assert_eq!(q[0], f21);
        assert!(rem.is_zero());
    }

    #[test]
    fn zero_divisor_is_an_error() {
        let r = ring();
        assert!(multi_divide(&p("x[1,1]", &r), &[Polynomial::zero(&r)]).is_err());
    }

    fn arb(r: Arc<PolyRing>, max_terms: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((-3i64..4, prop::collection::vec(0u32..3, 8)), 1..max_terms).prop_map(
            move |ts| {
                let terms = ts
                    .into_iter()
                    .map(|(c, e)| Term::new(r.field().from_i64(c), crate::algebra::Monomial::from_exponents(e)))
                    .collect();
                Polynomial::from_terms(&r, terms)
            },
        )
    }

    proptest! {
        #[test]
        fn division_is_exact(f in arb(ring(), 8), divs in prop::collection::vec(arb(ring(), 4), 1..4)) {
            let divs: Vec<_> = divs.into_iter().filter(|d| !d.is_zero()).collect();
            let (q, rem) = multi_divide(&f, &divs).unwrap();
            let mut back = rem.clone();
            for (qi, di) in q.iter().zip(&divs) {
                back = &back + &(qi * di);
            }
            prop_assert_eq!(back, f);
            for t in rem.terms() {
                for d in &divs {
                    prop_assert!(!d.lead_monomial().unwrap().divides(&t.mono));
                }
            }
        }
    }
}
