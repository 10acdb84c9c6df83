//! Text form of polynomials.
//!
//! ```text
//! polynomial ::= ['+'|'-'] term (('+'|'-') term)*
//! term       ::= coeff ['*' factor ('*' factor)*] | factor ('*' factor)*
//! factor     ::= ('x'|'y') '[' i ',' j ']' ['^' e] | name ['^' e]
//! coeff      ::= integer | integer '/' integer
//! ```
//!
//! Whitespace is insignificant and matrix indices are 1-based. `name` covers
//! extra variables of the table (for example an elimination variable).

use std::sync::Arc;

use num_bigint::BigInt;

use super::{AlgebraError, MatrixVar, Monomial, PolyRing, Polynomial, Scalar, Term};

pub fn parse_poly(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial, AlgebraError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let terms = p.polynomial()?;
    Ok(Polynomial::from_terms(ring, terms))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, AlgebraError> {
        Err(AlgebraError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), AlgebraError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn integer(&mut self) -> Result<BigInt, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn small(&mut self) -> Result<usize, AlgebraError> {
        let start = self.pos;
        let v = self.integer()?;
        usize::try_from(v).or_else(|_| {
            self.pos = start;
            self.err("integer too large")
        })
    }

    fn polynomial(&mut self) -> Result<Vec<Term>, AlgebraError> {
        let mut terms = Vec::new();
        let mut negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let mut t = self.term()?;
            if negative {
                t.coeff = -&t.coeff;
            }
            terms.push(t);
            match self.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(c) => return self.err(format!("unexpected '{}'", c as char)),
            }
            self.pos += 1;
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<Term, AlgebraError> {
        let field = self.ring.field();
        let nvars = self.ring.nvars();
        let mut mono = Monomial::one(nvars);
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let num = self.integer()?;
            let den = if self.eat(b'/') {
                self.integer()?
            } else {
                BigInt::from(1)
            };
            let at = self.pos;
            let c = field.from_ratio(&num, &den).map_err(|e| match e {
                AlgebraError::DivisionByZero => AlgebraError::Parse {
                    pos: at,
                    msg: "denominator vanishes in the coefficient field".into(),
                },
                e => e,
            })?;
            if !self.eat(b'*') {
                return Ok(Term::new(c, mono));
            }
            c
        } else {
            field.one()
        };
        loop {
            mono = mono.mul(&self.factor()?);
            if !self.eat(b'*') {
                break;
            }
        }
        Ok(Term::new(coeff, mono))
    }

    fn factor(&mut self) -> Result<Monomial, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            if self.pos == start && self.src[self.pos].is_ascii_digit() {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected variable");
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string();
        let vars = self.ring.vars();
        let slot = if (name == "x" || name == "y") && self.peek() == Some(b'[') {
            self.expect(b'[')?;
            let i = self.small()?;
            self.expect(b',')?;
            let j = self.small()?;
            self.expect(b']')?;
            let var = if name == "x" { MatrixVar::X } else { MatrixVar::Y };
            vars.slot(var, i, j)?
        } else {
            vars.extra_slot(&name)
                .ok_or(AlgebraError::UnknownVariable(name))?
        };
        let e = if self.eat(b'^') { self.small()? as u32 } else { 1 };
        Ok(Monomial::var_power(self.ring.nvars(), slot, e))
    }
}

fn format_monomial(m: &Monomial, ring: &PolyRing) -> String {
    let mut parts = Vec::new();
    for slot in m.support() {
        let name = ring.vars().name(slot);
        match m.exponent(slot) {
            1 => parts.push(name),
            e => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

/// Renders a monomial with the ring's variable names.
pub fn format_monomial_in(m: &Monomial, ring: &PolyRing) -> String {
    if m.is_one() {
        "1".to_string()
    } else {
        format_monomial(m, ring)
    }
}

pub fn format_poly(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, t) in p.terms().iter().enumerate() {
        let negative = t.coeff.is_negative();
        let magnitude: Scalar = if negative { -&t.coeff } else { t.coeff.clone() };
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if t.mono.is_one() {
            out.push_str(&magnitude.to_string());
        } else {
            if !magnitude.is_one() {
                out.push_str(&magnitude.to_string());
                out.push('*');
            }
            out.push_str(&format_monomial(&t.mono, p.ring()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FieldKind, MonomialOrder, VariableTable};
    use proptest::prelude::*;

    fn ring(n: usize, field: FieldKind) -> Arc<PolyRing> {
        let vars = VariableTable::matrices(n).unwrap();
        let len = vars.len();
        PolyRing::new(vars, MonomialOrder::grevlex(len), field).unwrap()
    }

    #[test]
    fn parses_f11() {
        let r = ring(2, FieldKind::Rational);
        let p = parse_poly("x[1,1]*y[1,1] + x[1,2]*y[2,1]", &r).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(format_poly(&p), "x[1,1]*y[1,1] + x[1,2]*y[2,1]");
        assert!(parse_poly("0", &r).unwrap().is_zero());
    }

    #[test]
    fn coefficients_and_powers() {
        let r = ring(2, FieldKind::Rational);
        let p = parse_poly(" -3/6 * x[1,1]^2*y[2,2] + 2 - x[2,1]", &r).unwrap();
        assert_eq!(format_poly(&p), "-1/2*x[1,1]^2*y[2,2] - x[2,1] + 2");
    }

    #[test]
    fn errors() {
        let r = ring(2, FieldKind::default());
        assert!(matches!(
            parse_poly("x[3,1]", &r),
            Err(AlgebraError::IndexOutOfRange { i: 3, j: 1, n: 2 })
        ));
        assert!(matches!(
            parse_poly("z[1,1]", &r),
            Err(AlgebraError::UnknownVariable(_))
        ));
        match parse_poly("x[1,1] + * y[1,1]", &r) {
            Err(AlgebraError::Parse { pos, .. }) => assert_eq!(pos, 9),
            other => panic!("{other:?}"),
        }
        assert!(parse_poly("x[1,1", &r).is_err());
        assert!(parse_poly("", &r).is_err());
        assert!(parse_poly("1/32003*x[1,1]", &r).is_err());
    }

    #[test]
    fn extra_variable_names() {
        let vars = VariableTable::matrices(2).unwrap().with_extra("t");
        let r = PolyRing::new(vars, MonomialOrder::lex(9), FieldKind::default()).unwrap();
        let p = parse_poly("t*x[1,1] - x[1,1]", &r).unwrap();
        assert_eq!(format_poly(&p), "x[1,1]*t - x[1,1]");
    }

    fn arb_poly(field: FieldKind) -> impl Strategy<Value = Polynomial> {
        let r = ring(2, field);
        prop::collection::vec((-20i64..20, 1i64..5, prop::collection::vec(0u32..3, 8)), 0..6)
            .prop_map(move |ts| {
                let terms = ts
                    .into_iter()
                    .map(|(num, den, e)| {
                        let c = r
                            .field()
                            .from_ratio(&BigInt::from(num), &BigInt::from(den))
                            .unwrap();
                        Term::new(c, Monomial::from_exponents(e))
                    })
                    .collect();
                Polynomial::from_terms(&r, terms)
            })
    }

    proptest! {
        #[test]
        fn format_parse_round_trip_rational(p in arb_poly(FieldKind::Rational)) {
            prop_assert!(p.is_canonical());
            let back = parse_poly(&format_poly(&p), p.ring()).unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn format_parse_round_trip_gfp(p in arb_poly(FieldKind::Prime(101))) {
            let back = parse_poly(&format_poly(&p), p.ring()).unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn arithmetic_stays_canonical(p in arb_poly(FieldKind::Rational), q in arb_poly(FieldKind::Rational)) {
            for r in [&p + &q, &p - &q, &p * &q, -&p, p.scale(&FieldKind::Rational.from_i64(-3))] {
                prop_assert!(r.is_canonical());
            }
            prop_assert_eq!(&(&p + &q) - &q, p.clone());
            prop_assert_eq!(&p * &q, &q * &p);
        }
    }
}
