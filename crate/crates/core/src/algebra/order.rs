use std::cmp::Ordering;
use std::fmt;

use super::{AlgebraError, Monomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    Grevlex,
    /// Lexicographic under the diagonal-first precedence used for the
    /// generic-product certification.
    Paper,
    /// Two graded-reverse-lexicographic blocks; the first `split` variables of
    /// the precedence form the eliminated block.
    Block { split: usize },
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderKind::Lex => write!(f, "lex"),
            OrderKind::Grevlex => write!(f, "grevlex"),
            OrderKind::Paper => write!(f, "paper"),
            OrderKind::Block { split } => write!(f, "block:{split}"),
        }
    }
}

/// A monomial order: a kind plus a variable precedence (slots listed from the
/// largest variable to the smallest).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Vec<usize>,
}

impl MonomialOrder {
    /// Builds an order, checking that `precedence` is a permutation of `0..len`.
    pub fn new(kind: OrderKind, precedence: Vec<usize>) -> Result<Self, AlgebraError> {
        let n = precedence.len();
        let mut seen = vec![false; n];
        for &s in &precedence {
            if s >= n || std::mem::replace(&mut seen[s], true) {
                return Err(AlgebraError::BadPrecedence);
            }
        }
        if let OrderKind::Block { split } = kind {
            if split > n {
                return Err(AlgebraError::BadPrecedence);
            }
        }
        Ok(MonomialOrder { kind, precedence })
    }

    /// Lex with slot 0 largest.
    pub fn lex(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            precedence: (0..nvars).collect(),
        }
    }

    /// Grevlex with slot 0 largest.
    pub fn grevlex(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Grevlex,
            precedence: (0..nvars).collect(),
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    /// Compares two monomials. Panics if their lengths differ from the order's.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), self.nvars());
        debug_assert_eq!(b.nvars(), self.nvars());
        match self.kind {
            OrderKind::Lex | OrderKind::Paper => lex_over(&self.precedence, a, b),
            OrderKind::Grevlex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex_over(&self.precedence, a, b)),
            OrderKind::Block { split } => {
                let (head, tail) = self.precedence.split_at(split);
                grevlex_block(head, a, b).then_with(|| grevlex_block(tail, a, b))
            }
        }
    }

    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, AlgebraError> {
        for m in [a, b] {
            if m.nvars() != self.nvars() {
                return Err(AlgebraError::DimensionMismatch {
                    left: self.nvars(),
                    right: m.nvars(),
                });
            }
        }
        Ok(self.compare(a, b))
    }
}

fn lex_over(prec: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    for &v in prec {
        match a.exponent(v).cmp(&b.exponent(v)) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

// Smaller exponent in the last differing variable wins.
fn revlex_over(prec: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    for &v in prec.iter().rev() {
        match a.exponent(v).cmp(&b.exponent(v)) {
            Ordering::Equal => continue,
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

fn grevlex_block(block: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    let deg = |m: &Monomial| block.iter().map(|&v| m.exponent(v)).sum::<u32>();
    deg(a).cmp(&deg(b)).then_with(|| revlex_over(block, a, b))
}
