use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{
    AlgebraError, FieldKind, MatrixVar, Monomial, MonomialOrder, OrderKind, PolyRing, Polynomial,
    VariableTable,
};

/// The variable table of `K[x_ij, y_ij]` for `n × n` generic matrices.
pub fn build_ring(n: usize) -> Result<VariableTable, AlgebraError> {
    VariableTable::matrices(n)
}

/// The certification order: lex with the diagonal `x11 > … > xnn` first, then
/// each superdiagonal `x[1,1+d] > x[2,2+d] > …` for `d = 1..n−1`, then the
/// subdiagonal `x[i,j]` (`i > j`) row-major, then every `y[k,l]` row-major.
pub fn paper_order(n: usize) -> Result<MonomialOrder, AlgebraError> {
    let vars = build_ring(n)?;
    let x = |i, j| vars.slot(MatrixVar::X, i, j).expect("in range");
    let mut prec = Vec::with_capacity(vars.len());
    for d in 0..n {
        for i in 1..=n - d {
            prec.push(x(i, i + d));
        }
    }
    for i in 1..=n {
        for j in 1..i {
            prec.push(x(i, j));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            prec.push(vars.slot(MatrixVar::Y, i, j).expect("in range"));
        }
    }
    MonomialOrder::new(OrderKind::Paper, prec)
}

/// Order selector used by the command line and the certificate format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderChoice {
    #[default]
    Paper,
    Grevlex,
    Lex,
}

impl OrderChoice {
    pub fn order(&self, n: usize) -> Result<MonomialOrder, AlgebraError> {
        let nvars = build_ring(n)?.len();
        Ok(match self {
            OrderChoice::Paper => paper_order(n)?,
            OrderChoice::Grevlex => MonomialOrder::grevlex(nvars),
            OrderChoice::Lex => MonomialOrder::lex(nvars),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            OrderChoice::Paper => "paper",
            OrderChoice::Grevlex => "grevlex",
            OrderChoice::Lex => "lex",
        }
    }
}

impl std::str::FromStr for OrderChoice {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "paper" => Ok(OrderChoice::Paper),
            "grevlex" => Ok(OrderChoice::Grevlex),
            "lex" => Ok(OrderChoice::Lex),
            _ => Err(format!("unknown order '{s}'")),
        }
    }
}

/// `K[x_ij, y_ij]` under the chosen order and field.
pub fn matrix_ring(
    n: usize,
    order: OrderChoice,
    field: FieldKind,
) -> Result<Arc<PolyRing>, AlgebraError> {
    PolyRing::new(build_ring(n)?, order.order(n)?, field)
}

/// The entries `f_ij = Σ_k x_ik·y_kj` of the product `XY`.
#[derive(Debug, Clone)]
pub struct GenericProduct {
    ring: Arc<PolyRing>,
    n: usize,
}

impl GenericProduct {
    pub fn new(ring: &Arc<PolyRing>) -> Result<Self, AlgebraError> {
        let n = ring.vars().n();
        if n < 2 {
            return Err(AlgebraError::MatrixSize(n));
        }
        Ok(GenericProduct {
            ring: ring.clone(),
            n,
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn var_monomial(&self, var: MatrixVar, i: usize, j: usize) -> Result<Monomial, AlgebraError> {
        let slot = self.ring.vars().slot(var, i, j)?;
        Ok(Monomial::var_power(self.ring.nvars(), slot, 1))
    }

    pub fn x(&self, i: usize, j: usize) -> Result<Polynomial, AlgebraError> {
        Ok(Polynomial::monomial(&self.ring, self.var_monomial(MatrixVar::X, i, j)?))
    }

    pub fn y(&self, i: usize, j: usize) -> Result<Polynomial, AlgebraError> {
        Ok(Polynomial::monomial(&self.ring, self.var_monomial(MatrixVar::Y, i, j)?))
    }

    /// `f_ij`.
    pub fn entry(&self, i: usize, j: usize) -> Result<Polynomial, AlgebraError> {
        let vars = self.ring.vars();
        vars.slot(MatrixVar::X, i, j)?;
        let mut acc = Polynomial::zero(&self.ring);
        for k in 1..=self.n {
            let m = self
                .var_monomial(MatrixVar::X, i, k)?
                .mul(&self.var_monomial(MatrixVar::Y, k, j)?);
            acc = &acc + &Polynomial::monomial(&self.ring, m);
        }
        Ok(acc)
    }

    /// All `n²` entries in row-major order.
    pub fn entries(&self) -> Vec<((usize, usize), Polynomial)> {
        let mut out = Vec::with_capacity(self.n * self.n);
        for i in 1..=self.n {
            for j in 1..=self.n {
                out.push(((i, j), self.entry(i, j).expect("in range")));
            }
        }
        out
    }
}
