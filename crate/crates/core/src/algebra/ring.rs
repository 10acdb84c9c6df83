use std::sync::Arc;

use super::{AlgebraError, FieldKind, MonomialOrder};

/// Which matrix a generic-matrix variable belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatrixVar {
    X,
    Y,
}

/// Variable names and their dense slots.
///
/// Slots `0..n²` hold `x[i,j]` row-major, slots `n²..2n²` hold `y[i,j]`
/// row-major, and any extra named variables follow.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableTable {
    n: usize,
    extra: Vec<String>,
}

impl VariableTable {
    /// The `2n²` variables of two generic `n × n` matrices.
    pub fn matrices(n: usize) -> Result<Self, AlgebraError> {
        if n < 2 {
            return Err(AlgebraError::MatrixSize(n));
        }
        Ok(VariableTable { n, extra: Vec::new() })
    }

    /// A table of plainly named variables with no matrix structure.
    pub fn named<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        VariableTable {
            n: 0,
            extra: names.into_iter().map(Into::into).collect(),
        }
    }

    /// This table with one more named variable appended.
    pub fn with_extra(&self, name: &str) -> Self {
        let mut t = self.clone();
        t.extra.push(name.to_string());
        t
    }

    /// Matrix size; zero for a plain table.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        2 * self.n * self.n + self.extra.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Slot of `x[i,j]` or `y[i,j]` (1-indexed).
    pub fn slot(&self, var: MatrixVar, i: usize, j: usize) -> Result<usize, AlgebraError> {
        let n = self.n;
        if i < 1 || j < 1 || i > n || j > n {
            return Err(AlgebraError::IndexOutOfRange { i, j, n });
        }
        let base = match var {
            MatrixVar::X => 0,
            MatrixVar::Y => n * n,
        };
        Ok(base + (i - 1) * n + (j - 1))
    }

    pub fn extra_slot(&self, name: &str) -> Option<usize> {
        self.extra
            .iter()
            .position(|e| e == name)
            .map(|k| 2 * self.n * self.n + k)
    }

    /// Inverse of [`slot`](Self::slot) for matrix variables.
    pub fn matrix_var(&self, slot: usize) -> Option<(MatrixVar, usize, usize)> {
        let nn = self.n * self.n;
        if slot >= 2 * nn {
            return None;
        }
        let (var, local) = if slot < nn {
            (MatrixVar::X, slot)
        } else {
            (MatrixVar::Y, slot - nn)
        };
        Some((var, local / self.n + 1, local % self.n + 1))
    }

    pub fn name(&self, slot: usize) -> String {
        match self.matrix_var(slot) {
            Some((MatrixVar::X, i, j)) => format!("x[{i},{j}]"),
            Some((MatrixVar::Y, i, j)) => format!("y[{i},{j}]"),
            None => self.extra[slot - 2 * self.n * self.n].clone(),
        }
    }
}

/// A polynomial ring: variables, the monomial order terms are sorted by, and
/// the coefficient field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: VariableTable,
    order: MonomialOrder,
    field: FieldKind,
}

impl PolyRing {
    pub fn new(
        vars: VariableTable,
        order: MonomialOrder,
        field: FieldKind,
    ) -> Result<Arc<Self>, AlgebraError> {
        if vars.len() != order.nvars() {
            return Err(AlgebraError::DimensionMismatch {
                left: vars.len(),
                right: order.nvars(),
            });
        }
        Ok(Arc::new(PolyRing { vars, order, field }))
    }

    pub fn vars(&self) -> &VariableTable {
        &self.vars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Same variables and field under a different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Self>, AlgebraError> {
        PolyRing::new(self.vars.clone(), order, self.field)
    }

    pub fn with_field(&self, field: FieldKind) -> Arc<Self> {
        Arc::new(PolyRing {
            vars: self.vars.clone(),
            order: self.order.clone(),
            field,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slot_map_is_a_bijection() {
        for n in 2..6 {
            let t = VariableTable::matrices(n).unwrap();
            assert_eq!(t.len(), 2 * n * n);
            let mut seen = vec![false; t.len()];
            for var in [MatrixVar::X, MatrixVar::Y] {
                for i in 1..=n {
                    for j in 1..=n {
                        let s = t.slot(var, i, j).unwrap();
                        assert!(!seen[s]);
                        seen[s] = true;
                        assert_eq!(t.matrix_var(s), Some((var, i, j)));
                    }
                }
            }
            assert!(seen.into_iter().all(|b| b));
        }
    }

    #[test]
    fn names_and_errors() {
        let t = VariableTable::matrices(2).unwrap().with_extra("t");
        assert_eq!(t.name(1), "x[1,2]");
        assert_eq!(t.name(6), "y[2,1]");
        assert_eq!(t.name(8), "t");
        assert_eq!(t.extra_slot("t"), Some(8));
        assert!(t.slot(MatrixVar::X, 3, 1).is_err());
        assert!(VariableTable::matrices(1).is_err());
    }
}
