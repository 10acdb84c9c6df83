use std::fmt;

use super::AlgebraError;

/// A monomial as a dense exponent vector, one slot per ring variable.
///
/// The total degree is cached so graded comparisons can short-circuit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
    degree: u32,
}

impl Monomial {
    /// The monomial `1` in a ring with `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars].into_boxed_slice(),
            degree: 0,
        }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial {
            exps: exps.into_boxed_slice(),
            degree,
        }
    }

    /// The power `var^e` of a single variable slot.
    pub fn var_power(nvars: usize, slot: usize, e: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[slot] = e;
        Monomial::from_exponents(exps)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn exponent(&self, slot: usize) -> u32 {
        self.exps[slot]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Slots with a non-zero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "monomials from different rings");
        Monomial::from_exponents(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
        )
    }

    fn check_dims(&self, other: &Monomial) -> Result<(), AlgebraError> {
        if self.nvars() != other.nvars() {
            return Err(AlgebraError::DimensionMismatch {
                left: self.nvars(),
                right: other.nvars(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::min)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::max)
    }

    pub fn try_gcd(&self, other: &Monomial) -> Result<Monomial, AlgebraError> {
        self.check_dims(other)?;
        Ok(self.gcd(other))
    }

    pub fn try_lcm(&self, other: &Monomial) -> Result<Monomial, AlgebraError> {
        self.check_dims(other)?;
        Ok(self.lcm(other))
    }

    /// True when no variable occurs in both monomials.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.degree <= other.degree
            && self
                .exps
                .iter()
                .zip(other.exps.iter())
                .all(|(&a, &b)| a <= b)
    }

    /// `self / divisor`, or `None` if the division is not exact.
    pub fn div(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        Some(self.zip_with(divisor, |a, b| a - b))
    }

    /// Exponent vector extended or truncated to `nvars` slots; truncation
    /// requires the dropped slots to be zero.
    pub fn resized(&self, nvars: usize) -> Option<Monomial> {
        if nvars < self.nvars() && self.exps[nvars..].iter().any(|&e| e > 0) {
            return None;
        }
        let mut exps = self.exps.to_vec();
        exps.resize(nvars, 0);
        Some(Monomial::from_exponents(exps))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "v{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
