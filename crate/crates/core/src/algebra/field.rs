//! Coefficient fields: prime fields GF(p) and exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::AlgebraError;

/// Default prime for GF(p) coefficients.
pub const DEFAULT_PRIME: u32 = 32003;

/// Which coefficient domain a ring works over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldKind {
    Prime(u32),
    Rational,
}

impl Default for FieldKind {
    fn default() -> Self {
        FieldKind::Prime(DEFAULT_PRIME)
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldKind {
    /// A prime field, rejecting composite moduli.
    pub fn prime(p: u32) -> Result<Self, AlgebraError> {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(FieldKind::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        match *self {
            FieldKind::Prime(p) => Scalar::Mod { value: 0, prime: p },
            FieldKind::Rational => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            FieldKind::Prime(p) => Scalar::Mod {
                value: v.rem_euclid(p as i64) as u32,
                prime: p,
            },
            FieldKind::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
        }
    }

    /// Embeds the rational `num/den`; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        match *self {
            FieldKind::Prime(p) => {
                let reduce = |v: &BigInt| -> u32 {
                    v.mod_floor(&BigInt::from(p)).to_u32().expect("residue fits in u32")
                };
                let n = Scalar::Mod { value: reduce(num), prime: p };
                let d = Scalar::Mod { value: reduce(den), prime: p };
                let inv = d.inv().ok_or(AlgebraError::DivisionByZero)?;
                Ok(&n * &inv)
            }
            FieldKind::Rational => Ok(Scalar::Rat(BigRational::new(num.clone(), den.clone()))),
        }
    }

    /// Maps a scalar from another domain into this one.
    pub fn convert(&self, s: &Scalar) -> Result<Scalar, AlgebraError> {
        match (self, s) {
            (FieldKind::Prime(p), Scalar::Mod { prime, .. }) if p == prime => Ok(s.clone()),
            (FieldKind::Rational, Scalar::Rat(_)) => Ok(s.clone()),
            (_, Scalar::Rat(r)) => self.from_ratio(r.numer(), r.denom()),
            (FieldKind::Prime(_), Scalar::Mod { .. }) | (FieldKind::Rational, Scalar::Mod { .. }) => {
                Err(AlgebraError::FieldMismatch)
            }
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        matches!(
            (self, s),
            (FieldKind::Prime(p), Scalar::Mod { prime, .. }) if p == prime
        ) || matches!((self, s), (FieldKind::Rational, Scalar::Rat(_)))
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Prime(p) => write!(f, "gfp:{p}"),
            FieldKind::Rational => write!(f, "rat"),
        }
    }
}

impl std::str::FromStr for FieldKind {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rat" => Ok(FieldKind::Rational),
            "gfp" => Ok(FieldKind::default()),
            _ => {
                let p = s
                    .strip_prefix("gfp:")
                    .and_then(|p| p.parse::<u32>().ok())
                    .ok_or_else(|| AlgebraError::UnknownField(s.to_string()))?;
                FieldKind::prime(p)
            }
        }
    }
}

/// A field element. GF(p) values are kept in `[0, p)`; rationals in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod { value: u32, prime: u32 },
    Rat(BigRational),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 1,
            Scalar::Rat(r) => r.is_one(),
        }
    }

    pub fn kind(&self) -> FieldKind {
        match self {
            Scalar::Mod { prime, .. } => FieldKind::Prime(*prime),
            Scalar::Rat(_) => FieldKind::Rational,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Mod { value, prime } => {
                // Extended Euclid over i64.
                let (mut r0, mut r1) = (*prime as i64, *value as i64);
                let (mut t0, mut t1) = (0i64, 1i64);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (t0, t1) = (t1, t0 - q * t1);
                }
                Some(Scalar::Mod {
                    value: t0.rem_euclid(*prime as i64) as u32,
                    prime: *prime,
                })
            }
            Scalar::Rat(r) => Some(Scalar::Rat(r.recip())),
        }
    }

    /// True when the value prints with a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Mod { value, prime } => *value > prime / 2,
            Scalar::Rat(r) => r.is_negative(),
        }
    }
}

fn same_prime(a: u32, b: u32) -> u32 {
    assert_eq!(a, b, "scalars from different prime fields");
    a
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, prime: p }, Scalar::Mod { value: b, prime: q }) => {
                let p = same_prime(*p, *q);
                let s = *a as u64 + *b as u64;
                Scalar::Mod { value: (s % p as u64) as u32, prime: p }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => panic!("mixed coefficient domains"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, prime: p }, Scalar::Mod { value: b, prime: q }) => {
                let p = same_prime(*p, *q);
                let s = *a as u64 * *b as u64;
                Scalar::Mod { value: (s % p as u64) as u32, prime: p }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            _ => panic!("mixed coefficient domains"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Mod { value, prime } => Scalar::Mod {
                value: if *value == 0 { 0 } else { prime - value },
                prime: *prime,
            },
            Scalar::Rat(r) => Scalar::Rat(-r),
        }
    }
}

impl fmt::Display for Scalar {
    /// GF(p) values print in the symmetric range `(-p/2, p/2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod { value, prime } => {
                if self.is_negative() {
                    write!(f, "-{}", prime - value)
                } else {
                    write!(f, "{value}")
                }
            }
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prime_check() {
        assert!(is_prime(2));
        assert!(is_prime(32003));
        assert!(!is_prime(1));
        assert!(!is_prime(32001));
        assert!(FieldKind::prime(12).is_err());
    }

    #[test]
    fn gfp_field_axioms_on_random_triples() {
        let k = FieldKind::Prime(DEFAULT_PRIME);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let [a, b, c] = [0; 3].map(|_| k.from_i64(rng.gen_range(0..DEFAULT_PRIME as i64)));
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            assert!((&a + &(-&a)).is_zero());
            if !a.is_zero() {
                assert!((&a * &a.inv().unwrap()).is_one());
            }
            if let Scalar::Mod { value, .. } = a {
                assert!(value < DEFAULT_PRIME);
            }
        }
    }

    #[test]
    fn rationals_lowest_terms() {
        let q = FieldKind::Rational;
        let a = q.from_ratio(&BigInt::from(4), &BigInt::from(-6)).unwrap();
        match &a {
            Scalar::Rat(r) => {
                assert_eq!(r.numer(), &BigInt::from(-2));
                assert_eq!(r.denom(), &BigInt::from(3));
            }
            _ => unreachable!(),
        }
        assert_eq!(a.to_string(), "-2/3");
        assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn ratio_into_prime_field() {
        let k = FieldKind::Prime(7);
        let half = k.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(half, k.from_i64(4));
        assert!(k.from_ratio(&BigInt::from(1), &BigInt::from(14)).is_err());
        assert_eq!(k.from_i64(-1).to_string(), "-1");
    }

    #[test]
    fn field_kind_parsing() {
        assert_eq!("rat".parse::<FieldKind>().unwrap(), FieldKind::Rational);
        assert_eq!("gfp:101".parse::<FieldKind>().unwrap(), FieldKind::Prime(101));
        assert_eq!(FieldKind::Prime(101).to_string(), "gfp:101");
        assert!("gfp:100".parse::<FieldKind>().is_err());
    }
}
