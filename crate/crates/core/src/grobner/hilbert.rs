//! Hilbert series of graded quotients `K[v_1..v_N]/I`, represented as
//! `h(t)/(1−t)^N`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::buchberger::{buchberger, minimal_monomials, BuchbergerOptions};
use super::GrobnerError;
use crate::algebra::{Monomial, MonomialOrder, Polynomial};

/// Numerator `h(t)` (coefficient of `t^k` at index `k`) over `(1−t)^nvars`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HilbertData {
    pub numerator: Vec<i64>,
    pub nvars: usize,
}

fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    if p.is_empty() {
        p.push(0);
    }
    p
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn one_minus_t_pow(d: u32) -> Vec<i64> {
    let mut p = vec![0i64; d as usize + 1];
    p[0] += 1;
    p[d as usize] -= 1;
    p
}

impl HilbertData {
    /// `Π(1 − t^{dᵢ}) / (1−t)^nvars`, the series of a complete intersection.
    pub fn complete_intersection(degrees: &[u32], nvars: usize) -> Self {
        let numerator = degrees
            .iter()
            .fold(vec![1i64], |acc, &d| poly_mul(&acc, &one_minus_t_pow(d)));
        HilbertData {
            numerator: trim(numerator),
            nvars,
        }
    }

    /// The first `count` coefficients of the expanded series.
    pub fn series(&self, count: usize) -> Vec<i64> {
        // Coefficient k of 1/(1−t)^N is C(N−1+k, N−1).
        let n = self.nvars;
        let mut free = vec![0i64; count];
        if n == 0 {
            if count > 0 {
                free[0] = 1;
            }
        } else {
            let mut c = 1i64;
            for (k, slot) in free.iter_mut().enumerate() {
                *slot = c;
                c = c * (n + k) as i64 / (k + 1) as i64;
            }
        }
        (0..count)
            .map(|k| {
                self.numerator
                    .iter()
                    .enumerate()
                    .take(k + 1)
                    .map(|(i, &h)| h * free[k - i])
                    .sum()
            })
            .collect()
    }

    /// Renders `h(t)` in `t`.
    pub fn numerator_string(&self) -> String {
        let mut out = String::new();
        for (k, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            match (k, mag) {
                (0, m) => out.push_str(&m.to_string()),
                (_, 1) => {}
                (_, m) => out.push_str(&format!("{m}*")),
            }
            match k {
                0 => {}
                1 => out.push('t'),
                _ => out.push_str(&format!("t^{k}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Hilbert numerator of `K[v_1..v_N]/⟨gens⟩` for a monomial ideal, by the
/// pivot recursion `N(⟨m, rest⟩) = N(⟨rest⟩) − t^{deg m}·N(⟨rest⟩ : m)`.
pub fn hilbert_numerator(gens: &[Monomial], nvars: usize) -> HilbertData {
    HilbertData {
        numerator: trim(numerator(minimal_monomials(gens.to_vec()))),
        nvars,
    }
}

fn numerator(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(k, a)| gens[k + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        return gens
            .iter()
            .fold(vec![1], |acc, m| poly_mul(&acc, &one_minus_t_pow(m.degree())));
    }
    let pivot = &gens[0];
    let rest: Vec<Monomial> = gens[1..].to_vec();
    let colon: Vec<Monomial> = rest
        .iter()
        .map(|m| m.div(&m.gcd(pivot)).expect("gcd divides"))
        .collect();
    let a = numerator(rest);
    let b = numerator(minimal_monomials(colon));
    let shift = pivot.degree() as usize;
    let mut out = vec![0i64; a.len().max(b.len() + shift)];
    for (k, &c) in a.iter().enumerate() {
        out[k] += c;
    }
    for (k, &c) in b.iter().enumerate() {
        out[k + shift] -= c;
    }
    out
}

/// Hilbert series of `R/⟨gens⟩` for homogeneous generators, via a Gröbner
/// basis under `order` and the lead-term ideal.
pub fn hilbert_series_quotient(
    gens: &[Polynomial],
    order: &MonomialOrder,
    opts: &BuchbergerOptions,
) -> Result<HilbertData, GrobnerError> {
    let first = gens.first().ok_or(GrobnerError::NoRing)?;
    for (k, g) in gens.iter().enumerate() {
        if !g.is_homogeneous() {
            return Err(GrobnerError::NotHomogeneous(k));
        }
    }
    let ring: Arc<_> = first.ring().with_order(order.clone())?;
    let gb = buchberger(&ring, gens, opts)?;
    Ok(hilbert_numerator(&gb.lead_ideal(), ring.nvars()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(hilbert_numerator(&[], 3).numerator, vec![1]);
        assert_eq!(hilbert_numerator(&[m(&[2])], 1).numerator, vec![1, 0, -1]);
        let both = hilbert_numerator(&[m(&[1, 0]), m(&[0, 1])], 2);
        assert_eq!(both.numerator, vec![1, -2, 1]);
        assert_eq!(both.series(4), vec![1, 0, 0, 0]);
    }

    #[test]
    fn non_coprime_ideal() {
        // <x^2, xy> in K[x,y]: standard monomials 1 | x,y | y^2 | y^3 ...
        let h = hilbert_numerator(&[m(&[2, 0]), m(&[1, 1])], 2);
        assert_eq!(h.series(5), vec![1, 2, 1, 1, 1]);
        assert_eq!(h.numerator_string(), "1 - 2*t^2 + t^3");
    }

    #[test]
    fn complete_intersection_series() {
        let ci = HilbertData::complete_intersection(&[2, 2, 2], 8);
        assert_eq!(&ci.series(3), &[1, 8, 33]);
    }

    #[test]
    fn pivot_independence() {
        let gens = vec![m(&[2, 1, 0]), m(&[0, 2, 1]), m(&[1, 0, 3]), m(&[1, 1, 1])];
        let mut rev = gens.clone();
        rev.reverse();
        assert_eq!(hilbert_numerator(&gens, 3), hilbert_numerator(&rev, 3));
    }
}
