use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::division::reduce;
use super::GrobnerError;
use crate::algebra::{AlgebraError, Monomial, PolyRing, Polynomial};

/// How the next critical pair is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum PairStrategy {
    /// Smallest lcm degree, ties by smallest `(i, j)`.
    #[default]
    Normal,
    /// Creation order.
    Fifo,
    /// Smallest sugar degree, then as `Normal`.
    Sugar,
}

/// Resource limits for a Buchberger run. `None` means unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Budget {
    pub max_pairs: Option<usize>,
    pub max_degree: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BuchbergerOptions {
    pub strategy: PairStrategy,
    pub budget: Budget,
}

/// Counters from a Buchberger run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BuchbergerStats {
    pub pairs_selected: usize,
    pub coprime_skips: usize,
    pub chain_skips: usize,
    pub zero_reductions: usize,
}

/// A Gröbner basis: monic generators under the ring's order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// True when the basis generates the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.gens.iter().any(|g| g.terms().len() == 1 && g.terms()[0].mono.is_one())
    }

    /// The unique remainder of `f` modulo this basis; zero iff `f` is in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, AlgebraError> {
        let f = f.to_ring(&self.ring)?;
        Ok(reduce(&f, &self.gens))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, AlgebraError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Minimal generators of the leading-term ideal.
    pub fn lead_ideal(&self) -> Vec<Monomial> {
        minimal_monomials(
            self.gens
                .iter()
                .map(|g| g.lead_monomial().expect("non-zero").clone())
                .collect(),
        )
    }

    /// Checks the Buchberger criterion: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        for i in 0..self.gens.len() {
            for j in i + 1..self.gens.len() {
                let s = s_poly(&self.gens[i], &self.gens[j]).expect("non-zero");
                if !reduce(&s, &self.gens).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Removes duplicates and monomials divisible by another in the list,
/// keeping first occurrences.
pub(crate) fn minimal_monomials(monos: Vec<Monomial>) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::with_capacity(monos.len());
    for (k, m) in monos.iter().enumerate() {
        let redundant = monos.iter().enumerate().any(|(l, o)| {
            l != k && o.divides(m) && (o != m || l < k)
        });
        if !redundant {
            out.push(m.clone());
        }
    }
    out
}

/// `(L/Lt(f))·f − (L/Lt(g))·g` with `L = lcm(Lm f, Lm g)`, both leads made monic.
pub fn s_poly(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, AlgebraError> {
    let lf = f.leading_term()?;
    let lg = g.leading_term()?;
    let l = lf.mono.lcm(&lg.mono);
    let cf = lf.coeff.inv().expect("non-zero lead");
    let cg = lg.coeff.inv().expect("non-zero lead");
    let left = f.mul_term(&cf, &l.div(&lf.mono).unwrap());
    Ok(left.sub_mul_term(&cg, &l.div(&lg.mono).unwrap(), g))
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
    seq: usize,
}

/// Buchberger's algorithm with the coprime-lead and chain criteria.
///
/// Generators are converted into `ring` first (so a different order can be
/// requested by passing a ring with that order). Zero generators are ignored;
/// an empty generator list yields the empty basis of the zero ideal. The
/// returned basis is reduced.
pub fn buchberger(
    ring: &Arc<PolyRing>,
    gens: &[Polynomial],
    opts: &BuchbergerOptions,
) -> Result<GroebnerBasis, GrobnerError> {
    buchberger_with_stats(ring, gens, opts).map(|(gb, _)| gb)
}

pub fn buchberger_with_stats(
    ring: &Arc<PolyRing>,
    gens: &[Polynomial],
    opts: &BuchbergerOptions,
) -> Result<(GroebnerBasis, BuchbergerStats), GrobnerError> {
    let mut stats = BuchbergerStats::default();
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut pending: Vec<Pair> = Vec::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();
    let mut seq = 0usize;

    let mut add = |h: Polynomial,
                   s: u32,
                   basis: &mut Vec<Polynomial>,
                   sugar: &mut Vec<u32>,
                   pending: &mut Vec<Pair>,
                   pending_set: &mut HashSet<(usize, usize)>| {
        let j = basis.len();
        let lm = h.lead_monomial().expect("non-zero").clone();
        for (i, g) in basis.iter().enumerate() {
            let gm = g.lead_monomial().expect("non-zero");
            let lcm = gm.lcm(&lm);
            let ps = (sugar[i] + lcm.degree() - gm.degree()).max(s + lcm.degree() - lm.degree());
            pending.push(Pair { i, j, lcm, sugar: ps, seq });
            pending_set.insert((i, j));
            seq += 1;
        }
        basis.push(h);
        sugar.push(s);
    };

    for g in gens {
        let g = g.to_ring(ring)?;
        if g.is_zero() {
            continue;
        }
        if g.lead_monomial()?.is_one() {
            return Ok((unit_basis(ring), stats));
        }
        let s = g.degree().unwrap();
        add(g.monic(), s, &mut basis, &mut sugar, &mut pending, &mut pending_set);
    }

    while let Some(k) = select(&pending, opts.strategy) {
        let pair = pending.swap_remove(k);
        pending_set.remove(&(pair.i, pair.j));
        stats.pairs_selected += 1;
        if let Some(max) = opts.budget.max_pairs {
            if stats.pairs_selected > max {
                return Err(GrobnerError::Budget {
                    pairs: stats.pairs_selected - 1,
                    degree: pair.lcm.degree(),
                    basis_len: basis.len(),
                });
            }
        }
        if let Some(max) = opts.budget.max_degree {
            if pair.lcm.degree() > max {
                return Err(GrobnerError::Budget {
                    pairs: stats.pairs_selected - 1,
                    degree: pair.lcm.degree(),
                    basis_len: basis.len(),
                });
            }
        }

        let lm_i = basis[pair.i].lead_monomial()?;
        let lm_j = basis[pair.j].lead_monomial()?;
        if lm_i.is_coprime(lm_j) {
            stats.coprime_skips += 1;
            continue;
        }
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && !pending_set.contains(&key(pair.i, k))
                && !pending_set.contains(&key(pair.j, k))
                && basis[k].lead_monomial().expect("non-zero").divides(&pair.lcm)
        });
        if chain {
            stats.chain_skips += 1;
            continue;
        }

        let s = s_poly(&basis[pair.i], &basis[pair.j])?;
        let r = reduce(&s, &basis);
        if r.is_zero() {
            stats.zero_reductions += 1;
            continue;
        }
        if r.lead_monomial()?.is_one() {
            return Ok((unit_basis(ring), stats));
        }
        add(r.monic(), pair.sugar, &mut basis, &mut sugar, &mut pending, &mut pending_set);
    }

    let gb = GroebnerBasis {
        ring: ring.clone(),
        gens: basis,
        reduced: false,
    };
    Ok((reduce_basis(&gb), stats))
}

fn unit_basis(ring: &Arc<PolyRing>) -> GroebnerBasis {
    GroebnerBasis {
        ring: ring.clone(),
        gens: vec![Polynomial::one(ring)],
        reduced: true,
    }
}

fn select(pending: &[Pair], strategy: PairStrategy) -> Option<usize> {
    let idx = pending.iter().enumerate();
    let best = match strategy {
        PairStrategy::Normal => idx.min_by_key(|(_, p)| (p.lcm.degree(), p.i, p.j)),
        PairStrategy::Fifo => idx.min_by_key(|(_, p)| p.seq),
        PairStrategy::Sugar => idx.min_by_key(|(_, p)| (p.sugar, p.lcm.degree(), p.i, p.j)),
    };
    best.map(|(k, _)| k)
}

/// The unique reduced Gröbner basis of the ideal spanned by a
/// Buchberger-complete basis. Generators come out monic and sorted by
/// descending leading monomial.
pub fn reduce_basis(gb: &GroebnerBasis) -> GroebnerBasis {
    let monic: Vec<Polynomial> = gb.gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    let leads: Vec<Monomial> = monic
        .iter()
        .map(|g| g.lead_monomial().unwrap().clone())
        .collect();
    let minimal: Vec<Polynomial> = monic
        .iter()
        .enumerate()
        .filter(|(k, _)| {
            !leads.iter().enumerate().any(|(l, o)| {
                l != *k && o.divides(&leads[*k]) && (o != &leads[*k] || l < *k)
            })
        })
        .map(|(_, g)| g.clone())
        .collect();

    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(l, _)| *l != k)
                .map(|(_, g)| g.clone())
                .collect();
            reduce(&minimal[k], &others).monic()
        })
        .collect();
    let order = gb.ring.order();
    reduced.sort_by(|a, b| {
        order.compare(b.lead_monomial().unwrap(), a.lead_monomial().unwrap())
    });
    GroebnerBasis {
        ring: gb.ring.clone(),
        gens: reduced,
        reduced: true,
    }
}
