use std::sync::Arc;

use itertools::Itertools;
use matprod_regseq::algebra::{
    parse_poly, FieldKind, Monomial, MonomialOrder, PolyRing, Polynomial, Term, VariableTable,
};
use matprod_regseq::grobner::{
    buchberger, buchberger_with_stats, hilbert_numerator, hilbert_series_quotient, multi_divide,
    s_poly, BuchbergerOptions, Budget, GrobnerError, PairStrategy,
};
use matprod_regseq::xypattern::{matrix_ring, GenericProduct, OrderChoice};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn plain_ring(nv: usize, order: MonomialOrder, field: FieldKind) -> Arc<PolyRing> {
    let names: Vec<String> = (0..nv).map(|k| format!("v{k}")).collect();
    PolyRing::new(VariableTable::named(names), order, field).unwrap()
}

fn random_homogeneous(ring: &Arc<PolyRing>, deg: u32, terms: usize, rng: &mut ChaCha8Rng) -> Polynomial {
    let nv = ring.nvars();
    let field = ring.field();
    let ts = (0..terms)
        .map(|_| {
            let mut e = vec![0u32; nv];
            for _ in 0..deg {
                e[rng.gen_range(0..nv)] += 1;
            }
            Term::new(field.from_i64(rng.gen_range(-9..10)), Monomial::from_exponents(e))
        })
        .collect();
    Polynomial::from_terms(ring, ts)
}

fn test_ideals() -> Vec<(Arc<PolyRing>, Vec<Polynomial>)> {
    let mut out = Vec::new();
    let xy = PolyRing::new(VariableTable::named(["x", "y"]), MonomialOrder::lex(2), FieldKind::Rational).unwrap();
    out.push((xy.clone(), vec![parse_poly("x - y", &xy).unwrap(), parse_poly("y^2", &xy).unwrap()]));
    for order in [OrderChoice::Paper, OrderChoice::Grevlex, OrderChoice::Lex] {
        let ring = matrix_ring(2, order, FieldKind::default()).unwrap();
        let g = GenericProduct::new(&ring).unwrap();
        out.push((ring.clone(), vec![g.entry(1, 1).unwrap(), g.entry(2, 1).unwrap()]));
        out.push((
            ring.clone(),
            vec![g.entry(1, 1).unwrap(), g.entry(1, 2).unwrap(), g.entry(2, 1).unwrap()],
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..6 {
        let ring = plain_ring(3, MonomialOrder::grevlex(3), FieldKind::prime(101).unwrap());
        let gens = (0..3).map(|_| random_homogeneous(&ring, 2, 3, &mut rng)).collect();
        out.push((ring, gens));
    }
    out
}

#[test]
fn every_s_pair_reduces_to_zero() {
    for (ring, gens) in test_ideals() {
        let gb = buchberger(&ring, &gens, &BuchbergerOptions::default()).unwrap();
        assert!(gb.is_reduced());
        for (a, b) in gb.gens().iter().tuple_combinations() {
            let (_, r) = multi_divide(&s_poly(a, b).unwrap(), gb.gens()).unwrap();
            assert!(r.is_zero());
        }
        for g in &gens {
            assert!(gb.contains(g).unwrap());
        }
    }
}

#[test]
fn reduced_basis_independent_of_strategy_and_input_order() {
    for (ring, gens) in test_ideals() {
        let reference = buchberger(&ring, &gens, &BuchbergerOptions::default()).unwrap();
        for strategy in [PairStrategy::Normal, PairStrategy::Fifo, PairStrategy::Sugar] {
            for perm in gens.iter().cloned().permutations(gens.len()) {
                let opts = BuchbergerOptions { strategy, budget: Budget::default() };
                assert_eq!(buchberger(&ring, &perm, &opts).unwrap().gens(), reference.gens());
            }
        }
    }
}

#[test]
fn small_hand_bases() {
    let xy = PolyRing::new(VariableTable::named(["x", "y"]), MonomialOrder::lex(2), FieldKind::Rational).unwrap();
    let p = |s| parse_poly(s, &xy).unwrap();
    let gb = buchberger(&xy, &[p("x - y"), p("y^2")], &BuchbergerOptions::default()).unwrap();
    assert_eq!(gb.gens(), [p("x - y"), p("y^2")]);
    let gb = buchberger(&xy, &[p("x^2"), p("x*y + y^2")], &BuchbergerOptions::default()).unwrap();
    // x^2, xy + y^2 → the S-polynomial contributes y^3
    assert_eq!(gb.gens(), [p("x^2"), p("x*y + y^2"), p("y^3")]);

    // column one is already a basis under the certification order
    let ring = matrix_ring(3, OrderChoice::Paper, FieldKind::default()).unwrap();
    let g = GenericProduct::new(&ring).unwrap();
    let col: Vec<_> = (1..=3).map(|i| g.entry(i, 1).unwrap()).collect();
    let gb = buchberger(&ring, &col, &BuchbergerOptions::default()).unwrap();
    assert_eq!(gb.len(), 3);
    for c in &col {
        assert!(gb.gens().contains(&c.monic()));
    }
}

#[test]
fn prefix_ideal_basis_sizes_and_normal_forms() {
    let ring = matrix_ring(2, OrderChoice::Paper, FieldKind::Rational).unwrap();
    let g = GenericProduct::new(&ring).unwrap();
    let gens = [g.entry(1, 1).unwrap(), g.entry(1, 2).unwrap(), g.entry(2, 1).unwrap()];
    let gb = buchberger(&ring, &gens, &BuchbergerOptions::default()).unwrap();
    assert_eq!(gb.lead_ideal().len(), 4);
    let p = |s| parse_poly(s, &ring).unwrap();
    assert!(!gb.normal_form(&p("x[2,1]*y[1,2]")).unwrap().is_zero());
    assert!(!gb.normal_form(&p("x[1,2]*y[1,1]")).unwrap().is_zero());
    let f22 = g.entry(2, 2).unwrap();
    assert!(gb.contains(&(&p("x[1,2]*y[1,1]") * &f22)).unwrap());
}

#[test]
fn membership_is_sound_both_ways() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..25 {
        let ring = plain_ring(4, MonomialOrder::grevlex(4), FieldKind::prime(32003).unwrap());
        let gens: Vec<_> = (0..3).map(|_| random_homogeneous(&ring, 2, 3, &mut rng)).collect();
        let gb = buchberger(&ring, &gens, &BuchbergerOptions::default()).unwrap();
        // explicit combination Σ cᵢ·gᵢ with random polynomial cofactors
        let member = gens.iter().fold(Polynomial::zero(&ring), |acc, g| {
            let c = random_homogeneous(&ring, 1, 2, &mut rng);
            &acc + &(&c * g)
        });
        assert!(gb.contains(&member).unwrap());
        // generated in degree 2, so no non-zero linear form is a member
        let linear = random_homogeneous(&ring, 1, 3, &mut rng);
        if !linear.is_zero() && !gb.is_unit_ideal() {
            assert!(!gb.contains(&linear).unwrap());
        }
    }
}

#[test]
fn budgets_stop_with_an_error() {
    let ring = matrix_ring(2, OrderChoice::Grevlex, FieldKind::default()).unwrap();
    let g = GenericProduct::new(&ring).unwrap();
    let gens: Vec<_> = g.entries().into_iter().map(|(_, p)| p).collect();
    let tight = BuchbergerOptions {
        budget: Budget { max_pairs: Some(1), max_degree: None },
        ..Default::default()
    };
    assert!(matches!(buchberger(&ring, &gens, &tight), Err(GrobnerError::Budget { .. })));
    let shallow = BuchbergerOptions {
        budget: Budget { max_pairs: None, max_degree: Some(2) },
        ..Default::default()
    };
    assert!(matches!(buchberger(&ring, &gens, &shallow), Err(GrobnerError::Budget { .. })));
    let (_, stats) = buchberger_with_stats(&ring, &gens, &BuchbergerOptions::default()).unwrap();
    assert!(stats.pairs_selected > 1);
}

fn brute_force_counts(gens: &[Monomial], nv: usize, max_deg: usize) -> Vec<i64> {
    (0..=max_deg)
        .map(|d| {
            (0..nv)
                .combinations_with_replacement(d)
                .filter(|vars| {
                    let mut e = vec![0u32; nv];
                    for &v in vars {
                        e[v] += 1;
                    }
                    let m = Monomial::from_exponents(e);
                    !gens.iter().any(|g| g.divides(&m))
                })
                .count() as i64
        })
        .collect()
}

#[test]
fn hilbert_matches_standard_monomial_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..40 {
        let nv = rng.gen_range(1..=5);
        let gens: Vec<Monomial> = (0..rng.gen_range(0..=6))
            .map(|_| {
                let mut e = vec![0u32; nv];
                for _ in 0..rng.gen_range(1..=4) {
                    e[rng.gen_range(0..nv)] += 1;
                }
                Monomial::from_exponents(e)
            })
            .collect();
        let h = hilbert_numerator(&gens, nv);
        assert_eq!(h.series(7), brute_force_counts(&gens, nv, 6), "{gens:?}");
        let mut rev = gens.clone();
        rev.reverse();
        assert_eq!(hilbert_numerator(&rev, nv), h);
    }
}

#[test]
fn quotient_series_examples() {
    let ring = matrix_ring(2, OrderChoice::Paper, FieldKind::default()).unwrap();
    let g = GenericProduct::new(&ring).unwrap();
    let grevlex = MonomialOrder::grevlex(8);
    let x11 = [g.x(1, 1).unwrap()];
    let h = hilbert_series_quotient(&x11, &grevlex, &BuchbergerOptions::default()).unwrap();
    assert_eq!(h.numerator, vec![1, -1]);
    assert_eq!(h.nvars, 8);
    let f = [g.entry(1, 1).unwrap(), g.entry(2, 1).unwrap(), g.entry(1, 2).unwrap()];
    let a = hilbert_series_quotient(&f, &grevlex, &BuchbergerOptions::default()).unwrap();
    let b = hilbert_series_quotient(&[f[2].clone(), f[0].clone(), f[1].clone()], ring.order(), &BuchbergerOptions::default())
        .unwrap();
    assert_eq!(a, b);
    assert_eq!(&a.series(3), &[1, 8, 33]);
    let bad = [parse_poly("x[1,1]^2 + y[1,1]", &ring).unwrap()];
    assert_eq!(
        hilbert_series_quotient(&bad, &grevlex, &BuchbergerOptions::default()).unwrap_err(),
        GrobnerError::NotHomogeneous(0)
    );
}
