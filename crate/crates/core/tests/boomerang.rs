mod common;

use cbu::boomerang::{
    applicable_bound, bct_entry, bct_entry_permutation_form, ddt_entry, is_permutation, uniformity, BctTable,
};
use cbu::dickson::dickson;
use cbu::{Elt, FieldCtx, UniPoly};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn ddt_rows_sum_to_q() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for (p, n) in [(5, 1), (7, 1), (2, 3), (3, 2), (11, 1)] {
        let ctx = FieldCtx::with_degree(p, n).unwrap();
        for _ in 0..5 {
            let f = random_poly(&ctx, rng.gen_range(1..7), &mut rng);
            for a in ctx.elements() {
                let total: usize = ctx.elements().map(|b| ddt_entry(&f, a, b).unwrap()).sum();
                assert_eq!(total as u64, ctx.order());
            }
        }
    }
}

#[test]
fn fast_table_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (p, n) in [(5, 1), (7, 1), (2, 2), (2, 3), (3, 2)] {
        let ctx = FieldCtx::with_degree(p, n).unwrap();
        for _ in 0..3 {
            let f = random_poly(&ctx, rng.gen_range(1..6), &mut rng);
            let c = random_nonzero(&ctx, &mut rng);
            let table = BctTable::compute(&f, c, true).unwrap();
            for a in ctx.elements() {
                for b in ctx.elements() {
                    assert_eq!(table.entry(a, b).unwrap() as usize, bct_entry(&f, c, a, b).unwrap());
                }
            }
            let rep = uniformity(&f, c).unwrap();
            let brute = ctx
                .nonzero_elements()
                .flat_map(|a| ctx.nonzero_elements().map(move |b| (a, b)))
                .map(|(a, b)| bct_entry(&f, c, a, b).unwrap())
                .max()
                .unwrap();
            assert_eq!(rep.beta, brute);
        }
    }
}

#[test]
fn uniformity_respects_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut fields: Vec<FieldCtx> = [2, 3, 5, 7, 11, 13, 17].iter().map(|&p| FieldCtx::prime(p).unwrap()).collect();
    fields.push(FieldCtx::with_degree(2, 4).unwrap());
    for ctx in &fields {
        let q = ctx.order();
        let degrees: Vec<usize> = (3..=8).filter(|&d| cbu_gcd(d as u64, q) == 1).collect();
        for _ in 0..200 {
            let d = degrees[rng.gen_range(0..degrees.len())];
            let f = random_poly(ctx, d, &mut rng);
            for c in ctx.nonzero_elements() {
                let (bound, _) = applicable_bound(d as u64, c, ctx).unwrap();
                let rep = uniformity(&f, c).unwrap();
                assert!(rep.beta as u64 <= bound, "{f} over {} with c = {c:?}: {} > {bound}", ctx.describe(), rep.beta);
                assert_eq!(rep.pass, Some(true));
            }
        }
    }
}

fn cbu_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        cbu_gcd(b, a % b)
    }
}

#[test]
fn binary_entries_are_even_for_c_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for n in 1..=6 {
        let ctx = FieldCtx::with_degree(2, n).unwrap();
        for _ in 0..10 {
            let f = random_poly(&ctx, rng.gen_range(1..10), &mut rng);
            let table = BctTable::compute(&f, Elt::ONE, false).unwrap();
            for row in &table.counts {
                assert!(row[1..].iter().all(|n| n % 2 == 0), "{f} over {}", ctx.describe());
            }
        }
    }
}

#[test]
fn permutation_form_agrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for (p, n) in [(5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (17, 1)] {
        let ctx = FieldCtx::with_degree(p, n).unwrap();
        for _ in 0..4 {
            let f = random_permutation(&ctx, &mut rng);
            assert!(is_permutation(&f), "{f}");
            let c = random_nonzero(&ctx, &mut rng);
            for a in ctx.elements() {
                for b in ctx.elements() {
                    assert_eq!(bct_entry(&f, c, a, b).unwrap(), bct_entry_permutation_form(&f, c, a, b).unwrap());
                }
            }
        }
    }
    let f7 = FieldCtx::prime(7).unwrap();
    let square = UniPoly::monomial(&f7, Elt::ONE, 2);
    assert!(bct_entry_permutation_form(&square, Elt::ONE, Elt::ONE, Elt::ONE).is_err());
}

/// `B_{D_n(x, beta)}(s a, s^n b) = B_{D_n(x, alpha)}(a, b)` with `s^2 = beta / alpha`.
#[test]
fn dickson_square_class_relation() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for (p, k, n) in [(5, 1, 7), (7, 1, 5), (11, 1, 7), (13, 1, 5), (3, 2, 7), (89, 1, 7)] {
        let ctx = FieldCtx::with_degree(p, k).unwrap();
        let q = ctx.order();
        assert_eq!(cbu_gcd(n, q * q - 1), 1);
        let trials = if q > 50 { 1 } else { 3 };
        for _ in 0..trials {
            let alpha = random_nonzero(&ctx, &mut rng);
            let s = random_nonzero(&ctx, &mut rng);
            let gamma = ctx.mul(s, s);
            let beta = ctx.mul(alpha, gamma);
            assert_eq!(ctx.is_square(alpha), ctx.is_square(beta));
            let c = random_nonzero(&ctx, &mut rng);
            let ta = BctTable::compute(&dickson(&ctx, n, alpha), c, false).unwrap();
            let tb = BctTable::compute(&dickson(&ctx, n, beta), c, false).unwrap();
            let sn = ctx.pow(s, n);
            for a in ctx.nonzero_elements() {
                for b in ctx.elements() {
                    assert_eq!(ta.entry(a, b), tb.entry(ctx.mul(s, a), ctx.mul(sn, b)));
                }
            }
        }
    }
}

#[test]
fn dickson_uniformity_collapses_to_three_values() {
    let f11 = FieldCtx::prime(11).unwrap();
    for n in [3, 7, 9] {
        for c in f11.nonzero_elements() {
            let mut by_class: [Option<usize>; 3] = [None; 3];
            for alpha in f11.elements() {
                let class = if alpha.is_zero() {
                    0
                } else if f11.is_square(alpha) {
                    1
                } else {
                    2
                };
                let beta = uniformity(&dickson(&f11, n, alpha), c).unwrap().beta;
                match by_class[class] {
                    None => by_class[class] = Some(beta),
                    Some(prev) => assert_eq!(prev, beta, "n = {n}, c = {c:?}"),
                }
            }
        }
    }
}
