mod common;

use cbu::boomerang::is_permutation;
use cbu::dickson::{
    check_commutation, check_scaling, dickson, dickson_closed_form, frobenius_index_identity, is_permutation_dickson,
    parity_of_terms, Parity,
};
use cbu::{Elt, FieldCtx, UniPoly};
use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn closed_form_matches_recurrence() {
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    for (p, k) in [(11, 1), (13, 1), (2, 4), (3, 3), (257, 1)] {
        let ctx = FieldCtx::with_degree(p, k).unwrap();
        for _ in 0..20 {
            let a = random_elt(&ctx, &mut rng);
            for n in 0..=64 {
                assert_eq!(dickson_closed_form(&ctx, n, a).unwrap(), dickson(&ctx, n, a), "n = {n}");
            }
        }
    }
}

#[test]
fn permutation_criterion_matches_value_table() {
    for q in 2..=64u64 {
        let Some((p, k)) = prime_power(q) else { continue };
        let ctx = FieldCtx::with_degree(p, k).unwrap();
        for n in 1..=12 {
            for a in [Elt::ONE, ctx.elt(q - 1).unwrap()] {
                if a.is_zero() {
                    continue;
                }
                let f = dickson(&ctx, n, a);
                assert_eq!(is_permutation_dickson(n, &ctx), is_permutation(&f), "q = {q}, n = {n}");
            }
        }
    }
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut m = q;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

#[test]
fn identities_up_to_twenty() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for ctx in [FieldCtx::prime(11).unwrap(), FieldCtx::prime(13).unwrap(), FieldCtx::with_degree(2, 4).unwrap()] {
        for n in 0..=20 {
            let (a, b) = (random_elt(&ctx, &mut rng), random_elt(&ctx, &mut rng));
            assert!(check_scaling(&ctx, n, a, b));
            assert!(frobenius_index_identity(&ctx, n, a));
            for m in 0..=(20 / n.max(1)).min(6) {
                assert!(check_commutation(&ctx, m, n, a), "m = {m}, n = {n}");
            }
            if n > 0 {
                let expected = if n % 2 == 0 { Parity::Even } else { Parity::Odd };
                assert_eq!(parity_of_terms(&ctx, n, a), expected);
            }
        }
    }
}

#[test]
fn odd_index_gives_odd_function() {
    let f89 = FieldCtx::prime(89).unwrap();
    let d7 = dickson(&f89, 7, Elt::ONE);
    assert_eq!(parity_of_terms(&f89, 7, Elt::ONE), Parity::Odd);
    for x in f89.elements() {
        assert_eq!(d7.eval(f89.neg(x)).unwrap(), f89.neg(d7.eval(x).unwrap()));
    }
    assert_eq!(dickson(&f89, 0, Elt::ONE), UniPoly::constant(&f89, f89.from_int(2)));
}
