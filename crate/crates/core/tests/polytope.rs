mod common;

use cbu::polytope::{
    certify_absolutely_irreducible_difference, minkowski_sum, newton_polytope, triangle_area2, triangle_indecomposable,
    LatticePoint, LatticePolytope,
};
use cbu::{BiPoly, Error, FieldCtx, Monomial2};
use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_bipoly(ctx: &FieldCtx, rng: &mut impl Rng) -> BiPoly {
    let terms = rng.gen_range(1..8);
    BiPoly::from_terms(
        ctx,
        (0..terms).map(|_| (Monomial2::new(rng.gen_range(0..7), rng.gen_range(0..7)), random_nonzero(ctx, rng))),
    )
}

#[test]
fn newton_polytope_of_product_is_minkowski_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(30);
    let fields = [FieldCtx::prime(11).unwrap(), FieldCtx::prime(2).unwrap(), FieldCtx::with_degree(2, 4).unwrap()];
    for i in 0..200 {
        let ctx = &fields[i % fields.len()];
        let (g, h) = (random_bipoly(ctx, &mut rng), random_bipoly(ctx, &mut rng));
        let lhs = newton_polytope(&(&g * &h)).unwrap();
        let rhs = minkowski_sum(&newton_polytope(&g).unwrap(), &newton_polytope(&h).unwrap());
        assert_eq!(lhs, rhs, "{g} * {h}");
    }
}

/// Search for `T = P + Q` with neither summand a point.
///
/// `P` ranges over hulls of two or three lattice points of `T`; `Q` is then the
/// hull of all lattice translations keeping `P` inside `T`.
fn decomposable_by_search(t: &LatticePolytope) -> bool {
    let pts: Vec<LatticePoint> =
        (0..=5).flat_map(|u| (0..=5).map(move |v| LatticePoint::new(u, v))).filter(|&p| t.contains(p)).collect();
    let mut candidates = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            candidates.push(LatticePolytope::hull([pts[i], pts[j]]));
            for k in j + 1..pts.len() {
                candidates.push(LatticePolytope::hull([pts[i], pts[j], pts[k]]));
            }
        }
    }
    candidates.into_iter().any(|p| {
        if &p == t || p.vertices().len() < 2 {
            return false;
        }
        let shifts: Vec<LatticePoint> = (-5..=5)
            .flat_map(|u| (-5..=5).map(move |v| LatticePoint::new(u, v)))
            .filter(|s| p.vertices().iter().all(|w| t.contains(LatticePoint::new(w.u + s.u, w.v + s.v))))
            .collect();
        let q = LatticePolytope::hull(shifts);
        q.vertices().len() >= 2 && minkowski_sum(&p, &q) == *t
    })
}

fn point() -> impl Strategy<Value = LatticePoint> {
    (0i64..=5, 0i64..=5).prop_map(|(u, v)| LatticePoint::new(u, v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn indecomposability_matches_search(a in point(), b in point(), c in point()) {
        if triangle_area2(a, b, c) == 0 {
            prop_assert_eq!(triangle_indecomposable(a, b, c), Err(Error::DegenerateTriangle));
        } else {
            let t = LatticePolytope::hull([a, b, c]);
            prop_assert_eq!(triangle_indecomposable(a, b, c).unwrap(), !decomposable_by_search(&t));
        }
    }
}

#[test]
fn indecomposability_fixed_triangles() {
    let p = LatticePoint::new;
    for (a, b, c) in [
        (p(0, 0), p(2, 0), p(0, 2)),
        (p(0, 0), p(1, 4), p(5, 0)),
        (p(0, 0), p(4, 2), p(2, 4)),
        (p(0, 0), p(3, 0), p(0, 3)),
        (p(1, 1), p(3, 1), p(1, 2)),
    ] {
        let t = LatticePolytope::hull([a, b, c]);
        assert_eq!(triangle_indecomposable(a, b, c).unwrap(), !decomposable_by_search(&t), "{a} {b} {c}");
    }
}

#[test]
fn certificates_for_coprime_degrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for ctx in [FieldCtx::prime(11).unwrap(), FieldCtx::prime(13).unwrap(), FieldCtx::with_degree(2, 4).unwrap()] {
        for d in 2..=30usize {
            let f = random_poly(&ctx, d, &mut rng);
            let a = random_nonzero(&ctx, &mut rng);
            match certify_absolutely_irreducible_difference(&f, a) {
                Ok(cert) => {
                    assert_ne!(d as u64 % ctx.characteristic(), 0);
                    assert_eq!(cert.gcd, 1);
                    assert!(cert.verify(&f, a));
                    let di = d as i64;
                    let tri = LatticePolytope::hull([LatticePoint::new(0, 0), LatticePoint::new(1, di - 1), LatticePoint::new(di, 0)]);
                    assert_eq!(cert.vertices, tri.vertices());
                }
                Err(Error::Inapplicable(_)) => assert_eq!(d as u64 % ctx.characteristic(), 0, "d = {d}"),
                Err(e) => panic!("{e}"),
            }
        }
        let f = random_poly(&ctx, 5, &mut rng);
        assert!(matches!(certify_absolutely_irreducible_difference(&f, ctx.zero()), Err(Error::Inapplicable(_))));
    }
}
