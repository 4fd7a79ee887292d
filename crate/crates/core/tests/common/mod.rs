#![allow(dead_code)]

use cbu::dickson::dickson;
use cbu::{BiPoly, Elt, FieldCtx, Monomial2, UniPoly};
use rand::Rng;

pub fn random_elt(ctx: &FieldCtx, rng: &mut impl Rng) -> Elt {
    ctx.elt(rng.gen_range(0..ctx.order())).unwrap()
}

pub fn random_nonzero(ctx: &FieldCtx, rng: &mut impl Rng) -> Elt {
    ctx.elt(rng.gen_range(1..ctx.order())).unwrap()
}

/// Random polynomial of exact degree `deg`.
pub fn random_poly(ctx: &FieldCtx, deg: usize, rng: &mut impl Rng) -> UniPoly {
    let mut c: Vec<Elt> = (0..deg).map(|_| random_elt(ctx, rng)).collect();
    c.push(random_nonzero(ctx, rng));
    UniPoly::from_coeffs(ctx, c)
}

pub fn random_monic(ctx: &FieldCtx, deg: usize, rng: &mut impl Rng) -> UniPoly {
    let mut c: Vec<Elt> = (0..deg).map(|_| random_elt(ctx, rng)).collect();
    c.push(Elt::ONE);
    UniPoly::from_coeffs(ctx, c)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `f mod (X^q - X)`, the same function with degree below `q`.
pub fn reduce_as_function(f: &UniPoly) -> UniPoly {
    let ctx = f.ctx();
    let q = ctx.order() as usize;
    let xq = &UniPoly::monomial(ctx, Elt::ONE, q) - &UniPoly::x(ctx);
    f.rem(&xq).unwrap()
}

/// Composition of random affine maps, power maps and Dickson permutations.
pub fn random_permutation(ctx: &FieldCtx, rng: &mut impl Rng) -> UniPoly {
    let q = ctx.order();
    let mut f = UniPoly::x(ctx);
    for _ in 0..rng.gen_range(1..=3) {
        let piece = match rng.gen_range(0..3) {
            0 => UniPoly::from_coeffs(ctx, vec![random_elt(ctx, rng), random_nonzero(ctx, rng)]),
            1 => {
                let ks: Vec<u64> = (2..q.min(40)).filter(|&k| gcd(k, q - 1) == 1).collect();
                match ks.is_empty() {
                    true => UniPoly::x(ctx),
                    false => UniPoly::monomial(ctx, Elt::ONE, ks[rng.gen_range(0..ks.len())] as usize),
                }
            }
            _ => {
                let ns: Vec<u64> = (2..16).filter(|&n| gcd(n, q * q - 1) == 1).collect();
                match ns.is_empty() {
                    true => UniPoly::x(ctx),
                    false => dickson(ctx, ns[rng.gen_range(0..ns.len())], random_elt(ctx, rng)),
                }
            }
        };
        f = reduce_as_function(&piece.compose(&f));
    }
    f
}

fn term(ctx: &FieldCtx, c: i128, x: u32, z: u32) -> (Monomial2, Elt) {
    (Monomial2::new(x, z), ctx.from_int(c))
}

/// `{x^(2d-2), z x^(d-1) - x^d, z^(d-1) + x^(d-1)}`, leading monomials descending.
pub fn c_minus_one_basis(ctx: &FieldCtx, d: u32) -> Vec<BiPoly> {
    vec![
        BiPoly::from_terms(ctx, [term(ctx, 1, 2 * d - 2, 0)]),
        BiPoly::from_terms(ctx, [term(ctx, 1, d - 1, 1), term(ctx, -1, d, 0)]),
        BiPoly::from_terms(ctx, [term(ctx, 1, 0, d - 1), term(ctx, 1, d - 1, 0)]),
    ]
}

fn complete_sum(ctx: &FieldCtx, d: u32) -> BiPoly {
    BiPoly::from_terms(ctx, (0..=d - 2).map(|i| term(ctx, 1, d - 2 - i, i)))
}

/// `{x^(2d-3), z x^(d-1) - x^d, sum_{i+j=d-2} z^i x^j}`, leading monomials descending.
pub fn c_one_basis(ctx: &FieldCtx, d: u32) -> Vec<BiPoly> {
    vec![
        BiPoly::from_terms(ctx, [term(ctx, 1, 2 * d - 3, 0)]),
        BiPoly::from_terms(ctx, [term(ctx, 1, d - 1, 1), term(ctx, -1, d, 0)]),
        complete_sum(ctx, d),
    ]
}

/// `(z^d + x^d, z^(d-1) + x^(d-1))`.
pub fn c_minus_one_ideal(ctx: &FieldCtx, d: u32) -> Vec<BiPoly> {
    vec![
        BiPoly::from_terms(ctx, [term(ctx, 1, 0, d), term(ctx, 1, d, 0)]),
        BiPoly::from_terms(ctx, [term(ctx, 1, 0, d - 1), term(ctx, 1, d - 1, 0)]),
    ]
}

/// `(z^d - x^d, sum_{i+j=d-2} z^i x^j)`.
pub fn c_one_ideal(ctx: &FieldCtx, d: u32) -> Vec<BiPoly> {
    vec![
        BiPoly::from_terms(ctx, [term(ctx, 1, 0, d), term(ctx, -1, d, 0)]),
        complete_sum(ctx, d),
    ]
}
