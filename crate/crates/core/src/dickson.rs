//! Dickson polynomials of the first kind.

use crate::gf::{Elt, FieldCtx};
use crate::upoly::{gcd_u64, UniPoly};

/// `D_n(X, a)` from `D_0 = 2`, `D_1 = X`, `D_n = X D_{n-1} - a D_{n-2}`.
pub fn dickson(ctx: &FieldCtx, n: u64, a: Elt) -> UniPoly {
    let two = UniPoly::constant(ctx, ctx.from_int(2));
    if n == 0 {
        return two;
    }
    let x = UniPoly::x(ctx);
    let (mut prev, mut cur) = (two, x.clone());
    for _ in 1..n {
        let next = &(&x * &cur) - &prev.scale(a);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `sum_i n/(n-i) binom(n-i, i) (-a)^i X^(n-2i)`, with the rational factor
/// evaluated over the integers first. `None` on `u128` overflow.
pub fn dickson_closed_form(ctx: &FieldCtx, n: u64, a: Elt) -> Option<UniPoly> {
    if n == 0 {
        return Some(UniPoly::constant(ctx, ctx.from_int(2)));
    }
    let mut coeffs = vec![Elt::ZERO; n as usize + 1];
    let neg_a = ctx.neg(a);
    for i in 0..=n / 2 {
        let binom = binomial(n - i, i)?;
        let factor = binom.checked_mul(n as u128)? / (n - i) as u128;
        let r = (factor % ctx.characteristic() as u128) as i128;
        coeffs[(n - 2 * i) as usize] = ctx.mul(ctx.from_int(r), ctx.pow(neg_a, i));
    }
    Some(UniPoly::from_coeffs(ctx, coeffs))
}

fn binomial(n: u64, k: u64) -> Option<u128> {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i + 1) as u128;
    }
    Some(acc)
}

/// `gcd(n, q^2 - 1) = 1`.
pub fn is_permutation_dickson(n: u64, ctx: &FieldCtx) -> bool {
    let q = ctx.order() as u128;
    let m = q * q - 1;
    let r = (m % n.max(1) as u128) as u64;
    n >= 1 && gcd_u64(n, r) == 1
}

/// `D_mn(X, a) = D_m(D_n(X, a), a^n) = D_n(D_m(X, a), a^m)`.
pub fn check_commutation(ctx: &FieldCtx, m: u64, n: u64, a: Elt) -> bool {
    let lhs = dickson(ctx, m * n, a);
    let r1 = dickson(ctx, m, ctx.pow(a, n)).compose(&dickson(ctx, n, a));
    let r2 = dickson(ctx, n, ctx.pow(a, m)).compose(&dickson(ctx, m, a));
    lhs == r1 && lhs == r2
}

/// `b^n D_n(X, a) = D_n(b X, b^2 a)`.
pub fn check_scaling(ctx: &FieldCtx, n: u64, a: Elt, b: Elt) -> bool {
    let lhs = dickson(ctx, n, a).scale(ctx.pow(b, n));
    let bx = UniPoly::monomial(ctx, b, 1);
    let rhs = dickson(ctx, n, ctx.mul(ctx.mul(b, b), a)).compose(&bx);
    lhs == rhs
}

/// `D_pn(X, a) = D_n(X, a)^p` in characteristic `p`.
pub fn frobenius_index_identity(ctx: &FieldCtx, n: u64, a: Elt) -> bool {
    let p = ctx.characteristic();
    dickson(ctx, p * n, a) == dickson(ctx, n, a).pow(p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

/// Parity shared by every exponent of `D_n(X, a)`.
pub fn parity_of_terms(ctx: &FieldCtx, n: u64, a: Elt) -> Parity {
    let d = dickson(ctx, n, a);
    let mut exps = d.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i % 2);
    let Some(first) = exps.next() else {
        return Parity::Even;
    };
    if exps.any(|e| e != first) {
        Parity::Mixed
    } else if first == 0 {
        Parity::Even
    } else {
        Parity::Odd
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let f11 = FieldCtx::prime(11).unwrap();
        for n in 0..12 {
            assert_eq!(dickson(&f11, n, Elt::ZERO), if n == 0 { UniPoly::from_ints(&f11, &[2]) } else { UniPoly::monomial(&f11, Elt::ONE, n as usize) });
        }
        assert_eq!(dickson(&f11, 7, Elt::ONE), UniPoly::from_ints(&f11, &[0, 4, 0, 3, 0, 4, 0, 1]));
        let a = f11.elt(6).unwrap();
        assert_eq!(dickson(&f11, 2, a), UniPoly::from_ints(&f11, &[-12, 0, 1]));
    }

    #[test]
    fn closed_form_agrees() {
        let f13 = FieldCtx::prime(13).unwrap();
        for n in 0..40 {
            for a in [0, 1, 5, 12] {
                let a = f13.elt(a).unwrap();
                assert_eq!(dickson_closed_form(&f13, n, a).unwrap(), dickson(&f13, n, a), "n = {n}");
            }
        }
    }

    #[test]
    fn permutation_criterion() {
        assert!(is_permutation_dickson(7, &FieldCtx::prime(11).unwrap()));
        assert!(is_permutation_dickson(11, &FieldCtx::with_degree(2, 4).unwrap()));
        assert!(!is_permutation_dickson(3, &FieldCtx::prime(5).unwrap()));
    }

    #[test]
    fn identities() {
        let f11 = FieldCtx::prime(11).unwrap();
        assert!(check_commutation(&f11, 2, 3, Elt::ONE));
        assert!(check_commutation(&f11, 4, 1, f11.elt(3).unwrap()));
        assert!(check_commutation(&f11, 3, 2, Elt::ZERO));
        assert!(check_scaling(&f11, 7, Elt::ONE, f11.elt(2).unwrap()));
        assert!(check_scaling(&f11, 7, Elt::ONE, Elt::ONE));
        assert!(check_scaling(&f11, 5, Elt::ONE, Elt::ZERO));
        let f16 = FieldCtx::with_degree(2, 4).unwrap();
        assert!(frobenius_index_identity(&f16, 3, Elt::ONE));
        assert!(frobenius_index_identity(&f11, 0, Elt::ONE));
        assert!(frobenius_index_identity(&f11, 2, Elt::ZERO));
    }

    #[test]
    fn parities() {
        let f11 = FieldCtx::prime(11).unwrap();
        assert_eq!(parity_of_terms(&f11, 7, Elt::ONE), Parity::Odd);
        assert_eq!(parity_of_terms(&f11, 6, Elt::ONE), Parity::Even);
        assert_eq!(parity_of_terms(&f11, 1, Elt::ONE), Parity::Odd);
    }
}
