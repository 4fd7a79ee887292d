//! Dense univariate polynomials over a [`FieldCtx`] and their factorization.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::gf::{prime_factors, Elt, FieldCtx};

/// `c_0 + c_1 X + ... + c_d X^d`, with `c_d != 0` (empty for the zero polynomial).
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    ctx: FieldCtx,
    coeffs: Vec<Elt>,
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

pub(crate) fn format_coeff(ctx: &FieldCtx, c: Elt, has_monomial: bool) -> String {
    let text = ctx.format_elt(c);
    if !has_monomial {
        return text;
    }
    if c == Elt::ONE {
        return String::new();
    }
    if text.contains('+') {
        format!("({text})*")
    } else {
        format!("{text}*")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            write!(f, "{}{}", format_coeff(&self.ctx, c, i > 0), mono)?;
        }
        Ok(())
    }
}

impl UniPoly {
    /// Builds a polynomial from low-to-high coefficients, trimming leading zeros.
    pub fn from_coeffs(ctx: &FieldCtx, mut coeffs: Vec<Elt>) -> UniPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { ctx: ctx.clone(), coeffs }
    }

    /// Integer coefficients reduced into the prime subfield, low-to-high.
    pub fn from_ints(ctx: &FieldCtx, coeffs: &[i64]) -> UniPoly {
        let coeffs = coeffs.iter().map(|&c| ctx.from_int(c as i128)).collect();
        UniPoly::from_coeffs(ctx, coeffs)
    }

    pub fn zero(ctx: &FieldCtx) -> UniPoly {
        UniPoly { ctx: ctx.clone(), coeffs: Vec::new() }
    }

    pub fn one(ctx: &FieldCtx) -> UniPoly {
        UniPoly::constant(ctx, Elt::ONE)
    }

    pub fn constant(ctx: &FieldCtx, c: Elt) -> UniPoly {
        UniPoly::from_coeffs(ctx, vec![c])
    }

    pub fn x(ctx: &FieldCtx) -> UniPoly {
        UniPoly::monomial(ctx, Elt::ONE, 1)
    }

    /// `c X^k`.
    pub fn monomial(ctx: &FieldCtx, c: Elt, k: usize) -> UniPoly {
        let mut coeffs = vec![Elt::ZERO; k + 1];
        coeffs[k] = c;
        UniPoly::from_coeffs(ctx, coeffs)
    }

    pub fn parse(ctx: &FieldCtx, text: &str) -> Result<UniPoly> {
        crate::parse::parse_uni(ctx, text)
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Elt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elt {
        self.coeffs.get(i).copied().unwrap_or(Elt::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Elt {
        self.coeffs.last().copied().unwrap_or(Elt::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Elt::ONE
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Elt::ONE
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Elt) -> Result<Elt> {
        if !self.ctx.contains(x) {
            return Err(Error::CtxMismatch);
        }
        Ok(self.eval_unchecked(x))
    }

    pub(crate) fn eval_unchecked(&self, x: Elt) -> Elt {
        let k = &self.ctx;
        self.coeffs.iter().rev().fold(Elt::ZERO, |acc, &c| k.add(k.mul(acc, x), c))
    }

    /// Table of `f(x)` indexed by the canonical index of `x`.
    pub fn value_table(&self) -> Vec<Elt> {
        self.ctx.elements().map(|x| self.eval_unchecked(x)).collect()
    }

    pub fn scale(&self, c: Elt) -> UniPoly {
        let k = &self.ctx;
        UniPoly::from_coeffs(k, self.coeffs.iter().map(|&a| k.mul(a, c)).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> UniPoly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.ctx.inv(self.lead()).expect("nonzero lead");
        self.scale(inv)
    }

    pub fn derivative(&self) -> UniPoly {
        let k = &self.ctx;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| k.mul(k.from_int(i as i128), c))
            .collect();
        UniPoly::from_coeffs(k, coeffs)
    }

    /// `self(g(X))`.
    pub fn compose(&self, g: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero(&self.ctx);
        for &c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &UniPoly::constant(&self.ctx, c);
        }
        acc
    }

    /// `(q, r)` with `self = q * d + r` and `deg r < deg d`.
    pub fn divmod(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let k = &self.ctx;
        let Some(ds) = self.degree() else {
            return Ok((UniPoly::zero(k), UniPoly::zero(k)));
        };
        if ds < dd {
            return Ok((UniPoly::zero(k), self.clone()));
        }
        let inv = k.inv(d.lead())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Elt::ZERO; ds - dd + 1];
        for i in (0..=ds - dd).rev() {
            let c = rem[i + dd];
            if c.is_zero() {
                continue;
            }
            let t = k.mul(c, inv);
            quot[i] = t;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = k.sub(rem[i + j], k.mul(t, dc));
            }
        }
        rem.truncate(dd);
        Ok((UniPoly::from_coeffs(k, quot), UniPoly::from_coeffs(k, rem)))
    }

    pub fn rem(&self, d: &UniPoly) -> Result<UniPoly> {
        Ok(self.divmod(d)?.1)
    }

    /// Exact quotient; panics if `d` is zero.
    fn div_exact(&self, d: &UniPoly) -> UniPoly {
        let (q, r) = self.divmod(d).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, exp: u64) -> UniPoly {
        let mut acc = UniPoly::one(&self.ctx);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^exp mod m` by square-and-multiply.
    pub fn pow_mod(&self, exp: u64, m: &UniPoly) -> Result<UniPoly> {
        if m.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut base = self.rem(m)?;
        let mut acc = UniPoly::one(&self.ctx).rem(m)?;
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(m)?;
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).rem(m)?;
            }
        }
        Ok(acc)
    }

    /// `self^(q^k) mod m` by `k` successive Frobenius steps.
    pub fn frobenius_pow_mod(&self, k: u64, m: &UniPoly) -> Result<UniPoly> {
        let q = self.ctx.order();
        let mut h = self.rem(m)?;
        for _ in 0..k {
            h = h.pow_mod(q, m)?;
        }
        Ok(h)
    }

    /// For `f` with `f' = 0`, the polynomial `g` with `g^p = f`.
    fn pth_root(&self) -> UniPoly {
        let k = &self.ctx;
        let p = k.characteristic() as usize;
        let coeffs = self.coeffs.iter().step_by(p).map(|&c| k.pth_root(c)).collect();
        UniPoly::from_coeffs(k, coeffs)
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Pairwise coprime squarefree parts with multiplicities; input must be monic.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, u32)> {
        let p = self.ctx.characteristic() as u32;
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let df = self.derivative();
        if df.is_zero() {
            for (h, m) in self.pth_root().squarefree_decomposition() {
                out.push((h, m * p));
            }
            return out;
        }
        let mut c = self.gcd(&df);
        let mut w = self.div_exact(&c);
        let mut i = 1u32;
        while !w.is_one() {
            let y = w.gcd(&c);
            let fac = w.div_exact(&y);
            if fac.degree().unwrap_or(0) > 0 {
                out.push((fac, i));
            }
            w = y;
            c = c.div_exact(&w);
            i += 1;
        }
        if c.degree().unwrap_or(0) > 0 {
            for (h, m) in c.pth_root().squarefree_decomposition() {
                out.push((h, m * p));
            }
        }
        out
    }

    /// Splits a monic squarefree polynomial into products of irreducibles of equal degree.
    pub fn distinct_degree_factorization(&self) -> Vec<(UniPoly, usize)> {
        let k = &self.ctx;
        let mut out = Vec::new();
        let mut f = self.monic();
        let x = UniPoly::x(k);
        let mut h = x.rem(&f).expect("nonzero");
        let mut i = 1usize;
        while f.degree().unwrap_or(0) >= 2 * i {
            h = h.pow_mod(k.order(), &f).expect("nonzero");
            let g = f.gcd(&(&h - &x));
            if !g.is_one() {
                f = f.div_exact(&g);
                h = h.rem(&f).expect("nonzero");
                out.push((g, i));
            }
            i += 1;
        }
        if let Some(d) = f.degree().filter(|&d| d > 0) {
            out.push((f, d));
        }
        out
    }

    /// Splits a monic squarefree product of irreducibles of degree `k`.
    fn equal_degree_split(&self, k: usize, rng: &mut ChaCha8Rng, out: &mut Vec<UniPoly>) {
        let ctx = &self.ctx;
        let d = self.degree().expect("nonzero");
        if d == k {
            out.push(self.clone());
            return;
        }
        let q = ctx.order();
        loop {
            let a = UniPoly::from_coeffs(
                ctx,
                (0..d).map(|_| ctx.elt_unchecked(rng.gen_range(0..q))).collect(),
            );
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            let h = if ctx.characteristic() == 2 {
                // absolute trace F_{q^k} -> F_2
                let steps = ctx.degree() as usize * k;
                let mut cur = a.clone();
                let mut tr = a;
                for _ in 1..steps {
                    cur = (&cur * &cur).rem(self).expect("nonzero");
                    tr = &tr + &cur;
                }
                tr
            } else {
                // a^((q^k - 1)/2) = (a^(1 + q + ... + q^(k-1)))^((q-1)/2)
                let mut s = a.clone();
                let mut norm = a;
                for _ in 1..k {
                    s = s.pow_mod(q, self).expect("nonzero");
                    norm = (&norm * &s).rem(self).expect("nonzero");
                }
                &norm.pow_mod((q - 1) / 2, self).expect("nonzero") - &UniPoly::one(ctx)
            };
            let g = self.gcd(&h);
            let gd = g.degree().unwrap_or(0);
            if gd > 0 && gd < d {
                let rest = self.div_exact(&g);
                g.equal_degree_split(k, rng, out);
                rest.equal_degree_split(k, rng, out);
                return;
            }
        }
    }

    /// Complete factorization over the coefficient field with the default seed.
    pub fn factor(&self) -> Result<FactorList> {
        self.factor_with_seed(0)
    }

    /// Complete factorization; `seed` drives equal-degree splitting only and
    /// does not affect the (sorted) result.
    pub fn factor_with_seed(&self, seed: u64) -> Result<FactorList> {
        if self.degree().unwrap_or(0) == 0 {
            return Err(Error::ZeroPolynomial);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let unit = self.lead();
        let monic = self.monic();
        let mut factors: Vec<(UniPoly, u32)> = Vec::new();
        for (part, mult) in monic.squarefree_decomposition() {
            for (block, deg) in part.distinct_degree_factorization() {
                let mut pieces = Vec::new();
                block.equal_degree_split(deg, &mut rng, &mut pieces);
                for piece in pieces {
                    match factors.iter_mut().find(|(f, _)| *f == piece) {
                        Some(entry) => entry.1 += mult,
                        None => factors.push((piece, mult)),
                    }
                }
            }
        }
        factors.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
        Ok(FactorList { unit, factors })
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree().filter(|&n| n >= 1) else {
            return false;
        };
        if n == 1 {
            return true;
        }
        let f = self.monic();
        let x = UniPoly::x(&self.ctx);
        let full = x.frobenius_pow_mod(n as u64, &f).expect("nonzero");
        if full != x.rem(&f).expect("nonzero") {
            return false;
        }
        prime_factors(n as u64).into_iter().all(|r| {
            let h = x.frobenius_pow_mod(n as u64 / r, &f).expect("nonzero");
            f.gcd(&(&h - &x)).is_one()
        })
    }

    /// Number of distinct roots in `F_{q^n}`: `deg gcd(X^(q^n) - X, f)`.
    pub fn count_roots_in_extension(&self, n: u64) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(0);
        }
        let f = self.monic();
        let x = UniPoly::x(&self.ctx);
        let h = x.frobenius_pow_mod(n, &f)?;
        Ok(f.gcd(&(&h - &x)).degree().unwrap_or(0))
    }

    /// Roots in the coefficient field by exhaustive evaluation.
    pub fn roots_by_evaluation(&self) -> Vec<Elt> {
        self.ctx.elements().filter(|&x| self.eval_unchecked(x).is_zero()).collect()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(|&c| self.ctx.elt_to_json(c)).collect())
    }

    pub fn from_json(ctx: &FieldCtx, v: &Value) -> Result<UniPoly> {
        match v {
            Value::Array(items) => {
                let coeffs = items.iter().map(|c| ctx.elt_from_json(c)).collect::<Result<Vec<_>>>()?;
                Ok(UniPoly::from_coeffs(ctx, coeffs))
            }
            Value::String(s) => UniPoly::parse(ctx, s),
            _ => Err(Error::Parse(format!("bad polynomial {v}"))),
        }
    }
}

/// Orders by degree, then coefficient indices from the constant term upward.
pub fn canonical_cmp(a: &UniPoly, b: &UniPoly) -> Ordering {
    a.coeffs
        .len()
        .cmp(&b.coeffs.len())
        .then_with(|| a.coeffs.iter().cmp(b.coeffs.iter()))
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let k = &self.ctx;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| k.add(self.coeff(i), rhs.coeff(i))).collect();
        UniPoly::from_coeffs(k, coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let k = &self.ctx;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| k.sub(self.coeff(i), rhs.coeff(i))).collect();
        UniPoly::from_coeffs(k, coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        let k = &self.ctx;
        UniPoly::from_coeffs(k, self.coeffs.iter().map(|&c| k.neg(c)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let k = &self.ctx;
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(k);
        }
        let mut out = vec![Elt::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = k.add(out[i + j], k.mul(a, b));
            }
        }
        UniPoly::from_coeffs(k, out)
    }
}

/// Monic irreducible factors with multiplicities, plus the leading unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorList {
    pub unit: Elt,
    pub factors: Vec<(UniPoly, u32)>,
}

impl FactorList {
    /// Irreducible factor degrees, repeated by multiplicity, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(f, m)| std::iter::repeat_n(f.degree().unwrap_or(0), *m as usize))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, m)| m == 1)
    }

    /// Least `n` such that every root lies in `F_{q^n}`.
    pub fn splitting_degree(&self) -> Result<u64> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        Ok(self
            .factors
            .iter()
            .map(|(f, _)| f.degree().unwrap_or(1) as u64)
            .fold(1, lcm))
    }

    pub fn product(&self, ctx: &FieldCtx) -> UniPoly {
        let mut acc = UniPoly::constant(ctx, self.unit);
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = &acc * f;
            }
        }
        acc
    }
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd_u64(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> FieldCtx {
        FieldCtx::prime(p).unwrap()
    }

    #[test]
    fn evaluation() {
        let f11 = fp(11);
        let x7 = UniPoly::monomial(&f11, Elt::ONE, 7);
        // 2^7 = 128 = 11*11 + 7
        assert_eq!(128 % 11, 7);
        assert_eq!(x7.eval(f11.elt(2).unwrap()).unwrap(), f11.elt(7).unwrap());
        let g = UniPoly::from_ints(&f11, &[5, 3, 1]);
        assert_eq!(g.eval(Elt::ZERO).unwrap(), f11.elt(5).unwrap());
        assert_eq!(g.eval(Elt(11)), Err(Error::CtxMismatch));
    }

    #[test]
    fn division_gcd_powmod() {
        let f5 = fp(5);
        let a = UniPoly::from_ints(&f5, &[-1, 0, 1]);
        let b = UniPoly::from_ints(&f5, &[-1, 1]);
        assert_eq!(a.gcd(&b), b);
        let f7 = fp(7);
        let x3 = UniPoly::from_ints(&f7, &[0, 0, 0, 1]);
        let (q, r) = x3.divmod(&UniPoly::from_ints(&f7, &[-1, 1])).unwrap();
        assert_eq!(q, UniPoly::from_ints(&f7, &[1, 1, 1]));
        assert_eq!(r, UniPoly::from_ints(&f7, &[1]));
        assert_eq!(x3.divmod(&UniPoly::zero(&f7)).unwrap_err(), Error::DivisionByZero);
        // X^11 = X (X^2)^5 = 32 X = 10 X mod (X^2 - 2, 11)
        assert_eq!(32 % 11, 10);
        let f11 = fp(11);
        let m = UniPoly::from_ints(&f11, &[-2, 0, 1]);
        let r = UniPoly::x(&f11).pow_mod(11, &m).unwrap();
        assert_eq!(r, UniPoly::from_ints(&f11, &[0, 10]));
    }

    #[test]
    fn irreducibility() {
        let f2 = fp(2);
        assert!(UniPoly::from_ints(&f2, &[1, 1, 0, 0, 1]).is_irreducible());
        assert!(!UniPoly::from_ints(&f2, &[1, 0, 1]).is_irreducible());
        let f11 = fp(11);
        assert!(UniPoly::from_ints(&f11, &[1, 6, 1]).is_irreducible());
        assert!(!UniPoly::from_ints(&fp(5), &[-1, 0, 1]).is_irreducible());
    }

    #[test]
    fn repeated_factor() {
        let f7 = fp(7);
        let f = UniPoly::from_ints(&f7, &[1, -2, 1]);
        let fl = f.factor().unwrap();
        assert_eq!(fl.factors, vec![(UniPoly::from_ints(&f7, &[-1, 1]), 2)]);
        assert_eq!(fl.splitting_degree(), Err(Error::NotSquarefree));
    }

    #[test]
    fn pth_power_inputs() {
        // (x^2 + 1)^3 * (x + 2) over F_3
        let f3 = fp(3);
        let base = UniPoly::from_ints(&f3, &[1, 0, 1]);
        let f = &(&(&base * &base) * &base) * &UniPoly::from_ints(&f3, &[2, 1]);
        let fl = f.factor().unwrap();
        assert_eq!(fl.product(&f3), f);
        assert_eq!(fl.factors.iter().map(|(h, m)| (h.degree().unwrap(), *m)).collect::<Vec<_>>(), vec![(1, 1), (2, 3)]);
        // over F_16
        let f16 = FieldCtx::with_degree(2, 4).unwrap();
        let g = UniPoly::parse(&f16, "(x^2 + g*x + 1)^4 * (x + g^3)^3").unwrap();
        let fl = g.factor().unwrap();
        assert_eq!(fl.product(&f16), g);
    }

    #[test]
    fn roots_in_extensions() {
        let f11 = fp(11);
        let f = UniPoly::from_ints(&f11, &[1, 0, 1]);
        assert_eq!(f.count_roots_in_extension(1).unwrap(), 0);
        assert_eq!(f.count_roots_in_extension(2).unwrap(), 2);
        assert!(f.roots_by_evaluation().is_empty());
    }

    #[test]
    fn splitting_degree_of_degree_lists() {
        let f11 = fp(11);
        let fake = |degs: &[usize]| FactorList {
            unit: Elt::ONE,
            factors: degs.iter().map(|&d| (UniPoly::monomial(&f11, Elt::ONE, d), 1)).collect(),
        };
        assert_eq!(fake(&[1, 1, 1, 2, 2, 4, 4, 20]).splitting_degree().unwrap(), 20);
        assert_eq!(fake(&[2; 10]).splitting_degree().unwrap(), 2);
        assert_eq!(fake(&[1]).splitting_degree().unwrap(), 1);
    }

    #[test]
    fn display_forms() {
        let f16 = FieldCtx::with_degree(2, 4).unwrap();
        let p = UniPoly::parse(&f16, "(g^2+1)*x^3 + g*x + 1").unwrap();
        assert_eq!(p.to_string(), "(g^2+1)*x^3 + g*x + 1");
        let back = UniPoly::parse(&f16, &p.to_string()).unwrap();
        assert_eq!(back, p);
        let q = UniPoly::from_json(&f16, &p.to_json()).unwrap();
        assert_eq!(q, p);
    }
}
