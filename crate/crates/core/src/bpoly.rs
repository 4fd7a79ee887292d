//! Sparse bivariate polynomials in `x` and `z`.
//!
//! The variable order is fixed as `z > x` everywhere; display lists terms in
//! descending DRL order with `z` written first.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::Value;

use crate::error::{Error, Result};
use crate::gf::{Elt, FieldCtx};
use crate::upoly::{format_coeff, UniPoly};

/// `x^x z^z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial2 {
    pub x: u32,
    pub z: u32,
}

impl Monomial2 {
    pub const ONE: Monomial2 = Monomial2 { x: 0, z: 0 };

    pub fn new(x: u32, z: u32) -> Monomial2 {
        Monomial2 { x, z }
    }

    pub fn degree(self) -> u32 {
        self.x + self.z
    }

    pub fn divides(self, other: Monomial2) -> bool {
        self.x <= other.x && self.z <= other.z
    }

    pub fn lcm(self, other: Monomial2) -> Monomial2 {
        Monomial2::new(self.x.max(other.x), self.z.max(other.z))
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(self, other: Monomial2) -> Option<Monomial2> {
        self.divides(other)
            .then(|| Monomial2::new(other.x - self.x, other.z - self.z))
    }

    pub fn mul(self, other: Monomial2) -> Monomial2 {
        Monomial2::new(self.x + other.x, self.z + other.z)
    }

    pub fn is_coprime(self, other: Monomial2) -> bool {
        (self.x == 0 || other.x == 0) && (self.z == 0 || other.z == 0)
    }
}

impl fmt::Display for Monomial2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |name: &str, e: u32| match e {
            0 => None,
            1 => Some(name.to_string()),
            _ => Some(format!("{name}^{e}")),
        };
        let parts: Vec<String> = [part("z", self.z), part("x", self.x)].into_iter().flatten().collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Z,
}

/// Sparse polynomial in `F_q[x, z]` with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly {
    ctx: FieldCtx,
    terms: BTreeMap<Monomial2, Elt>,
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

fn drl_key(m: Monomial2) -> (u32, u32) {
    (m.degree(), m.z)
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(Monomial2, Elt)> = self.terms().collect();
        terms.sort_by_key(|(m, _)| std::cmp::Reverse(drl_key(*m)));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m == Monomial2::ONE {
                write!(f, "{}", self.ctx.format_elt(c))?;
            } else {
                write!(f, "{}{}", format_coeff(&self.ctx, c, true), m)?;
            }
        }
        Ok(())
    }
}

/// Pascal rows mod `p` up to row `n`.
fn binomial_rows(n: usize, p: u64) -> Vec<Vec<u64>> {
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![1u64; i + 1];
        for k in 1..i {
            row[k] = (rows[i - 1][k - 1] + rows[i - 1][k]) % p;
        }
        rows.push(row);
    }
    rows
}

impl BiPoly {
    pub fn zero(ctx: &FieldCtx) -> BiPoly {
        BiPoly { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ctx: &FieldCtx, c: Elt) -> BiPoly {
        BiPoly::monomial(ctx, c, Monomial2::ONE)
    }

    pub fn monomial(ctx: &FieldCtx, c: Elt, m: Monomial2) -> BiPoly {
        let mut p = BiPoly::zero(ctx);
        p.add_term(m, c);
        p
    }

    pub fn var(ctx: &FieldCtx, v: Var) -> BiPoly {
        let m = match v {
            Var::X => Monomial2::new(1, 0),
            Var::Z => Monomial2::new(0, 1),
        };
        BiPoly::monomial(ctx, Elt::ONE, m)
    }

    pub fn from_terms(ctx: &FieldCtx, terms: impl IntoIterator<Item = (Monomial2, Elt)>) -> BiPoly {
        let mut p = BiPoly::zero(ctx);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn parse(ctx: &FieldCtx, text: &str) -> Result<BiPoly> {
        crate::parse::parse_bi(ctx, text)
    }

    /// Embeds `f(x)` or `f(z)`.
    pub fn from_uni_in(var: Var, f: &UniPoly) -> BiPoly {
        let terms = f.coeffs().iter().enumerate().map(|(i, &c)| {
            let m = match var {
                Var::X => Monomial2::new(i as u32, 0),
                Var::Z => Monomial2::new(0, i as u32),
            };
            (m, c)
        });
        BiPoly::from_terms(f.ctx(), terms)
    }

    /// `f(x + z)` by binomial expansion.
    pub fn from_uni_of_sum(f: &UniPoly) -> BiPoly {
        let ctx = f.ctx();
        let d = f.degree().unwrap_or(0);
        let rows = binomial_rows(d, ctx.characteristic());
        let mut out = BiPoly::zero(ctx);
        for (i, &c) in f.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for k in 0..=i {
                let b = ctx.from_int(rows[i][k] as i128);
                out.add_term(Monomial2::new(k as u32, (i - k) as u32), ctx.mul(c, b));
            }
        }
        out
    }

    pub(crate) fn add_term(&mut self, m: Monomial2, c: Elt) {
        if c.is_zero() {
            return;
        }
        let ctx = &self.ctx;
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = ctx.add(*existing, c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    /// Terms in ascending `(x, z)` exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial2, Elt)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    pub fn coeff(&self, m: Monomial2) -> Elt {
        self.terms.get(&m).copied().unwrap_or(Elt::ZERO)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximum `i + j` over the terms; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: Elt) -> BiPoly {
        let ctx = &self.ctx;
        BiPoly::from_terms(ctx, self.terms().map(|(m, a)| (m, ctx.mul(a, c))))
    }

    pub fn mul_monomial(&self, c: Elt, mono: Monomial2) -> BiPoly {
        let ctx = &self.ctx;
        BiPoly::from_terms(ctx, self.terms().map(|(m, a)| (m.mul(mono), ctx.mul(a, c))))
    }

    /// Substitutes `var -> var + a`.
    pub fn shift(&self, var: Var, a: Elt) -> BiPoly {
        let ctx = &self.ctx;
        if a.is_zero() {
            return self.clone();
        }
        let max_e = self
            .terms
            .keys()
            .map(|m| match var {
                Var::X => m.x,
                Var::Z => m.z,
            })
            .max()
            .unwrap_or(0) as usize;
        let rows = binomial_rows(max_e, ctx.characteristic());
        let mut a_pows = vec![Elt::ONE; max_e + 1];
        for i in 1..=max_e {
            a_pows[i] = ctx.mul(a_pows[i - 1], a);
        }
        let mut out = BiPoly::zero(ctx);
        for (m, c) in self.terms() {
            let e = match var {
                Var::X => m.x,
                Var::Z => m.z,
            } as usize;
            for k in 0..=e {
                let coef = ctx.mul(c, ctx.mul(ctx.from_int(rows[e][k] as i128), a_pows[e - k]));
                let nm = match var {
                    Var::X => Monomial2::new(k as u32, m.z),
                    Var::Z => Monomial2::new(m.x, k as u32),
                };
                out.add_term(nm, coef);
            }
        }
        out
    }

    /// The homogeneous component of top total degree.
    pub fn top_component(&self) -> Result<BiPoly> {
        let d = self.total_degree().ok_or(Error::ZeroPolynomial)?;
        Ok(BiPoly::from_terms(&self.ctx, self.terms().filter(|(m, _)| m.degree() == d)))
    }

    /// The exact quotient `self / (z - x)`.
    pub fn divide_exact_by_z_minus_x(&self) -> Result<BiPoly> {
        let ctx = &self.ctx;
        if self.is_zero() {
            return Ok(self.clone());
        }
        // coefficient of z^j as a map x-exponent -> coefficient
        let max_z = self.terms.keys().map(|m| m.z).max().unwrap_or(0) as usize;
        let mut by_z: Vec<BTreeMap<u32, Elt>> = vec![BTreeMap::new(); max_z + 1];
        for (m, c) in self.terms() {
            by_z[m.z as usize].insert(m.x, c);
        }
        let shift_x = |p: &BTreeMap<u32, Elt>| -> BTreeMap<u32, Elt> { p.iter().map(|(&e, &c)| (e + 1, c)).collect() };
        let add = |a: &BTreeMap<u32, Elt>, b: &BTreeMap<u32, Elt>| -> BTreeMap<u32, Elt> {
            let mut out = a.clone();
            for (&e, &c) in b {
                let s = ctx.add(out.get(&e).copied().unwrap_or(Elt::ZERO), c);
                if s.is_zero() {
                    out.remove(&e);
                } else {
                    out.insert(e, s);
                }
            }
            out
        };
        // q_{j-1} = c_j + x q_j, from the top down; remainder c_0 + x q_0
        let mut quotient: Vec<BTreeMap<u32, Elt>> = vec![BTreeMap::new(); max_z];
        let mut carry = BTreeMap::new();
        for j in (1..=max_z).rev() {
            carry = add(&by_z[j], &shift_x(&carry));
            quotient[j - 1] = carry.clone();
        }
        let remainder = add(&by_z[0], &shift_x(&carry));
        if !remainder.is_empty() {
            return Err(Error::NotDivisible);
        }
        let terms = quotient
            .iter()
            .enumerate()
            .flat_map(|(j, p)| p.iter().map(move |(&e, &c)| (Monomial2::new(e, j as u32), c)));
        Ok(BiPoly::from_terms(ctx, terms))
    }

    pub fn eval2(&self, x: Elt, z: Elt) -> Elt {
        let ctx = &self.ctx;
        self.terms().fold(Elt::ZERO, |acc, (m, c)| {
            let t = ctx.mul(c, ctx.mul(ctx.pow(x, m.x as u64), ctx.pow(z, m.z as u64)));
            ctx.add(acc, t)
        })
    }

    /// Restriction to the diagonal `z = x`.
    pub fn substitute_z_eq_x(&self) -> UniPoly {
        let ctx = &self.ctx;
        let d = self.total_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![Elt::ZERO; d + 1];
        for (m, c) in self.terms() {
            let i = m.degree() as usize;
            coeffs[i] = ctx.add(coeffs[i], c);
        }
        UniPoly::from_coeffs(ctx, coeffs)
    }

    /// The polynomial as a univariate in `x`, if `z` does not occur.
    pub fn as_univariate_in_x(&self) -> Option<UniPoly> {
        if self.terms.keys().any(|m| m.z > 0) {
            return None;
        }
        let d = self.terms.keys().map(|m| m.x).max().unwrap_or(0) as usize;
        let mut coeffs = vec![Elt::ZERO; d + 1];
        for (m, c) in self.terms() {
            coeffs[m.x as usize] = c;
        }
        Some(UniPoly::from_coeffs(&self.ctx, coeffs))
    }

    /// `[[i, j, coeff], ...]` for terms `coeff * x^i z^j`, in descending DRL order.
    pub fn to_json(&self) -> Value {
        let mut terms: Vec<(Monomial2, Elt)> = self.terms().collect();
        terms.sort_by_key(|(m, _)| std::cmp::Reverse(drl_key(*m)));
        Value::Array(
            terms
                .into_iter()
                .map(|(m, c)| Value::Array(vec![Value::from(m.x), Value::from(m.z), self.ctx.elt_to_json(c)]))
                .collect(),
        )
    }

    pub fn from_json(ctx: &FieldCtx, v: &Value) -> Result<BiPoly> {
        let bad = || Error::Parse(format!("bad bivariate polynomial {v}"));
        match v {
            Value::String(s) => BiPoly::parse(ctx, s),
            Value::Array(items) => {
                let mut out = BiPoly::zero(ctx);
                for item in items {
                    let t = item.as_array().filter(|t| t.len() == 3).ok_or_else(bad)?;
                    let i = t[0].as_u64().ok_or_else(bad)? as u32;
                    let j = t[1].as_u64().ok_or_else(bad)? as u32;
                    out.add_term(Monomial2::new(i, j), ctx.elt_from_json(&t[2])?);
                }
                Ok(out)
            }
            _ => Err(bad()),
        }
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m, c);
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m, self.ctx.neg(c));
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly::from_terms(&self.ctx, self.terms().map(|(m, c)| (m, self.ctx.neg(c))))
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let ctx = &self.ctx;
        let mut out = BiPoly::zero(ctx);
        for (m1, c1) in self.terms() {
            for (m2, c2) in rhs.terms() {
                out.add_term(m1.mul(m2), ctx.mul(c1, c2));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> FieldCtx {
        FieldCtx::prime(p).unwrap()
    }

    #[test]
    fn embedding() {
        let f = fp(7);
        let x3 = UniPoly::monomial(&f, Elt::ONE, 3);
        assert_eq!(BiPoly::from_uni_in(Var::Z, &x3), BiPoly::parse(&f, "z^3").unwrap());
        assert_eq!(BiPoly::from_uni_in(Var::X, &x3), BiPoly::parse(&f, "x^3").unwrap());
        assert!(BiPoly::from_uni_in(Var::Z, &UniPoly::zero(&f)).is_zero());
    }

    #[test]
    fn shifting() {
        let f = fp(7);
        let x2 = BiPoly::parse(&f, "x^2").unwrap();
        assert_eq!(x2.shift(Var::X, Elt::ONE), BiPoly::parse(&f, "x^2 + 2x + 1").unwrap());
        assert_eq!(x2.shift(Var::X, Elt::ZERO), x2);
        let xp = BiPoly::parse(&f, "x^7").unwrap();
        let a = f.elt(3).unwrap();
        let expected = &xp + &BiPoly::constant(&f, f.pow(a, 7));
        assert_eq!(xp.shift(Var::X, a), expected);
    }

    #[test]
    fn top_components() {
        let f = fp(257);
        let x5 = UniPoly::monomial(&f, Elt::ONE, 5);
        let b = f.elt(48).unwrap();
        let f1 = &(&BiPoly::from_uni_in(Var::Z, &x5) + &BiPoly::from_uni_in(Var::X, &x5)) - &BiPoly::constant(&f, b);
        assert_eq!(f1.top_component().unwrap(), BiPoly::parse(&f, "z^5 + x^5").unwrap());
        let h = BiPoly::parse(&f, "x^2 + x z + z^2").unwrap();
        assert_eq!(h.top_component().unwrap(), h);
        assert_eq!(BiPoly::parse(&f, "x^3+1").unwrap().top_component().unwrap(), BiPoly::parse(&f, "x^3").unwrap());
        assert_eq!(BiPoly::zero(&f).top_component(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn divide_by_z_minus_x() {
        let f = fp(7);
        let d = |s: &str| BiPoly::parse(&f, s).unwrap().divide_exact_by_z_minus_x();
        assert_eq!(d("z^2 - x^2").unwrap(), BiPoly::parse(&f, "z + x").unwrap());
        assert_eq!(d("z^3 - x^3").unwrap(), BiPoly::parse(&f, "z^2 + z x + x^2").unwrap());
        assert_eq!(d("z^2 + x^2"), Err(Error::NotDivisible));
        assert_eq!(d("x^2"), Err(Error::NotDivisible));
    }

    #[test]
    fn evaluation() {
        let f = fp(7);
        let zx = BiPoly::parse(&f, "z - x").unwrap();
        assert_eq!(zx.eval2(f.elt(3).unwrap(), f.elt(3).unwrap()), Elt::ZERO);
        let b = BiPoly::constant(&f, f.elt(5).unwrap());
        assert_eq!(b.eval2(Elt::ONE, Elt::ZERO), f.elt(5).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let f = fp(11);
        let p = BiPoly::parse(&f, "3 z^2 x + 4 x^5 + 1").unwrap();
        assert_eq!(BiPoly::from_json(&f, &p.to_json()).unwrap(), p);
        assert_eq!(p.to_json()[0], serde_json::json!([5, 0, 4]));
    }
}
