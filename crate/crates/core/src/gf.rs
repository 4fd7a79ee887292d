//! Prime fields `F_p` and single-step extensions `F_{p^n}`.
//!
//! Elements are stored as their canonical index `c_0 + c_1 p + ... + c_{n-1} p^{n-1}`
//! where `c_i` are the residues of the coefficient vector modulo the defining
//! polynomial. The index doubles as the canonical element order used by all
//! table scans, so `q = p^n` must fit in a `u64`.

use std::fmt;
use std::sync::Arc;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::parse;
use crate::upoly::UniPoly;

/// A field element, stored by canonical index. Only meaningful together with
/// the [`FieldCtx`] it was created in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Elt(pub(crate) u64);

impl Elt {
    pub const ZERO: Elt = Elt(0);
    pub const ONE: Elt = Elt(1);

    #[inline]
    pub fn index(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Largest extension degree accepted. `p^n < 2^64` is the binding limit in practice.
pub const MAX_DEGREE: u32 = 64;

/// Extension fields up to this size get discrete log / antilog tables.
const TABLE_LIMIT: u64 = 1 << 16;

struct LogTables {
    // exp[i] = gen^i for 0 <= i < 2(q-1)
    exp: Vec<u64>,
    log: Vec<u32>,
}

struct Inner {
    p: u64,
    n: u32,
    q: u64,
    /// Monic defining polynomial, low-to-high, length n + 1. Empty for prime fields.
    modulus: Vec<u64>,
    symbol: String,
    tables: Option<LogTables>,
}

/// Arithmetic context for `F_p` or `F_p[Y]/(m(Y))`. Cheap to clone.
#[derive(Clone)]
pub struct FieldCtx(Arc<Inner>);

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.n == other.0.n && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldCtx {}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldCtx({})", self.describe())
    }
}

#[inline]
fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let (s, overflow) = a.overflowing_add(b);
    if overflow || s >= p {
        s.wrapping_sub(p)
    } else {
        s
    }
}

#[inline]
fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a.wrapping_sub(b).wrapping_add(p)
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    if p <= u32::MAX as u64 {
        (a * b) % p
    } else {
        ((a as u128 * b as u128) % p as u128) as u64
    }
}

fn pow_mod_u64(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin, exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &sp in &SMALL {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Distinct prime factors by trial division.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FieldCtx {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<FieldCtx> {
        if !is_prime(p) {
            return Err(Error::CompositeModulus(p));
        }
        Ok(FieldCtx(Arc::new(Inner {
            p,
            n: 1,
            q: p,
            modulus: Vec::new(),
            symbol: "g".to_string(),
            tables: None,
        })))
    }

    /// `F_p[Y]/(modulus)`, where `base` is the prime field `F_p`.
    pub fn extension(base: &FieldCtx, modulus: &UniPoly) -> Result<FieldCtx> {
        if base.degree() != 1 {
            return Err(Error::InvalidField("extension base must be a prime field".into()));
        }
        if modulus.ctx() != base {
            return Err(Error::CtxMismatch);
        }
        let deg = modulus
            .degree()
            .ok_or_else(|| Error::ReducibleModulus("0".into()))?;
        if deg == 0 || !modulus.lead().eq(&Elt::ONE) {
            return Err(Error::InvalidField(format!(
                "modulus {modulus} must be monic of positive degree"
            )));
        }
        if !modulus.is_irreducible() {
            return Err(Error::ReducibleModulus(modulus.to_string()));
        }
        if deg == 1 {
            return Ok(base.clone());
        }
        let coeffs: Vec<u64> = modulus.coeffs().iter().map(|c| c.index()).collect();
        Self::from_irreducible(base.characteristic(), coeffs, "g")
    }

    /// `F_{p^n}` defined by the first monic irreducible of degree `n` in
    /// canonical coefficient order.
    pub fn with_degree(p: u64, n: u32) -> Result<FieldCtx> {
        let base = FieldCtx::prime(p)?;
        if n == 1 {
            return Ok(base);
        }
        check_size(p, n)?;
        let lower = p.pow(n); // number of candidate lower-coefficient vectors
        for idx in 0..lower {
            let mut coeffs = Vec::with_capacity(n as usize + 1);
            let mut rest = idx;
            for _ in 0..n {
                coeffs.push(base.elt_unchecked(rest % p));
                rest /= p;
            }
            coeffs.push(Elt::ONE);
            let m = UniPoly::from_coeffs(&base, coeffs);
            if m.is_irreducible() {
                return FieldCtx::extension(&base, &m);
            }
        }
        Err(Error::InvalidField(format!("no irreducible of degree {n} over F_{p}")))
    }

    fn from_irreducible(p: u64, modulus: Vec<u64>, symbol: &str) -> Result<FieldCtx> {
        let n = (modulus.len() - 1) as u32;
        check_size(p, n)?;
        let q = p.pow(n);
        let mut ctx = FieldCtx(Arc::new(Inner {
            p,
            n,
            q,
            modulus,
            symbol: symbol.to_string(),
            tables: None,
        }));
        if q <= TABLE_LIMIT {
            let tables = ctx.build_tables();
            Arc::get_mut(&mut ctx.0).expect("fresh context").tables = Some(tables);
        }
        Ok(ctx)
    }

    fn build_tables(&self) -> LogTables {
        let q = self.order();
        let factors = prime_factors(q - 1);
        let generator = (2..q)
            .map(Elt)
            .find(|&g| factors.iter().all(|r| self.pow(g, (q - 1) / r) != Elt::ONE))
            .expect("multiplicative group is cyclic");
        let order = (q - 1) as usize;
        let mut exp = vec![0u64; 2 * order];
        let mut log = vec![0u32; q as usize];
        let mut cur = Elt::ONE;
        for i in 0..order {
            exp[i] = cur.0;
            exp[i + order] = cur.0;
            log[cur.0 as usize] = i as u32;
            cur = self.mul_poly(cur, generator);
        }
        LogTables { exp, log }
    }

    /// Returns the same field with a different display symbol for the generator.
    pub fn with_symbol(&self, symbol: &str) -> FieldCtx {
        let inner = &self.0;
        let tables = inner.tables.as_ref().map(|t| LogTables {
            exp: t.exp.clone(),
            log: t.log.clone(),
        });
        FieldCtx(Arc::new(Inner {
            p: inner.p,
            n: inner.n,
            q: inner.q,
            modulus: inner.modulus.clone(),
            symbol: symbol.to_string(),
            tables,
        }))
    }

    #[inline]
    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.n
    }

    /// Number of elements `q = p^n`.
    #[inline]
    pub fn order(&self) -> u64 {
        self.0.q
    }

    pub fn symbol(&self) -> &str {
        &self.0.symbol
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.n == 1
    }

    /// Defining polynomial over the prime field, if this is an extension.
    pub fn modulus(&self) -> Option<UniPoly> {
        if self.is_prime_field() {
            return None;
        }
        let base = FieldCtx::prime(self.0.p).expect("characteristic is prime");
        let coeffs = self.0.modulus.iter().map(|&c| Elt(c)).collect();
        Some(UniPoly::from_coeffs(&base, coeffs))
    }

    /// The prime subfield `F_p` as its own context.
    pub fn prime_subfield(&self) -> FieldCtx {
        if self.is_prime_field() {
            self.clone()
        } else {
            FieldCtx::prime(self.0.p).expect("characteristic is prime")
        }
    }

    /// Short human description, e.g. `F_11` or `F_2^4 (g^4+g+1)`.
    pub fn describe(&self) -> String {
        if self.is_prime_field() {
            format!("F_{}", self.0.p)
        } else {
            let m = self.modulus().expect("extension");
            let mut text = String::new();
            for (i, c) in m.coeffs().iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                if !text.is_empty() {
                    text.push('+');
                }
                let coeff = if c.0 != 1 || i == 0 { c.0.to_string() } else { String::new() };
                let mono = match i {
                    0 => String::new(),
                    1 => self.0.symbol.clone(),
                    _ => format!("{}^{}", self.0.symbol, i),
                };
                if !coeff.is_empty() && !mono.is_empty() {
                    text.push_str(&format!("{coeff}*{mono}"));
                } else {
                    text.push_str(&coeff);
                    text.push_str(&mono);
                }
            }
            format!("F_{}^{} ({})", self.0.p, self.0.n, text)
        }
    }

    #[inline]
    pub fn zero(&self) -> Elt {
        Elt::ZERO
    }

    #[inline]
    pub fn one(&self) -> Elt {
        Elt::ONE
    }

    /// Element with the given canonical index.
    pub fn elt(&self, index: u64) -> Result<Elt> {
        if index < self.0.q {
            Ok(Elt(index))
        } else {
            Err(Error::CtxMismatch)
        }
    }

    #[inline]
    pub(crate) fn elt_unchecked(&self, index: u64) -> Elt {
        debug_assert!(index < self.0.q);
        Elt(index)
    }

    #[inline]
    pub fn contains(&self, e: Elt) -> bool {
        e.0 < self.0.q
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, n: i128) -> Elt {
        let p = self.0.p as i128;
        Elt(n.rem_euclid(p) as u64)
    }

    /// The class of `Y` in an extension field; `None` for prime fields.
    pub fn generator(&self) -> Option<Elt> {
        if self.is_prime_field() {
            None
        } else {
            Some(Elt(self.0.p))
        }
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Elt> + Clone {
        (0..self.0.q).map(Elt)
    }

    /// All nonzero elements in canonical order.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elt> + Clone {
        (1..self.0.q).map(Elt)
    }

    /// Little-endian coefficient vector of length `n`.
    pub fn digits(&self, e: Elt) -> Vec<u64> {
        let p = self.0.p;
        let mut rest = e.0;
        (0..self.0.n)
            .map(|_| {
                let d = rest % p;
                rest /= p;
                d
            })
            .collect()
    }

    /// Inverse of [`digits`](Self::digits); extra digits must be zero.
    pub fn from_digits(&self, digits: &[u64]) -> Result<Elt> {
        let p = self.0.p;
        if digits.len() > self.0.n as usize && digits[self.0.n as usize..].iter().any(|&d| d % p != 0) {
            return Err(Error::CtxMismatch);
        }
        let mut idx = 0u64;
        for &d in digits.iter().take(self.0.n as usize).rev() {
            idx = idx * p + d % p;
        }
        Ok(Elt(idx))
    }

    #[inline]
    pub fn add(&self, a: Elt, b: Elt) -> Elt {
        let p = self.0.p;
        if self.0.n == 1 {
            return Elt(add_mod(a.0, b.0, p));
        }
        if p == 2 {
            return Elt(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u64;
        let mut scale = 1u64;
        for _ in 0..self.0.n {
            out += add_mod(x % p, y % p, p) * scale;
            x /= p;
            y /= p;
            scale = scale.wrapping_mul(p);
        }
        Elt(out)
    }

    #[inline]
    pub fn neg(&self, a: Elt) -> Elt {
        let p = self.0.p;
        if self.0.n == 1 {
            return Elt(sub_mod(0, a.0, p));
        }
        if p == 2 {
            return a;
        }
        let mut x = a.0;
        let mut out = 0u64;
        let mut scale = 1u64;
        for _ in 0..self.0.n {
            out += sub_mod(0, x % p, p) * scale;
            x /= p;
            scale = scale.wrapping_mul(p);
        }
        Elt(out)
    }

    #[inline]
    pub fn sub(&self, a: Elt, b: Elt) -> Elt {
        let p = self.0.p;
        if self.0.n == 1 {
            return Elt(sub_mod(a.0, b.0, p));
        }
        if p == 2 {
            return Elt(a.0 ^ b.0);
        }
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elt, b: Elt) -> Elt {
        if self.0.n == 1 {
            return Elt(mul_mod(a.0, b.0, self.0.p));
        }
        if a.0 == 0 || b.0 == 0 {
            return Elt::ZERO;
        }
        if let Some(t) = &self.0.tables {
            let i = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
            return Elt(t.exp[i]);
        }
        self.mul_poly(a, b)
    }

    /// Schoolbook multiplication modulo the defining polynomial.
    fn mul_poly(&self, a: Elt, b: Elt) -> Elt {
        let p = self.0.p;
        let n = self.0.n as usize;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = add_mod(prod[i + j], mul_mod(x, y, p), p);
            }
        }
        let m = &self.0.modulus;
        for k in (n..2 * n - 1).rev() {
            let t = prod[k];
            if t == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..n {
                prod[k - n + i] = sub_mod(prod[k - n + i], mul_mod(t, m[i], p), p);
            }
        }
        self.from_digits(&prod[..n]).expect("reduced")
    }

    pub fn pow(&self, a: Elt, exp: u64) -> Elt {
        if exp == 0 {
            return Elt::ONE;
        }
        if a.0 == 0 {
            return Elt::ZERO;
        }
        if let Some(t) = &self.0.tables {
            let order = (self.0.q - 1) as u128;
            let e = (t.log[a.0 as usize] as u128 * (exp as u128 % order)) % order;
            return Elt(t.exp[e as usize]);
        }
        let mut base = a;
        let mut acc = Elt::ONE;
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    pub fn inv(&self, a: Elt) -> Result<Elt> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        if self.0.n == 1 {
            // extended Euclid on residues
            let p = self.0.p as i128;
            let (mut r0, mut r1) = (p, a.0 as i128);
            let (mut t0, mut t1) = (0i128, 1i128);
            while r1 != 0 {
                let qt = r0 / r1;
                (r0, r1) = (r1, r0 - qt * r1);
                (t0, t1) = (t1, t0 - qt * t1);
            }
            return Ok(Elt(t0.rem_euclid(p) as u64));
        }
        if let Some(t) = &self.0.tables {
            let order = (self.0.q - 1) as usize;
            let l = t.log[a.0 as usize] as usize;
            return Ok(Elt(t.exp[(order - l) % order]));
        }
        Ok(self.pow(a, self.0.q - 2))
    }

    pub fn div(&self, a: Elt, b: Elt) -> Result<Elt> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^p`.
    pub fn frobenius(&self, a: Elt) -> Elt {
        if self.0.n == 1 {
            a
        } else {
            self.pow(a, self.0.p)
        }
    }

    /// The unique `p`-th root (the inverse Frobenius).
    pub fn pth_root(&self, a: Elt) -> Elt {
        if self.0.n == 1 {
            a
        } else {
            self.pow(a, self.0.q / self.0.p)
        }
    }

    pub fn is_square(&self, a: Elt) -> bool {
        if a.0 == 0 || self.0.p == 2 {
            return true;
        }
        self.pow(a, (self.0.q - 1) / 2) == Elt::ONE
    }

    /// Square root; of the two roots the one with the smaller canonical index.
    pub fn sqrt(&self, a: Elt) -> Result<Elt> {
        if a.0 == 0 {
            return Ok(Elt::ZERO);
        }
        let q = self.0.q;
        if self.0.p == 2 {
            return Ok(self.pow(a, q / 2));
        }
        if !self.is_square(a) {
            return Err(Error::NotASquare);
        }
        let root = if q % 4 == 3 {
            self.pow(a, ((q as u128 + 1) / 4) as u64)
        } else {
            self.tonelli_shanks(a)
        };
        debug_assert_eq!(self.mul(root, root), a);
        let other = self.neg(root);
        Ok(root.min(other))
    }

    fn tonelli_shanks(&self, a: Elt) -> Elt {
        let q = self.0.q;
        let mut s = 0u32;
        let mut t = q - 1;
        while t.is_multiple_of(2) {
            t /= 2;
            s += 1;
        }
        let non_residue = self
            .nonzero_elements()
            .find(|&z| !self.is_square(z))
            .expect("odd field has non-squares");
        let mut m = s;
        let mut c = self.pow(non_residue, t);
        let mut tt = self.pow(a, t);
        let mut r = self.pow(a, t.div_ceil(2));
        while tt != Elt::ONE {
            let mut i = 0u32;
            let mut probe = tt;
            while probe != Elt::ONE {
                probe = self.mul(probe, probe);
                i += 1;
            }
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = self.mul(b, b);
            }
            m = i;
            c = self.mul(b, b);
            tt = self.mul(tt, c);
            r = self.mul(r, b);
        }
        r
    }

    /// Text form: decimal for prime fields, polynomial in the generator symbol otherwise.
    pub fn format_elt(&self, e: Elt) -> String {
        if self.is_prime_field() {
            return e.0.to_string();
        }
        if e.0 == 0 {
            return "0".into();
        }
        let digits = self.digits(e);
        let sym = &self.0.symbol;
        let mut parts = Vec::new();
        for (i, &d) in digits.iter().enumerate().rev() {
            if d == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => sym.clone(),
                _ => format!("{sym}^{i}"),
            };
            parts.push(match (d, mono.is_empty()) {
                (_, true) => d.to_string(),
                (1, false) => mono,
                (_, false) => format!("{d}*{mono}"),
            });
        }
        parts.join("+")
    }

    /// Parses a decimal integer or an expression in the generator symbol.
    pub fn parse_elt(&self, text: &str) -> Result<Elt> {
        parse::parse_elt(self, text)
    }

    /// JSON form: integer for prime fields, little-endian digit list otherwise.
    pub fn elt_to_json(&self, e: Elt) -> Value {
        if self.is_prime_field() {
            Value::from(e.0)
        } else {
            Value::from(self.digits(e))
        }
    }

    pub fn elt_from_json(&self, v: &Value) -> Result<Elt> {
        match v {
            Value::Number(n) => {
                let n = n
                    .as_i64()
                    .map(i128::from)
                    .or_else(|| n.as_u64().map(i128::from))
                    .ok_or_else(|| Error::Parse(format!("bad element {v}")))?;
                Ok(self.from_int(n))
            }
            Value::Array(items) => {
                let digits = items
                    .iter()
                    .map(|d| d.as_u64().ok_or_else(|| Error::Parse(format!("bad digit {d}"))))
                    .collect::<Result<Vec<_>>>()?;
                if digits.iter().any(|&d| d >= self.0.p) {
                    return Err(Error::CtxMismatch);
                }
                self.from_digits(&digits)
            }
            Value::String(s) => self.parse_elt(s),
            _ => Err(Error::Parse(format!("bad element {v}"))),
        }
    }
}

fn check_size(p: u64, n: u32) -> Result<()> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::InvalidField(format!("extension degree {n} out of range")));
    }
    if p.checked_pow(n).is_none() {
        return Err(Error::InvalidField(format!("{p}^{n} does not fit in 64 bits")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f16() -> FieldCtx {
        let f2 = FieldCtx::prime(2).unwrap();
        let m = UniPoly::from_ints(&f2, &[1, 1, 0, 0, 1]);
        FieldCtx::extension(&f2, &m).unwrap()
    }

    #[test]
    fn prime_construction() {
        assert_eq!(FieldCtx::prime(11).unwrap().order(), 11);
        assert_eq!(FieldCtx::prime(2).unwrap().order(), 2);
        assert_eq!(FieldCtx::prime(15).unwrap_err(), Error::CompositeModulus(15));
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn extension_construction() {
        let f2 = FieldCtx::prime(2).unwrap();
        assert_eq!(f16().order(), 16);
        let reducible = UniPoly::from_ints(&f2, &[1, 0, 1]);
        assert!(matches!(FieldCtx::extension(&f2, &reducible), Err(Error::ReducibleModulus(_))));
        // Y^2 + 1 has no root mod 11: brute-force root check
        let f11 = FieldCtx::prime(11).unwrap();
        assert!((0..11u64).all(|y| (y * y + 1) % 11 != 0));
        let m = UniPoly::from_ints(&f11, &[1, 0, 1]);
        assert_eq!(FieldCtx::extension(&f11, &m).unwrap().order(), 121);
    }

    #[test]
    fn basic_arithmetic() {
        let f11 = FieldCtx::prime(11).unwrap();
        assert_eq!(f11.inv(Elt(7)).unwrap(), Elt(8));
        assert_eq!(f11.inv(Elt(0)), Err(Error::DivisionByZero));
        let f = f16();
        let g = f.generator().unwrap();
        // g^4 = g + 1
        assert_eq!(f.pow(g, 4), f.add(g, Elt::ONE));
        assert_eq!(f.format_elt(f.pow(g, 4)), "g+1");
        for ctx in [f11, f] {
            for e in ctx.nonzero_elements() {
                assert_eq!(ctx.pow(e, ctx.order() - 1), Elt::ONE);
            }
        }
    }

    #[test]
    fn table_and_schoolbook_agree() {
        let f = f16();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.mul(a, b), f.mul_poly(a, b));
            }
        }
    }

    #[test]
    fn squares_mod_11() {
        let f11 = FieldCtx::prime(11).unwrap();
        let squares: Vec<u64> = {
            let mut s: Vec<u64> = (0..11u64).map(|x| x * x % 11).collect();
            s.sort();
            s.dedup();
            s
        };
        assert_eq!(squares, vec![0, 1, 3, 4, 5, 9]);
        assert!(f11.is_square(Elt(3)));
        assert!(!f11.is_square(Elt(2)));
        assert!(f11.is_square(Elt(0)));
        assert_eq!(f11.sqrt(Elt(3)).unwrap(), Elt(5));
        assert_eq!(f11.sqrt(Elt(2)), Err(Error::NotASquare));
    }

    #[test]
    fn char2_sqrt_is_inverse_frobenius() {
        let f = f16();
        for e in f.elements() {
            let r = f.sqrt(e).unwrap();
            assert_eq!(r, f.pow(e, 8));
            assert_eq!(f.mul(r, r), e);
        }
    }

    #[test]
    fn is_square_matches_enumeration_small_fields() {
        let mut fields = Vec::new();
        for p in [3u64, 5, 7, 11, 13, 17, 257] {
            fields.push(FieldCtx::prime(p).unwrap());
        }
        for (p, n) in [(3u64, 2u32), (5, 2), (7, 2), (3, 3), (2, 5), (17, 2), (3, 5)] {
            fields.push(FieldCtx::with_degree(p, n).unwrap());
        }
        for ctx in fields {
            assert!(ctx.order() <= 289);
            let mut is_sq = vec![false; ctx.order() as usize];
            for s in ctx.elements() {
                is_sq[ctx.mul(s, s).index() as usize] = true;
            }
            for e in ctx.elements() {
                assert_eq!(ctx.is_square(e), is_sq[e.index() as usize], "{ctx:?} {e:?}");
                if is_sq[e.index() as usize] {
                    let r = ctx.sqrt(e).unwrap();
                    assert_eq!(ctx.mul(r, r), e);
                }
            }
        }
    }

    #[test]
    fn large_extension_without_tables() {
        // 3^13 > 2^16 takes the schoolbook path
        let ctx = FieldCtx::with_degree(3, 13).unwrap();
        let g = ctx.generator().unwrap();
        let x = ctx.add(ctx.pow(g, 5), Elt::ONE);
        let inv = ctx.inv(x).unwrap();
        assert_eq!(ctx.mul(x, inv), Elt::ONE);
        assert_eq!(ctx.pow(x, ctx.order() - 1), Elt::ONE);
        let y = ctx.mul(x, x);
        assert_eq!(ctx.mul(ctx.sqrt(y).unwrap(), ctx.sqrt(y).unwrap()), y);
    }

    #[test]
    fn element_text_and_json() {
        let f = f16();
        let e = f.parse_elt("g^3+g^2+g").unwrap();
        assert_eq!(f.digits(e), vec![0, 1, 1, 1]);
        assert_eq!(f.format_elt(e), "g^3+g^2+g");
        assert_eq!(f.elt_to_json(e), serde_json::json!([0, 1, 1, 1]));
        assert_eq!(f.elt_from_json(&serde_json::json!([0, 1, 1, 1])).unwrap(), e);
        let f11 = FieldCtx::prime(11).unwrap();
        assert_eq!(f11.parse_elt("-1").unwrap(), Elt(10));
        assert_eq!(f11.elt_to_json(Elt(7)), serde_json::json!(7));
    }
}
