//! c-boomerang systems, connectivity tables and uniformity.
//!
//! With `z = x + y` an entry of the table at `(a, b)` counts the common zeros of
//!
//! ```text
//! F1 = f(z) - c f(x) - b
//! F2 = c f(z + a) - f(x + a) - c b
//! ```
//!
//! over `F_q^2`.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bpoly::{BiPoly, Var};
use crate::error::{Error, Result};
use crate::gf::{Elt, FieldCtx};
use crate::upoly::{gcd_u64, UniPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `c^2 != 1`.
    General,
    /// `c = 1` (including characteristic 2, where `-1 = 1`).
    COne,
    /// `c = -1` in odd characteristic.
    CMinusOne,
}

impl Mode {
    pub fn of(ctx: &FieldCtx, c: Elt) -> Mode {
        if c == Elt::ONE {
            Mode::COne
        } else if c == ctx.neg(Elt::ONE) {
            Mode::CMinusOne
        } else {
            Mode::General
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::General => "c^2!=1",
            Mode::COne => "c=1",
            Mode::CMinusOne => "c=-1",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoomerangSystem {
    pub f: UniPoly,
    pub c: Elt,
    pub a: Elt,
    pub b: Elt,
    pub f1: BiPoly,
    pub f2: BiPoly,
    /// `c^-1 F2 - F1`, further divided by `z - x` when `c = 1`.
    pub g2: BiPoly,
    pub mode: Mode,
}

impl BoomerangSystem {
    pub fn ctx(&self) -> &FieldCtx {
        self.f.ctx()
    }

    /// The generators `[F1, G2]` used for Gröbner computations.
    pub fn generators(&self) -> Vec<BiPoly> {
        vec![self.f1.clone(), self.g2.clone()]
    }

    pub fn to_json(&self) -> Value {
        let ctx = self.ctx();
        json!({
            "field": ctx.describe(),
            "f": self.f.to_string(),
            "c": ctx.elt_to_json(self.c),
            "a": ctx.elt_to_json(self.a),
            "b": ctx.elt_to_json(self.b),
            "mode": self.mode.name(),
            "F1": self.f1.to_string(),
            "F2": self.f2.to_string(),
            "G2": self.g2.to_string(),
        })
    }
}

pub fn build_system(f: &UniPoly, c: Elt, a: Elt, b: Elt) -> Result<BoomerangSystem> {
    let ctx = f.ctx();
    for e in [c, a, b] {
        if !ctx.contains(e) {
            return Err(Error::CtxMismatch);
        }
    }
    if c.is_zero() {
        return Err(Error::CZero);
    }
    if a.is_zero() {
        return Err(Error::AZero);
    }
    let mode = Mode::of(ctx, c);
    let fz = BiPoly::from_uni_in(Var::Z, f);
    let fx = BiPoly::from_uni_in(Var::X, f);
    let cb = BiPoly::constant(ctx, ctx.mul(c, b));
    let f1 = &(&fz - &fx.scale(c)) - &BiPoly::constant(ctx, b);
    let f2 = &(&fz.shift(Var::Z, a).scale(c) - &fx.shift(Var::X, a)) - &cb;
    let diff = &f2.scale(ctx.inv(c)?) - &f1;
    let g2 = match mode {
        Mode::COne => diff.divide_exact_by_z_minus_x()?,
        _ => diff,
    };
    Ok(BoomerangSystem { f: f.clone(), c, a, b, f1, f2, g2, mode })
}

fn check_elts(ctx: &FieldCtx, elts: &[Elt]) -> Result<()> {
    if elts.iter().all(|&e| ctx.contains(e)) {
        Ok(())
    } else {
        Err(Error::CtxMismatch)
    }
}

/// Entry of the c-BCT by enumeration of all `(x, y)`.
pub fn bct_entry(f: &UniPoly, c: Elt, a: Elt, b: Elt) -> Result<usize> {
    let ctx = f.ctx();
    check_elts(ctx, &[c, a, b])?;
    if c.is_zero() {
        return Err(Error::CZero);
    }
    let t = f.value_table();
    let v = |e: Elt| t[e.index() as usize];
    let cb = ctx.mul(c, b);
    let mut count = 0;
    for x in ctx.elements() {
        let lhs1 = ctx.add(ctx.mul(c, v(x)), b);
        let fxa = v(ctx.add(x, a));
        for y in ctx.elements() {
            let z = ctx.add(x, y);
            if v(z) == lhs1 && ctx.sub(ctx.mul(c, v(ctx.add(z, a))), fxa) == cb {
                count += 1;
            }
        }
    }
    Ok(count)
}

fn inverse_table(ctx: &FieldCtx, table: &[Elt]) -> Result<Vec<Elt>> {
    let mut inv = vec![None; table.len()];
    for (i, &y) in table.iter().enumerate() {
        let slot = &mut inv[y.index() as usize];
        if slot.is_some() {
            return Err(Error::NotAPermutation);
        }
        *slot = Some(ctx.elt_unchecked(i as u64));
    }
    Ok(inv.into_iter().map(|e| e.expect("bijective")).collect())
}

pub fn is_permutation(f: &UniPoly) -> bool {
    inverse_table(f.ctx(), &f.value_table()).is_ok()
}

/// The same entry counted through the inverse permutation:
/// `#{x : F^-1(c^-1 F(x+a) + b) - F^-1(c F(x) + b) = a}`.
pub fn bct_entry_permutation_form(f: &UniPoly, c: Elt, a: Elt, b: Elt) -> Result<usize> {
    let ctx = f.ctx();
    check_elts(ctx, &[c, a, b])?;
    if c.is_zero() {
        return Err(Error::CZero);
    }
    let t = f.value_table();
    let inv = inverse_table(ctx, &t)?;
    let v = |e: Elt| t[e.index() as usize];
    let w = |e: Elt| inv[e.index() as usize];
    let ci = ctx.inv(c)?;
    Ok(ctx
        .elements()
        .filter(|&x| {
            let u = w(ctx.add(ctx.mul(ci, v(ctx.add(x, a))), b));
            let s = w(ctx.add(ctx.mul(c, v(x)), b));
            ctx.sub(u, s) == a
        })
        .count())
}

/// `#{x : f(x + a) - f(x) = b}`.
pub fn ddt_entry(f: &UniPoly, a: Elt, b: Elt) -> Result<usize> {
    let ctx = f.ctx();
    check_elts(ctx, &[a, b])?;
    let t = f.value_table();
    let v = |e: Elt| t[e.index() as usize];
    Ok(ctx.elements().filter(|&x| ctx.sub(v(ctx.add(x, a)), v(x)) == b).count())
}

/// All entries of the row at `a`, indexed by `b`.
///
/// Eliminating `b` leaves `c (f(z+a) - f(z)) = f(x+a) - c^2 f(x)`; each
/// solution `(x, z)` of that contributes to `b = f(z) - c f(x)`.
pub(crate) fn bct_row(ctx: &FieldCtx, table: &[Elt], c: Elt, a: Elt) -> Vec<u32> {
    let q = table.len();
    let v = |i: usize| table[i];
    let shift = |i: usize| ctx.add(ctx.elt_unchecked(i as u64), a).index() as usize;
    let c2 = ctx.mul(c, c);
    let left: Vec<usize> = (0..q).map(|z| ctx.mul(c, ctx.sub(v(shift(z)), v(z))).index() as usize).collect();
    // bucket z by left value (counting sort)
    let mut start = vec![0usize; q + 1];
    for &l in &left {
        start[l + 1] += 1;
    }
    for i in 0..q {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut bucket = vec![0usize; q];
    for (z, &l) in left.iter().enumerate() {
        bucket[fill[l]] = z;
        fill[l] += 1;
    }
    let mut counts = vec![0u32; q];
    for x in 0..q {
        let r = ctx.sub(v(shift(x)), ctx.mul(c2, v(x))).index() as usize;
        let cfx = ctx.mul(c, v(x));
        for &z in &bucket[start[r]..start[r + 1]] {
            counts[ctx.sub(v(z), cfx).index() as usize] += 1;
        }
    }
    counts
}

/// Dense c-BCT over `a` in `F_q^x` (or all of `F_q`) and `b` in `F_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BctTable {
    pub ctx: FieldCtx,
    pub f: UniPoly,
    pub c: Elt,
    pub a_values: Vec<Elt>,
    /// `counts[i][b.index()]` is the entry at `(a_values[i], b)`.
    pub counts: Vec<Vec<u32>>,
}

impl BctTable {
    pub fn compute(f: &UniPoly, c: Elt, include_a_zero: bool) -> Result<BctTable> {
        let ctx = f.ctx();
        check_elts(ctx, &[c])?;
        if c.is_zero() {
            return Err(Error::CZero);
        }
        let table = f.value_table();
        let a_values: Vec<Elt> = if include_a_zero { ctx.elements().collect() } else { ctx.nonzero_elements().collect() };
        let counts = a_values.par_iter().map(|&a| bct_row(ctx, &table, c, a)).collect();
        Ok(BctTable { ctx: ctx.clone(), f: f.clone(), c, a_values, counts })
    }

    pub fn entry(&self, a: Elt, b: Elt) -> Option<u32> {
        let i = self.a_values.iter().position(|&x| x == a)?;
        self.counts[i].get(b.index() as usize).copied()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "field": self.ctx.describe(),
            "f": self.f.to_string(),
            "c": self.ctx.elt_to_json(self.c),
            "a": self.a_values.iter().map(|&a| self.ctx.elt_to_json(a)).collect::<Vec<_>>(),
            "rows": self.counts,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundSource {
    /// `d^2` for `c^2 != 1`.
    CSquareNotOne,
    /// `d (d - 1)` for `c = -1`.
    CMinusOne,
    /// `d (d - 2)` for `c = 1`.
    COne,
    /// `d (d - 2) - 1` for `c = 1` in characteristic 2.
    COneBinary,
}

impl BoundSource {
    pub fn describe(self) -> &'static str {
        match self {
            BoundSource::CSquareNotOne => "d^2 (c^2 != 1)",
            BoundSource::CMinusOne => "d(d-1) (c = -1, odd characteristic)",
            BoundSource::COne => "d(d-2) (c = 1)",
            BoundSource::COneBinary => "d(d-2)-1 (c = 1, characteristic 2)",
        }
    }
}

/// Upper bound on `max_{a,b != 0}` entries for a polynomial of degree `d`.
pub fn applicable_bound(d: u64, c: Elt, ctx: &FieldCtx) -> Result<(u64, BoundSource)> {
    check_elts(ctx, &[c])?;
    if c.is_zero() {
        return Err(Error::CZero);
    }
    if gcd_u64(d, ctx.order()) != 1 {
        return Err(Error::NoBound(format!("gcd({d}, {}) != 1", ctx.order())));
    }
    match Mode::of(ctx, c) {
        Mode::General => Ok((d * d, BoundSource::CSquareNotOne)),
        Mode::CMinusOne => Ok((d * (d - 1), BoundSource::CMinusOne)),
        Mode::COne if d < 2 => Err(Error::NoBound("affine f with c = 1 has q solutions".into())),
        Mode::COne if ctx.characteristic() == 2 => Ok((d * (d - 2) - 1, BoundSource::COneBinary)),
        Mode::COne => Ok((d * (d - 2), BoundSource::COne)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UniformityOptions {
    /// Largest field order accepted.
    pub max_order: u64,
    /// Scan `a, b` over all of `F_q` instead of `F_q^x`.
    pub full_grid: bool,
}

impl Default for UniformityOptions {
    fn default() -> Self {
        UniformityOptions { max_order: 512, full_grid: false }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub a: Elt,
    pub b: Elt,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformityReport {
    pub field: String,
    pub f: String,
    pub c: Elt,
    pub beta: usize,
    /// Every maximizing `(a, b)`, in index order.
    pub witnesses: Vec<Witness>,
    pub bound: Option<u64>,
    pub bound_source: String,
    /// `beta <= bound`; `None` without a bound.
    pub pass: Option<bool>,
    pub full_grid: bool,
}

impl UniformityReport {
    pub fn to_json(&self, ctx: &FieldCtx) -> Value {
        json!({
            "field": self.field,
            "f": self.f,
            "c": ctx.elt_to_json(self.c),
            "beta": self.beta,
            "bound": self.bound,
            "bound_source": self.bound_source,
            "pass": self.pass,
            "full_grid": self.full_grid,
            "witnesses": self.witnesses.iter().map(|w| json!({
                "a": ctx.elt_to_json(w.a),
                "b": ctx.elt_to_json(w.b),
                "count": w.count,
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn uniformity(f: &UniPoly, c: Elt) -> Result<UniformityReport> {
    uniformity_with(f, c, UniformityOptions::default())
}

pub fn uniformity_with(f: &UniPoly, c: Elt, opts: UniformityOptions) -> Result<UniformityReport> {
    let ctx = f.ctx();
    check_elts(ctx, &[c])?;
    if c.is_zero() {
        return Err(Error::CZero);
    }
    if ctx.order() > opts.max_order {
        return Err(Error::BudgetExceeded(format!("q = {} exceeds the limit {}", ctx.order(), opts.max_order)));
    }
    let table = f.value_table();
    let a_values: Vec<Elt> = if opts.full_grid { ctx.elements().collect() } else { ctx.nonzero_elements().collect() };
    let b_start = if opts.full_grid { 0 } else { 1 };
    let rows: Vec<(u32, Vec<Witness>)> = a_values
        .par_iter()
        .map(|&a| {
            let counts = bct_row(ctx, &table, c, a);
            let best = counts[b_start..].iter().copied().max().unwrap_or(0);
            let ws = (b_start..counts.len())
                .filter(|&b| counts[b] == best)
                .map(|b| Witness { a, b: ctx.elt_unchecked(b as u64), count: best as usize })
                .collect();
            (best, ws)
        })
        .collect();
    let beta = rows.iter().map(|r| r.0).max().unwrap_or(0);
    let witnesses = rows.into_iter().filter(|r| r.0 == beta).flat_map(|r| r.1).collect();
    let (bound, bound_source) = match f.degree().map(|d| applicable_bound(d as u64, c, ctx)) {
        Some(Ok((bound, src))) => (Some(bound), src.describe().to_string()),
        Some(Err(e)) => (None, e.to_string()),
        None => (None, "zero polynomial".to_string()),
    };
    Ok(UniformityReport {
        field: ctx.describe(),
        f: f.to_string(),
        c,
        beta: beta as usize,
        witnesses,
        bound,
        bound_source,
        pass: bound.map(|bd| beta as u64 <= bd),
        full_grid: opts.full_grid,
    })
}
