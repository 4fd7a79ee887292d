//! Term orders, multivariate division, Buchberger's algorithm and FGLM for
//! ideals in `F_q[x, z]` with `z > x`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use crate::bpoly::{BiPoly, Monomial2};
use crate::error::{Error, Result};
use crate::gf::{Elt, FieldCtx};
use crate::upoly::UniPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// Degree reverse lexicographic, `z > x`.
    Drl,
    /// Lexicographic, `z > x`.
    Lex,
}

impl TermOrder {
    /// Sort key; larger keys are larger monomials.
    pub fn key(self, m: Monomial2) -> (u32, u32) {
        match self {
            TermOrder::Drl => (m.degree(), m.z),
            TermOrder::Lex => (m.z, m.x),
        }
    }

    fn from_key(self, k: (u32, u32)) -> Monomial2 {
        match self {
            TermOrder::Drl => Monomial2::new(k.0 - k.1, k.1),
            TermOrder::Lex => Monomial2::new(k.1, k.0),
        }
    }

    pub fn compare(self, a: Monomial2, b: Monomial2) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    pub fn leading_term(self, f: &BiPoly) -> Option<(Monomial2, Elt)> {
        f.terms().max_by_key(|(m, _)| self.key(*m))
    }

    pub fn leading_monomial(self, f: &BiPoly) -> Option<Monomial2> {
        self.leading_term(f).map(|(m, _)| m)
    }

    /// Terms in descending order.
    pub fn sorted_terms(self, f: &BiPoly) -> Vec<(Monomial2, Elt)> {
        let mut t: Vec<_> = f.terms().collect();
        t.sort_by_key(|(m, _)| std::cmp::Reverse(self.key(*m)));
        t
    }

    pub fn name(self) -> &'static str {
        match self {
            TermOrder::Drl => "drl",
            TermOrder::Lex => "lex",
        }
    }
}

pub fn compare(order: TermOrder, m1: Monomial2, m2: Monomial2) -> Ordering {
    order.compare(m1, m2)
}

/// Polynomial with terms sorted descending; `terms[0]` is the leading term.
#[derive(Debug, Clone)]
struct Sorted {
    terms: Vec<(Monomial2, Elt)>,
}

impl Sorted {
    fn new(order: TermOrder, f: &BiPoly) -> Sorted {
        Sorted { terms: order.sorted_terms(f) }
    }

    fn lm(&self) -> Monomial2 {
        self.terms[0].0
    }

    fn lc(&self) -> Elt {
        self.terms[0].1
    }

    fn monic(self, ctx: &FieldCtx) -> Sorted {
        let inv = ctx.inv(self.lc()).expect("nonzero leading coefficient");
        Sorted { terms: self.terms.into_iter().map(|(m, c)| (m, ctx.mul(c, inv))).collect() }
    }

    fn to_bipoly(&self, ctx: &FieldCtx) -> BiPoly {
        BiPoly::from_terms(ctx, self.terms.iter().copied())
    }
}

/// Working polynomial keyed by the active order.
struct Work {
    order: TermOrder,
    map: BTreeMap<(u32, u32), Elt>,
}

impl Work {
    fn new(order: TermOrder, terms: impl IntoIterator<Item = (Monomial2, Elt)>) -> Work {
        let map = terms.into_iter().map(|(m, c)| (order.key(m), c)).collect();
        Work { order, map }
    }

    fn sub_scaled(&mut self, ctx: &FieldCtx, coef: Elt, shift: Monomial2, terms: &[(Monomial2, Elt)]) {
        for &(m, c) in terms {
            let k = self.order.key(m.mul(shift));
            let t = ctx.mul(coef, c);
            match self.map.get_mut(&k) {
                Some(e) => {
                    *e = ctx.sub(*e, t);
                    if e.is_zero() {
                        self.map.remove(&k);
                    }
                }
                None => {
                    self.map.insert(k, ctx.neg(t));
                }
            }
        }
    }

    fn pop_leading(&mut self) -> Option<(Monomial2, Elt)> {
        self.map.pop_last().map(|(k, c)| (self.order.from_key(k), c))
    }
}

/// Full reduction; returns the remainder (descending) and optionally the quotients.
fn reduce(
    ctx: &FieldCtx,
    order: TermOrder,
    f: impl IntoIterator<Item = (Monomial2, Elt)>,
    basis: &[Sorted],
    mut quotients: Option<&mut Vec<Vec<(Monomial2, Elt)>>>,
) -> Vec<(Monomial2, Elt)> {
    let mut work = Work::new(order, f);
    let mut rem = Vec::new();
    while let Some((m, c)) = work.pop_leading() {
        match basis.iter().position(|g| g.lm().divides(m)) {
            Some(i) => {
                let g = &basis[i];
                let coef = ctx.div(c, g.lc()).expect("nonzero leading coefficient");
                let shift = g.lm().quotient_of(m).expect("divides");
                if let Some(q) = quotients.as_deref_mut() {
                    q[i].push((shift, coef));
                }
                work.sub_scaled(ctx, coef, shift, &g.terms[1..]);
            }
            None => rem.push((m, c)),
        }
    }
    rem
}

/// Multivariate division of `f` by `divisors` in list order.
///
/// Returns `(quotients, remainder)` with `f = sum q_i d_i + r`.
pub fn divide(f: &BiPoly, divisors: &[BiPoly], order: TermOrder) -> (Vec<BiPoly>, BiPoly) {
    let ctx = f.ctx();
    let basis: Vec<Sorted> = divisors.iter().map(|d| Sorted::new(order, d)).collect();
    assert!(basis.iter().all(|g| !g.terms.is_empty()), "divisors must be nonzero");
    let mut qs = vec![Vec::new(); basis.len()];
    let rem = reduce(ctx, order, f.terms(), &basis, Some(&mut qs));
    let quotients = qs.into_iter().map(|q| BiPoly::from_terms(ctx, q)).collect();
    (quotients, BiPoly::from_terms(ctx, rem))
}

/// Remainder of `f` on division by `divisors`.
pub fn remainder(f: &BiPoly, divisors: &[BiPoly], order: TermOrder) -> BiPoly {
    divide(f, divisors, order).1
}

fn s_poly_sorted(ctx: &FieldCtx, order: TermOrder, f: &Sorted, g: &Sorted) -> Vec<(Monomial2, Elt)> {
    let l = f.lm().lcm(g.lm());
    let sf = f.lm().quotient_of(l).expect("lcm");
    let sg = g.lm().quotient_of(l).expect("lcm");
    let cf = ctx.inv(f.lc()).expect("nonzero");
    let cg = ctx.inv(g.lc()).expect("nonzero");
    let mut work = Work::new(order, f.terms[1..].iter().map(|&(m, c)| (m.mul(sf), ctx.mul(c, cf))));
    work.sub_scaled(ctx, cg, sg, &g.terms[1..]);
    work.map.into_iter().rev().map(|(k, c)| (order.from_key(k), c)).collect()
}

/// `lcm/LT(f) * f - lcm/LT(g) * g`.
pub fn s_polynomial(f: &BiPoly, g: &BiPoly, order: TermOrder) -> BiPoly {
    let ctx = f.ctx();
    if f.is_zero() || g.is_zero() {
        return BiPoly::zero(ctx);
    }
    let terms = s_poly_sorted(ctx, order, &Sorted::new(order, f), &Sorted::new(order, g));
    BiPoly::from_terms(ctx, terms)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: TermOrder,
    /// Sorted descending by leading monomial.
    pub polys: Vec<BiPoly>,
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<Monomial2> {
        self.polys.iter().filter_map(|p| self.order.leading_monomial(p)).collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.leading_monomials().contains(&Monomial2::ONE)
    }

    /// Normal form of `f` modulo the basis.
    pub fn normal_form(&self, f: &BiPoly) -> BiPoly {
        remainder(f, &self.polys, self.order)
    }

    pub fn contains(&self, f: &BiPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order.name(),
            "reduced": self.reduced,
            "basis": self.polys.iter().map(BiPoly::to_json).collect::<Vec<_>>(),
        })
    }
}

fn finish_basis(ctx: &FieldCtx, order: TermOrder, mut g: Vec<Sorted>) -> GroebnerBasis {
    // drop elements whose leading monomial is a multiple of another's
    g.sort_by(|a, b| order.compare(a.lm(), b.lm()));
    let mut minimal: Vec<Sorted> = Vec::new();
    for p in g {
        if !minimal.iter().any(|q| q.lm().divides(p.lm())) {
            minimal.push(p);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Sorted> =
            minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, s)| s.clone()).collect();
        let head = minimal[i].terms[0];
        let tail = reduce(ctx, order, minimal[i].terms[1..].iter().copied(), &others, None);
        let mut terms = vec![head];
        terms.extend(tail);
        reduced.push(Sorted { terms }.monic(ctx));
    }
    reduced.sort_by(|a, b| order.compare(b.lm(), a.lm()));
    GroebnerBasis { order, polys: reduced.iter().map(|s| s.to_bipoly(ctx)).collect(), reduced: true }
}

/// Reduced Gröbner basis by Buchberger's algorithm.
///
/// Pairs are selected by smallest lcm (normal strategy), ties broken by
/// index; pairs with coprime leading monomials are skipped.
pub fn buchberger(generators: &[BiPoly], order: TermOrder) -> GroebnerBasis {
    let Some(ctx) = generators.first().map(|g| g.ctx().clone()) else {
        return GroebnerBasis { order, polys: Vec::new(), reduced: true };
    };
    let mut basis: Vec<Sorted> = Vec::new();
    let mut pairs: BTreeSet<((u32, u32), usize, usize)> = BTreeSet::new();
    let add = |basis: &mut Vec<Sorted>, pairs: &mut BTreeSet<_>, s: Sorted| {
        let s = s.monic(&ctx);
        let j = basis.len();
        for (i, g) in basis.iter().enumerate() {
            pairs.insert((order.key(g.lm().lcm(s.lm())), i, j));
        }
        basis.push(s);
    };
    for g in generators {
        let rem = reduce(&ctx, order, g.terms(), &basis, None);
        if !rem.is_empty() {
            add(&mut basis, &mut pairs, Sorted { terms: rem });
        }
    }
    while let Some((_, i, j)) = pairs.pop_first() {
        if basis[i].lm().is_coprime(basis[j].lm()) {
            continue;
        }
        let s = s_poly_sorted(&ctx, order, &basis[i], &basis[j]);
        let rem = reduce(&ctx, order, s, &basis, None);
        if !rem.is_empty() {
            add(&mut basis, &mut pairs, Sorted { terms: rem });
        }
    }
    finish_basis(&ctx, order, basis)
}

/// True iff every S-polynomial reduces to zero modulo `basis`.
pub fn verify_buchberger_criterion(basis: &[BiPoly], order: TermOrder) -> bool {
    let Some(ctx) = basis.first().map(|g| g.ctx().clone()) else {
        return true;
    };
    let sorted: Vec<Sorted> = basis.iter().filter(|p| !p.is_zero()).map(|p| Sorted::new(order, p)).collect();
    for i in 0..sorted.len() {
        for j in i + 1..sorted.len() {
            let s = s_poly_sorted(&ctx, order, &sorted[i], &sorted[j]);
            if !reduce(&ctx, order, s, &sorted, None).is_empty() {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Staircase {
    /// Minimal generators of the leading-monomial ideal.
    pub generators: Vec<Monomial2>,
    pub zero_dimensional: bool,
    /// Standard monomials, ascending in the basis order; `None` when infinite.
    pub standard: Option<Vec<Monomial2>>,
}

impl Staircase {
    pub fn count(&self) -> Option<usize> {
        self.standard.as_ref().map(Vec::len)
    }
}

pub fn staircase(basis: &GroebnerBasis) -> Staircase {
    let mut lms = basis.leading_monomials();
    lms.sort_by(|a, b| basis.order.compare(*b, *a));
    let mut generators: Vec<Monomial2> = Vec::new();
    for m in &lms {
        if !generators.iter().any(|g| g.divides(*m)) {
            generators.retain(|g| !m.divides(*g));
            generators.push(*m);
        }
    }
    generators.sort_by(|a, b| basis.order.compare(*b, *a));
    let x_pow = generators.iter().filter(|m| m.z == 0).map(|m| m.x).min();
    let z_pow = generators.iter().filter(|m| m.x == 0).map(|m| m.z).min();
    let standard = match (x_pow, z_pow) {
        (Some(ax), Some(az)) => {
            let mut v: Vec<Monomial2> = (0..az)
                .flat_map(|j| (0..ax).map(move |i| Monomial2::new(i, j)))
                .filter(|m| !generators.iter().any(|g| g.divides(*m)))
                .collect();
            v.sort_by(|a, b| basis.order.compare(*a, *b));
            Some(v)
        }
        _ => None,
    };
    Staircase { generators, zero_dimensional: standard.is_some(), standard }
}

/// Staircase count of the DRL basis of the top-degree components;
/// `None` when that ideal is not zero-dimensional.
pub fn dimension_bound_via_top_components(system: &[BiPoly]) -> Option<usize> {
    let tops: Vec<BiPoly> = system.iter().filter_map(|f| f.top_component().ok()).collect();
    if tops.is_empty() {
        return None;
    }
    staircase(&buchberger(&tops, TermOrder::Drl)).count()
}

/// Converts a zero-dimensional basis to the reduced basis in `target`.
pub fn fglm(basis: &GroebnerBasis, target: TermOrder) -> Result<GroebnerBasis> {
    let Some(ctx) = basis.polys.first().map(|p| p.ctx().clone()) else {
        return Err(Error::NotZeroDimensional);
    };
    let sc = staircase(basis);
    let std_monos = sc.standard.ok_or(Error::NotZeroDimensional)?;
    let dim = std_monos.len();
    if dim == 0 {
        return Ok(GroebnerBasis { order: target, polys: vec![BiPoly::constant(&ctx, Elt::ONE)], reduced: true });
    }
    let src: Vec<Sorted> = basis.polys.iter().map(|p| Sorted::new(basis.order, p)).collect();
    let index: BTreeMap<Monomial2, usize> = std_monos.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let to_vec = |terms: Vec<(Monomial2, Elt)>| -> Vec<Elt> {
        let mut v = vec![Elt::ZERO; dim];
        for (m, c) in terms {
            v[index[&m]] = c;
        }
        v
    };
    // columns: normal form of (variable * standard monomial)
    let mult_matrix = |shift: Monomial2| -> Vec<Vec<Elt>> {
        std_monos
            .iter()
            .map(|m| to_vec(reduce(&ctx, basis.order, [(m.mul(shift), Elt::ONE)], &src, None)))
            .collect()
    };
    let mx = mult_matrix(Monomial2::new(1, 0));
    let mz = mult_matrix(Monomial2::new(0, 1));
    let apply = |cols: &Vec<Vec<Elt>>, v: &[Elt]| -> Vec<Elt> {
        let mut out = vec![Elt::ZERO; dim];
        for (j, &vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for (o, &c) in out.iter_mut().zip(&cols[j]) {
                if !c.is_zero() {
                    *o = ctx.add(*o, ctx.mul(vj, c));
                }
            }
        }
        out
    };

    // new standard monomials with their normal-form vectors
    let mut new_std: Vec<(Monomial2, Vec<Elt>)> = Vec::new();
    // echelon rows: (pivot, row with pivot 1, combination over new_std indices)
    let mut rows: Vec<(usize, Vec<Elt>, Vec<Elt>)> = Vec::new();
    let mut out: Vec<Sorted> = Vec::new();
    let mut candidates: BTreeMap<(u32, u32), Vec<Elt>> = BTreeMap::new();
    let mut one = vec![Elt::ZERO; dim];
    one[index[&Monomial2::ONE]] = Elt::ONE;
    candidates.insert(target.key(Monomial2::ONE), one);

    while let Some((k, v)) = candidates.pop_first() {
        let m = target.from_key(k);
        if out.iter().any(|g| g.lm().divides(m)) {
            continue;
        }
        let n = new_std.len();
        let mut r = v.clone();
        let mut comb = vec![Elt::ZERO; n + 1];
        comb[n] = Elt::ONE;
        for (p, row, rc) in &rows {
            let c = r[*p];
            if c.is_zero() {
                continue;
            }
            for (a, &b) in r.iter_mut().zip(row) {
                *a = ctx.sub(*a, ctx.mul(c, b));
            }
            for (a, &b) in comb.iter_mut().zip(rc) {
                *a = ctx.sub(*a, ctx.mul(c, b));
            }
        }
        match r.iter().position(|c| !c.is_zero()) {
            None => {
                // m plus a combination of new standard monomials lies in the ideal
                let mut terms = vec![(m, Elt::ONE)];
                for i in (0..n).rev() {
                    if !comb[i].is_zero() {
                        terms.push((new_std[i].0, comb[i]));
                    }
                }
                terms[1..].sort_by_key(|(mm, _)| std::cmp::Reverse(target.key(*mm)));
                out.push(Sorted { terms });
            }
            Some(p) => {
                let inv = ctx.inv(r[p]).expect("nonzero pivot");
                let row: Vec<Elt> = r.iter().map(|&c| ctx.mul(c, inv)).collect();
                let rc: Vec<Elt> = comb.iter().map(|&c| ctx.mul(c, inv)).collect();
                rows.push((p, row, rc));
                for (shift, mat) in [(Monomial2::new(1, 0), &mx), (Monomial2::new(0, 1), &mz)] {
                    let nm = m.mul(shift);
                    candidates.entry(target.key(nm)).or_insert_with(|| apply(mat, &v));
                }
                new_std.push((m, v));
            }
        }
    }
    if new_std.len() != dim {
        return Err(Error::NotZeroDimensional);
    }
    out.sort_by(|a, b| target.compare(b.lm(), a.lm()));
    Ok(GroebnerBasis { order: target, polys: out.iter().map(|s| s.to_bipoly(&ctx)).collect(), reduced: true })
}

/// `(g1, g2)` when a LEX basis is exactly `{z - g1(x), g2(x)}`.
pub fn lex_shape(basis: &GroebnerBasis) -> Option<(UniPoly, UniPoly)> {
    if basis.order != TermOrder::Lex || basis.polys.len() != 2 {
        return None;
    }
    let ctx = basis.polys[0].ctx();
    let (mut lin, mut uni) = (None, None);
    for p in &basis.polys {
        match TermOrder::Lex.leading_monomial(p) {
            Some(m) if m == Monomial2::new(0, 1) => lin = Some(p),
            Some(m) if m.z == 0 => uni = Some(p),
            _ => return None,
        }
    }
    let (lin, uni) = (lin?, uni?);
    let z = BiPoly::var(ctx, crate::bpoly::Var::Z);
    let g1 = (&z - lin).as_univariate_in_x()?;
    let g2 = uni.as_univariate_in_x()?;
    Some((g1, g2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(ctx: &FieldCtx, s: &str) -> BiPoly {
        BiPoly::parse(ctx, s).unwrap()
    }

    #[test]
    fn order_comparisons() {
        let m = Monomial2::new;
        assert_eq!(compare(TermOrder::Drl, m(0, 2), m(1, 1)), Ordering::Greater);
        assert_eq!(compare(TermOrder::Lex, m(0, 1), m(9, 0)), Ordering::Greater);
        assert_eq!(compare(TermOrder::Drl, m(9, 0), m(0, 1)), Ordering::Greater);
        assert_eq!(compare(TermOrder::Drl, m(1, 1), m(1, 1)), Ordering::Equal);
    }

    #[test]
    fn division_examples() {
        let f = FieldCtx::prime(7).unwrap();
        let g = bp(&f, "z^2 x + 3 x + 1");
        let (q, r) = divide(&g, std::slice::from_ref(&g), TermOrder::Drl);
        assert!(r.is_zero());
        assert_eq!(q[0], BiPoly::constant(&f, Elt::ONE));
        let one = BiPoly::constant(&f, Elt::ONE);
        let (_, r) = divide(&one, &[bp(&f, "x"), bp(&f, "z")], TermOrder::Drl);
        assert_eq!(r, one);
    }

    #[test]
    fn s_polynomial_examples() {
        let f = FieldCtx::prime(11).unwrap();
        let a = bp(&f, "z^4 + x^4");
        let b = bp(&f, "z^5 + x^5");
        assert_eq!(s_polynomial(&a, &b, TermOrder::Drl), bp(&f, "z x^4 - x^5"));
        assert!(s_polynomial(&a, &a, TermOrder::Drl).is_zero());
        let s = s_polynomial(&bp(&f, "x"), &bp(&f, "z"), TermOrder::Drl);
        assert!(remainder(&s, &[bp(&f, "x"), bp(&f, "z")], TermOrder::Drl).is_zero());
    }

    #[test]
    fn top_ideal_c_minus_one_d5() {
        let f = FieldCtx::prime(11).unwrap();
        let gb = buchberger(&[bp(&f, "z^5 + x^5"), bp(&f, "z^4 + x^4")], TermOrder::Drl);
        assert_eq!(gb.polys, vec![bp(&f, "x^8"), bp(&f, "z x^4 - x^5"), bp(&f, "z^4 + x^4")]);
        assert_eq!(staircase(&gb).count(), Some(20));
        assert!(verify_buchberger_criterion(&gb.polys, TermOrder::Drl));
    }

    #[test]
    fn top_ideal_c_one_d5() {
        let f = FieldCtx::prime(11).unwrap();
        let sigma = bp(&f, "z^3 + z^2 x + z x^2 + x^3");
        let gb = buchberger(&[bp(&f, "z^5 - x^5"), sigma.clone()], TermOrder::Drl);
        assert_eq!(gb.polys, vec![bp(&f, "x^7"), bp(&f, "z x^4 - x^5"), sigma]);
        assert_eq!(staircase(&gb).count(), Some(15));
    }

    #[test]
    fn criterion_detects_incomplete_basis() {
        let f = FieldCtx::prime(7).unwrap();
        assert!(!verify_buchberger_criterion(&[bp(&f, "x + z"), bp(&f, "z - x")], TermOrder::Drl));
        let gb = buchberger(&[bp(&f, "x + z"), bp(&f, "z - x")], TermOrder::Drl);
        assert_eq!(gb.polys, vec![bp(&f, "z"), bp(&f, "x")]);
        assert_eq!(staircase(&gb).count(), Some(1));
    }

    #[test]
    fn single_generator_made_monic() {
        let f = FieldCtx::prime(7).unwrap();
        let gb = buchberger(&[bp(&f, "3 z^2 + x")], TermOrder::Drl);
        assert_eq!(gb.polys, vec![bp(&f, "z^2 + 5 x")]);
        assert!(!staircase(&gb).zero_dimensional);
        assert_eq!(fglm(&gb, TermOrder::Lex), Err(Error::NotZeroDimensional));
    }

    #[test]
    fn unit_ideal() {
        let f = FieldCtx::prime(7).unwrap();
        assert_eq!(dimension_bound_via_top_components(&[BiPoly::constant(&f, Elt::ONE)]), Some(0));
        let gb = buchberger(&[bp(&f, "x z - 1"), bp(&f, "x")], TermOrder::Drl);
        assert!(gb.is_unit_ideal());
    }

    #[test]
    fn fglm_shape() {
        let f = FieldCtx::prime(7).unwrap();
        let gb = buchberger(&[bp(&f, "z^2 + x"), bp(&f, "x^2 + z")], TermOrder::Drl);
        let lex = fglm(&gb, TermOrder::Lex).unwrap();
        assert_eq!(lex, buchberger(&gb.polys, TermOrder::Lex));
        let (g1, g2) = lex_shape(&lex).unwrap();
        assert_eq!(g2.degree(), Some(4));
        assert_eq!(g1, UniPoly::parse(&f, "-x^2").unwrap());
    }

    #[test]
    fn not_in_shape() {
        let f = FieldCtx::prime(7).unwrap();
        let lex = buchberger(&[bp(&f, "z^2 - x"), bp(&f, "x^3")], TermOrder::Lex);
        assert_eq!(lex_shape(&lex), None);
    }
}
