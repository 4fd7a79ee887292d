//! Search for `(a, b)` at which a boomerang bound is attained, and the
//! verifier for the embedded worked examples.
//!
//! A candidate passes when
//!
//! 1. the DRL staircase of `(F1, G2)` has exactly `target` standard monomials,
//! 2. the LEX basis has the shape `{z - g1(x), g2(x)}`,
//! 3. `g2` is squarefree, and
//! 4. `g2` has `target` roots over `F_{q^n}`, `n` the lcm of its factor degrees.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::boomerang::{applicable_bound, bct_entry, build_system, uniformity};
use crate::bpoly::BiPoly;
use crate::dickson::dickson;
use crate::error::{Error, Result};
use crate::gf::{Elt, FieldCtx};
use crate::groebner::{buchberger, fglm, lex_shape, staircase, GroebnerBasis, TermOrder};
use crate::upoly::{FactorList, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scan {
    /// Row-major over `F_q^x x F_q^x`, starting at `(1, 1)`.
    Exhaustive,
    Explicit(Vec<(Elt, Elt)>),
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub f: UniPoly,
    pub c: Elt,
    pub scan: Scan,
    /// Overrides the applicable bound as the target dimension.
    pub target: Option<u64>,
    /// Maximum number of candidates examined.
    pub budget: Option<usize>,
    /// Seed for the randomized factorization.
    pub seed: u64,
}

impl SearchConfig {
    pub fn new(f: UniPoly, c: Elt) -> SearchConfig {
        SearchConfig { f, c, scan: Scan::Exhaustive, target: None, budget: None, seed: 0 }
    }

    pub fn target(&self) -> Result<u64> {
        match self.target {
            Some(t) => Ok(t),
            None => {
                let d = self.f.degree().ok_or(Error::ZeroPolynomial)? as u64;
                Ok(applicable_bound(d, self.c, self.f.ctx())?.0)
            }
        }
    }

    fn candidates(&self) -> Vec<(Elt, Elt)> {
        match &self.scan {
            Scan::Explicit(v) => v.clone(),
            Scan::Exhaustive => {
                let ctx = self.f.ctx();
                ctx.nonzero_elements().flat_map(|a| ctx.nonzero_elements().map(move |b| (a, b))).collect()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TightnessWitness {
    pub a: Elt,
    pub b: Elt,
    pub drl_basis: GroebnerBasis,
    pub dimension: usize,
    pub lex_basis: GroebnerBasis,
    pub g1: UniPoly,
    pub g2: UniPoly,
    pub factors: FactorList,
    pub splitting_degree: u64,
    pub roots: usize,
    pub certified: bool,
}

impl TightnessWitness {
    pub fn to_json(&self) -> Value {
        let ctx = self.g2.ctx();
        json!({
            "a": ctx.elt_to_json(self.a),
            "b": ctx.elt_to_json(self.b),
            "dimension": self.dimension,
            "drl_basis": self.drl_basis.polys.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "g1": self.g1.to_string(),
            "g2_degree": self.g2.degree(),
            "factors": self.factors.factors.iter().map(|(h, m)| json!({"factor": h.to_string(), "multiplicity": m})).collect::<Vec<_>>(),
            "factor_degrees": self.factors.degrees(),
            "splitting_degree": self.splitting_degree,
            "roots": self.roots,
            "certified": self.certified,
        })
    }
}

/// Why a candidate `(a, b)` failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    NotZeroDimensional,
    DimensionBelowTarget(usize),
    /// More standard monomials than the bound allows.
    DimensionAboveTarget(usize),
    NotInShape,
    NotSquarefree,
    RootCountMismatch { splitting_degree: u64, roots: usize },
    Error(Error),
}

/// Runs the four checks on one `(a, b)`.
pub fn evaluate_candidate(
    f: &UniPoly,
    c: Elt,
    a: Elt,
    b: Elt,
    target: u64,
    seed: u64,
) -> std::result::Result<TightnessWitness, Rejection> {
    let sys = build_system(f, c, a, b).map_err(Rejection::Error)?;
    let drl = buchberger(&sys.generators(), TermOrder::Drl);
    let dimension = staircase(&drl).count().ok_or(Rejection::NotZeroDimensional)?;
    match (dimension as u64).cmp(&target) {
        std::cmp::Ordering::Less => return Err(Rejection::DimensionBelowTarget(dimension)),
        std::cmp::Ordering::Greater => return Err(Rejection::DimensionAboveTarget(dimension)),
        std::cmp::Ordering::Equal => {}
    }
    let lex = fglm(&drl, TermOrder::Lex).map_err(Rejection::Error)?;
    let (g1, g2) = lex_shape(&lex).ok_or(Rejection::NotInShape)?;
    if !g2.is_squarefree() {
        return Err(Rejection::NotSquarefree);
    }
    let factors = g2.factor_with_seed(seed).map_err(Rejection::Error)?;
    let splitting_degree = factors.splitting_degree().map_err(Rejection::Error)?;
    let roots = g2.count_roots_in_extension(splitting_degree).map_err(Rejection::Error)?;
    if roots != dimension {
        return Err(Rejection::RootCountMismatch { splitting_degree, roots });
    }
    Ok(TightnessWitness {
        a,
        b,
        drl_basis: drl,
        dimension,
        lex_basis: lex,
        g1,
        g2,
        factors,
        splitting_degree,
        roots,
        certified: true,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Anomaly {
    pub a: Elt,
    pub b: Elt,
    pub dimension: usize,
    pub target: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub target: u64,
    /// First passing candidate in scan order.
    pub witness: Option<TightnessWitness>,
    pub examined: usize,
    pub budget_exhausted: bool,
    /// Candidates whose dimension exceeded the target.
    pub anomalies: Vec<Anomaly>,
}

impl SearchReport {
    pub fn to_json(&self, ctx: &FieldCtx) -> Value {
        json!({
            "target": self.target,
            "found": self.witness.is_some(),
            "witness": self.witness.as_ref().map(TightnessWitness::to_json),
            "examined": self.examined,
            "budget_exhausted": self.budget_exhausted,
            "anomalies": self.anomalies.iter().map(|an| json!({
                "a": ctx.elt_to_json(an.a),
                "b": ctx.elt_to_json(an.b),
                "dimension": an.dimension,
                "target": an.target,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Examines candidates in parallel batches; the first pass in scan order wins.
pub fn search(config: &SearchConfig) -> Result<SearchReport> {
    let target = config.target()?;
    let mut candidates = config.candidates();
    let mut budget_exhausted = false;
    if let Some(limit) = config.budget {
        if candidates.len() > limit {
            candidates.truncate(limit);
            budget_exhausted = true;
        }
    }
    let batch = (rayon::current_num_threads() * 4).max(1);
    let mut anomalies = Vec::new();
    let mut examined = 0;
    for chunk in candidates.chunks(batch) {
        let results: Vec<_> = chunk
            .par_iter()
            .map(|&(a, b)| evaluate_candidate(&config.f, config.c, a, b, target, config.seed))
            .collect();
        for (&(a, b), r) in chunk.iter().zip(results) {
            examined += 1;
            match r {
                Ok(w) => {
                    return Ok(SearchReport { target, witness: Some(w), examined, budget_exhausted: false, anomalies });
                }
                Err(Rejection::DimensionAboveTarget(dimension)) => {
                    anomalies.push(Anomaly { a, b, dimension, target });
                }
                Err(_) => {}
            }
        }
    }
    Ok(SearchReport { target, witness: None, examined, budget_exhausted, anomalies })
}

pub const FIXTURE_NAMES: [&str; 6] = ["q11", "q16", "q257", "q89", "q191", "d7table"];

pub fn fixture_data(name: &str) -> Result<Value> {
    let text = match name {
        "q11" => include_str!("../data/q11.json"),
        "q16" => include_str!("../data/q16.json"),
        "q257" => include_str!("../data/q257.json"),
        "q89" => include_str!("../data/q89.json"),
        "q191" => include_str!("../data/q191.json"),
        "d7table" => include_str!("../data/d7table.json"),
        other => return Err(Error::Parse(format!("unknown fixture '{other}'"))),
    };
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureCheck {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureReport {
    pub name: String,
    pub checks: Vec<FixtureCheck>,
}

impl FixtureReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> Vec<&FixtureCheck> {
        self.checks.iter().filter(|c| !c.ok).collect()
    }

    fn check(&mut self, name: &str, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let ok = expected == actual;
        self.checks.push(FixtureCheck { name: name.to_string(), expected, actual, ok });
    }

    pub fn to_json(&self) -> Value {
        json!({
            "fixture": self.name,
            "pass": self.pass(),
            "checks": self.checks.iter().map(|c| json!({
                "check": c.name,
                "expected": c.expected,
                "actual": c.actual,
                "ok": c.ok,
            })).collect::<Vec<_>>(),
        })
    }
}

fn str_field<'a>(v: &'a Value, key: &str) -> Result<&'a str> {
    v[key].as_str().ok_or_else(|| Error::Parse(format!("fixture field '{key}' missing")))
}

fn u64_field(v: &Value, key: &str) -> Result<u64> {
    v[key].as_u64().ok_or_else(|| Error::Parse(format!("fixture field '{key}' missing")))
}

/// Field described by `{p, n, modulus?, symbol?}`.
pub fn field_from_json(v: &Value) -> Result<FieldCtx> {
    let p = u64_field(v, "p")?;
    let n = v["n"].as_u64().unwrap_or(1) as u32;
    let base = FieldCtx::prime(p)?;
    let ctx = match v["modulus"].as_str() {
        Some(m) => FieldCtx::extension(&base, &UniPoly::parse(&base, m)?)?,
        None => FieldCtx::with_degree(p, n)?,
    };
    if ctx.degree() != n {
        return Err(Error::InvalidField(format!("expected degree {n}, got {}", ctx.degree())));
    }
    Ok(match v["symbol"].as_str() {
        Some(s) => ctx.with_symbol(s),
        None => ctx,
    })
}

fn poly_from_json(ctx: &FieldCtx, v: &Value) -> Result<UniPoly> {
    if let Some(s) = v["poly"].as_str() {
        return UniPoly::parse(ctx, s);
    }
    let d = &v["dickson"];
    let n = u64_field(d, "n")?;
    let a = ctx.parse_elt(str_field(d, "a")?)?;
    Ok(dickson(ctx, n, a))
}

fn sorted_degrees(v: &Value) -> Vec<u64> {
    let mut d: Vec<u64> = v.as_array().map(|a| a.iter().filter_map(Value::as_u64).collect()).unwrap_or_default();
    d.sort_unstable();
    d
}

fn monic_bi(order: TermOrder, p: &BiPoly) -> BiPoly {
    match order.leading_term(p) {
        Some((_, c)) => p.scale(p.ctx().inv(c).expect("nonzero")),
        None => p.clone(),
    }
}

fn fmt_list<T: std::fmt::Debug>(v: &[T]) -> String {
    format!("{v:?}")
}

/// Recomputes a fixture and compares every recorded quantity.
pub fn run_fixture(name: &str) -> Result<FixtureReport> {
    let data = fixture_data(name)?;
    if name == "d7table" {
        return run_table_fixture(&data);
    }
    let ctx = field_from_json(&data["field"])?;
    let f = poly_from_json(&ctx, &data["f"])?;
    let c = ctx.parse_elt(str_field(&data, "c")?)?;
    let a = ctx.parse_elt(str_field(&data, "a")?)?;
    let b = ctx.parse_elt(str_field(&data, "b")?)?;
    let expected_dim = u64_field(&data, "dimension")?;
    let mut rep = FixtureReport { name: name.to_string(), checks: Vec::new() };

    let d = f.degree().ok_or(Error::ZeroPolynomial)? as u64;
    let bound = applicable_bound(d, c, &ctx).map(|x| x.0.to_string()).unwrap_or_else(|e| e.to_string());
    rep.check("bound", expected_dim, bound);

    let sys = build_system(&f, c, a, b)?;
    let drl = buchberger(&sys.generators(), TermOrder::Drl);
    let dim = staircase(&drl).count();
    rep.check("dimension", expected_dim, dim.map_or("infinite".into(), |x| x.to_string()));

    if let Some(expected) = data["drl_basis"].as_array() {
        let mut exp: Vec<BiPoly> = expected
            .iter()
            .map(|s| BiPoly::parse(&ctx, s.as_str().unwrap_or("")).map(|p| monic_bi(TermOrder::Drl, &p)))
            .collect::<Result<_>>()?;
        exp.sort_by(|x, y| TermOrder::Drl.compare(TermOrder::Drl.leading_monomial(y).unwrap(), TermOrder::Drl.leading_monomial(x).unwrap()));
        let show = |v: &[BiPoly]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ; ");
        rep.check("drl_basis", show(&exp), show(&drl.polys));
    }

    let lex = fglm(&drl, TermOrder::Lex)?;
    let Some((g1, g2)) = lex_shape(&lex) else {
        rep.check("lex_shape", "{z - g1(x), g2(x)}", "not in shape");
        return Ok(rep);
    };
    if let Some(h1) = data["h1"].as_str() {
        let z = BiPoly::var(&ctx, crate::bpoly::Var::Z);
        let ours = &z - &BiPoly::from_uni_in(crate::bpoly::Var::X, &g1);
        rep.check("h1", BiPoly::parse(&ctx, h1)?, ours);
    }
    if let Some(deg) = data["shape_degrees"].as_array() {
        let exp: Vec<u64> = deg.iter().filter_map(Value::as_u64).collect();
        let ours = vec![g1.degree().unwrap_or(0) as u64, g2.degree().unwrap_or(0) as u64];
        rep.check("shape_degrees", fmt_list(&exp), fmt_list(&ours));
    }
    rep.check("g2_squarefree", true, g2.is_squarefree());
    let factors = g2.factor()?;
    if let Some(list) = data["h2_factors"].as_array() {
        let mut exp: Vec<UniPoly> =
            list.iter().map(|s| UniPoly::parse(&ctx, s.as_str().unwrap_or("")).map(|p| p.monic())).collect::<Result<_>>()?;
        let product = exp.iter().fold(UniPoly::one(&ctx), |acc, h| &acc * h);
        rep.check("h2", product, &g2);
        exp.sort_by(crate::upoly::canonical_cmp);
        let ours: Vec<UniPoly> = factors.factors.iter().map(|(h, _)| h.clone()).collect();
        let show = |v: &[UniPoly]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ; ");
        rep.check("h2_factors", show(&exp), show(&ours));
    }
    let degs: Vec<u64> = factors.degrees().into_iter().map(|x| x as u64).collect();
    let mut sorted = degs.clone();
    sorted.sort_unstable();
    rep.check("factor_degrees", fmt_list(&sorted_degrees(&data["factor_degrees"])), fmt_list(&sorted));
    let expected_split = u64_field(&data, "splitting_degree")?;
    let split = factors.splitting_degree()?;
    rep.check("splitting_degree", expected_split, split);
    // the roots claimed over the extension the example names
    let roots = g2.count_roots_in_extension(expected_split)?;
    rep.check(&format!("roots_over_degree_{expected_split}_extension"), expected_dim, roots);
    if expected_split == 1 {
        rep.check("bct_entry", expected_dim, bct_entry(&f, c, a, b)?);
    }
    Ok(rep)
}

fn run_table_fixture(data: &Value) -> Result<FixtureReport> {
    let ctx = field_from_json(&data["field"])?;
    let n = u64_field(data, "dickson_n")?;
    let mut rep = FixtureReport { name: "d7table".to_string(), checks: Vec::new() };
    let cs: Vec<Elt> = ctx.nonzero_elements().collect();
    let row = |alpha: Elt| -> Result<Vec<u64>> {
        let f = dickson(&ctx, n, alpha);
        cs.iter().map(|&c| uniformity(&f, c).map(|r| r.beta as u64)).collect()
    };
    for (label, class) in [("zero", 0u8), ("square", 1), ("nonsquare", 2)] {
        let expected = sorted_list(&data["rows"][label]);
        let members: Vec<Elt> = ctx
            .elements()
            .filter(|&al| match class {
                0 => al.is_zero(),
                1 => !al.is_zero() && ctx.is_square(al),
                _ => !al.is_zero() && !ctx.is_square(al),
            })
            .collect();
        let rows: Vec<Vec<u64>> = members.par_iter().map(|&al| row(al)).collect::<Result<_>>()?;
        for (al, r) in members.iter().zip(&rows) {
            rep.check(&format!("row {label} alpha={}", ctx.format_elt(*al)), fmt_list(&expected), fmt_list(r));
        }
    }
    Ok(rep)
}

fn sorted_list(v: &Value) -> Vec<u64> {
    v.as_array().map(|a| a.iter().filter_map(Value::as_u64).collect()).unwrap_or_default()
}

/// Like [`run_fixture`], failing with the list of mismatching checks.
pub fn verify_fixture(name: &str) -> Result<FixtureReport> {
    let rep = run_fixture(name)?;
    if rep.pass() {
        return Ok(rep);
    }
    let diff = rep
        .failures()
        .iter()
        .map(|c| format!("{}: expected {}, got {}", c.name, c.expected, c.actual))
        .collect::<Vec<_>>()
        .join("; ");
    Err(Error::FixtureMismatch { name: name.to_string(), diff })
}
