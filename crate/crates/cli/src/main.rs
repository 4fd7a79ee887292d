use std::process::ExitCode;

use cbu::boomerang::{
    bct_entry, bct_entry_permutation_form, build_system, ddt_entry, uniformity_with, BctTable, UniformityOptions,
};
use cbu::bpoly::BiPoly;
use cbu::dickson::dickson;
use cbu::groebner::{buchberger, fglm, lex_shape, staircase, TermOrder};
use cbu::polytope::certify_absolutely_irreducible_difference;
use cbu::tightness::{run_fixture, search, Scan, SearchConfig, FIXTURE_NAMES};
use cbu::{Elt, Error, FieldCtx, UniPoly};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "cbu", version, about = "c-boomerang uniformity toolkit over finite fields")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Field order as `P` or `P^N`.
    #[arg(long, global = true, default_value = "11")]
    field: String,
    /// Defining polynomial of an extension, in `X`.
    #[arg(long, global = true)]
    modulus: Option<String>,
    /// Name of the extension generator.
    #[arg(long, global = true, default_value = "g")]
    symbol: String,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Args, Debug, Clone)]
struct PointArgs {
    #[arg(long)]
    f: String,
    #[arg(long)]
    c: String,
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum OrderArg {
    Drl,
    Lex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// One c-BCT entry, or the whole table when `--a`/`--b` are omitted.
    Bct {
        #[arg(long)]
        f: String,
        #[arg(long)]
        c: String,
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        b: Option<String>,
        /// Use the inverse-based definition (permutations only).
        #[arg(long)]
        permutation_form: bool,
        /// Include `a = 0` in the table.
        #[arg(long)]
        full_grid: bool,
    },
    /// One DDT entry, or the differential uniformity when `--a`/`--b` are omitted.
    Ddt {
        #[arg(long)]
        f: String,
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        b: Option<String>,
    },
    /// c-boomerang uniformity with the applicable bound.
    Uniformity {
        #[arg(long)]
        f: String,
        #[arg(long)]
        c: String,
        /// Scan `a, b` over all of the field.
        #[arg(long)]
        full_grid: bool,
        /// Largest field order to scan.
        #[arg(long, default_value_t = 512)]
        budget: u64,
    },
    /// The polynomial system `F1, F2, G2` for one `(a, b)`.
    System(PointArgs),
    /// Reduced Gröbner basis of the system, or of explicit `--poly` generators.
    Groebner {
        #[command(flatten)]
        input: BasisInput,
        #[arg(long, value_enum, default_value = "drl")]
        order: OrderArg,
    },
    /// DRL basis converted to LEX.
    Fglm {
        #[command(flatten)]
        input: BasisInput,
    },
    /// Factor a univariate polynomial.
    Factor {
        #[arg(long)]
        f: String,
    },
    /// Number of roots of `f` in the degree-`n` extension.
    RootsExt {
        #[arg(long)]
        f: String,
        #[arg(long)]
        n: u64,
    },
    /// Dickson polynomial `D_n(X, a)`.
    Dickson {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value = "1")]
        a: String,
    },
    /// Newton-polytope certificate for `f(x) - f(y) + a`.
    PolytopeCert {
        #[arg(long)]
        f: String,
        #[arg(long)]
        a: String,
    },
    /// Search `(a, b)` for a system attaining the bound.
    TightSearch {
        #[arg(long)]
        f: String,
        #[arg(long)]
        c: String,
        /// Restrict the scan to one `a`.
        #[arg(long)]
        a: Option<String>,
        /// Restrict the scan to one `b`.
        #[arg(long)]
        b: Option<String>,
        /// Override the target dimension.
        #[arg(long)]
        target: Option<u64>,
        /// Maximum number of candidates examined.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Recompute an embedded worked example.
    Verify {
        /// One of q11, q16, q257, q89, q191, d7table or `all`.
        #[arg(long)]
        fixture: String,
    },
}

#[derive(Args, Debug, Clone)]
struct BasisInput {
    #[arg(long)]
    f: Option<String>,
    #[arg(long)]
    c: Option<String>,
    #[arg(long)]
    a: Option<String>,
    #[arg(long)]
    b: Option<String>,
    /// Generator in `x, z`; repeatable. Replaces the boomerang system.
    #[arg(long = "poly")]
    polys: Vec<String>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Verification(_) => 1,
        }
    }
}

type Outcome = std::result::Result<Output, Failure>;

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

fn flag(name: &str) -> impl Fn(Error) -> Failure + '_ {
    move |e| Failure::Usage(format!("--{name}: {e}"))
}

fn domain(e: Error) -> Failure {
    match e {
        Error::FixtureMismatch { .. } => Failure::Verification(e.to_string()),
        other => Failure::Usage(other.to_string()),
    }
}

fn parse_field(g: &Global) -> std::result::Result<FieldCtx, Failure> {
    let bad = |msg: String| Failure::Usage(format!("--field: {msg}"));
    let (p, n) = match g.field.split_once('^') {
        Some((p, n)) => (p.trim().parse::<u64>(), n.trim().parse::<u32>()),
        None => (g.field.trim().parse::<u64>(), Ok(1)),
    };
    let (p, n) = match (p, n) {
        (Ok(p), Ok(n)) => (p, n),
        _ => return Err(bad(format!("expected P or P^N, got '{}'", g.field))),
    };
    let base = FieldCtx::prime(p).map_err(|e| bad(e.to_string()))?;
    let ctx = match &g.modulus {
        Some(m) => {
            let poly = UniPoly::parse(&base, m).map_err(flag("modulus"))?;
            let ctx = FieldCtx::extension(&base, &poly).map_err(flag("modulus"))?;
            if ctx.degree() != n {
                return Err(Failure::Usage(format!("--modulus: degree {} does not match --field {}", ctx.degree(), g.field)));
            }
            ctx
        }
        None => FieldCtx::with_degree(p, n).map_err(|e| bad(e.to_string()))?,
    };
    Ok(if ctx.is_prime_field() { ctx } else { ctx.with_symbol(&g.symbol) })
}

fn elt(ctx: &FieldCtx, name: &str, text: &str) -> std::result::Result<Elt, Failure> {
    ctx.parse_elt(text).map_err(flag(name))
}

fn poly(ctx: &FieldCtx, name: &str, text: &str) -> std::result::Result<UniPoly, Failure> {
    UniPoly::parse(ctx, text).map_err(flag(name))
}

fn required<'a>(name: &str, v: &'a Option<String>) -> std::result::Result<&'a str, Failure> {
    v.as_deref().ok_or_else(|| Failure::Usage(format!("--{name} is required")))
}

fn run(cli: Cli) -> Outcome {
    let ctx = parse_field(&cli.global)?;
    let seed = cli.global.seed;
    match cli.command {
        Command::Bct { f, c, a, b, permutation_form, full_grid } => {
            let f = poly(&ctx, "f", &f)?;
            let c = elt(&ctx, "c", &c)?;
            match (a, b) {
                (Some(a), Some(b)) => {
                    let (a, b) = (elt(&ctx, "a", &a)?, elt(&ctx, "b", &b)?);
                    let n = if permutation_form {
                        bct_entry_permutation_form(&f, c, a, b)
                    } else {
                        bct_entry(&f, c, a, b)
                    }
                    .map_err(domain)?;
                    Ok(Output {
                        text: n.to_string(),
                        json: json!({
                            "field": ctx.describe(), "f": f.to_string(), "c": ctx.elt_to_json(c),
                            "a": ctx.elt_to_json(a), "b": ctx.elt_to_json(b), "count": n,
                        }),
                        ok: true,
                    })
                }
                (None, None) => {
                    let table = BctTable::compute(&f, c, full_grid).map_err(domain)?;
                    let text = table
                        .a_values
                        .iter()
                        .zip(&table.counts)
                        .map(|(a, row)| {
                            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
                            format!("{:>6} | {}", ctx.format_elt(*a), cells.join(" "))
                        })
                        .collect::<Vec<_>>()
                        .join("\n");
                    Ok(Output { text, json: table.to_json(), ok: true })
                }
                _ => Err(Failure::Usage("--a and --b must be given together".into())),
            }
        }
        Command::Ddt { f, a, b } => {
            let f = poly(&ctx, "f", &f)?;
            match (a, b) {
                (Some(a), Some(b)) => {
                    let (a, b) = (elt(&ctx, "a", &a)?, elt(&ctx, "b", &b)?);
                    let n = ddt_entry(&f, a, b).map_err(domain)?;
                    Ok(Output {
                        text: n.to_string(),
                        json: json!({"field": ctx.describe(), "f": f.to_string(), "a": ctx.elt_to_json(a), "b": ctx.elt_to_json(b), "count": n}),
                        ok: true,
                    })
                }
                (None, None) => {
                    let mut best = 0;
                    for a in ctx.nonzero_elements() {
                        for b in ctx.elements() {
                            best = best.max(ddt_entry(&f, a, b).map_err(domain)?);
                        }
                    }
                    Ok(Output {
                        text: format!("delta = {best}"),
                        json: json!({"field": ctx.describe(), "f": f.to_string(), "delta": best}),
                        ok: true,
                    })
                }
                _ => Err(Failure::Usage("--a and --b must be given together".into())),
            }
        }
        Command::Uniformity { f, c, full_grid, budget } => {
            let f = poly(&ctx, "f", &f)?;
            let c = elt(&ctx, "c", &c)?;
            let rep = uniformity_with(&f, c, UniformityOptions { max_order: budget, full_grid }).map_err(domain)?;
            let mut text = format!("field = {}\nf = {}\nc = {}\nbeta = {}\n", rep.field, rep.f, ctx.format_elt(c), rep.beta);
            match rep.bound {
                Some(bd) => text.push_str(&format!("bound = {bd} [{}]\n", rep.bound_source)),
                None => text.push_str(&format!("bound = none [{}]\n", rep.bound_source)),
            }
            let ws: Vec<String> =
                rep.witnesses.iter().map(|w| format!("({}, {})", ctx.format_elt(w.a), ctx.format_elt(w.b))).collect();
            text.push_str(&format!("witnesses = {}", ws.join(" ")));
            Ok(Output { text, json: rep.to_json(&ctx), ok: rep.pass != Some(false) })
        }
        Command::System(p) => {
            let f = poly(&ctx, "f", &p.f)?;
            let (c, a, b) = (elt(&ctx, "c", &p.c)?, elt(&ctx, "a", &p.a)?, elt(&ctx, "b", &p.b)?);
            let sys = build_system(&f, c, a, b).map_err(domain)?;
            let text = format!("mode = {}\nF1 = {}\nF2 = {}\nG2 = {}", sys.mode.name(), sys.f1, sys.f2, sys.g2);
            Ok(Output { text, json: sys.to_json(), ok: true })
        }
        Command::Groebner { input, order } => {
            let gens = generators(&ctx, &input)?;
            let order = match order {
                OrderArg::Drl => TermOrder::Drl,
                OrderArg::Lex => TermOrder::Lex,
            };
            let basis = buchberger(&gens, order);
            let sc = staircase(&basis);
            let mut text: String = basis.polys.iter().map(|p| format!("{p}\n")).collect();
            text.push_str(&format!("dimension = {}", sc.count().map_or("infinite".into(), |d| d.to_string())));
            let mut json = basis.to_json();
            json["dimension"] = json!(sc.count());
            Ok(Output { text, json, ok: true })
        }
        Command::Fglm { input } => {
            let gens = generators(&ctx, &input)?;
            let drl = buchberger(&gens, TermOrder::Drl);
            let lex = fglm(&drl, TermOrder::Lex).map_err(domain)?;
            let mut text: String = lex.polys.iter().map(|p| format!("{p}\n")).collect();
            let mut json = lex.to_json();
            match lex_shape(&lex) {
                Some((g1, g2)) => {
                    text.push_str(&format!("shape degrees = ({}, {})", g1.degree().unwrap_or(0), g2.degree().unwrap_or(0)));
                    json["shape"] = json!({"g1": g1.to_string(), "g2": g2.to_string()});
                }
                None => {
                    text.push_str("not in shape position");
                    json["shape"] = Value::Null;
                }
            }
            Ok(Output { text, json, ok: true })
        }
        Command::Factor { f } => {
            let f = poly(&ctx, "f", &f)?;
            let fl = f.factor_with_seed(seed).map_err(domain)?;
            let mut text = format!("unit = {}\n", ctx.format_elt(fl.unit));
            for (h, m) in &fl.factors {
                text.push_str(&format!("({h})^{m}\n"));
            }
            let split = fl.splitting_degree().ok();
            text.push_str(&format!("splitting degree = {}", split.map_or("-".into(), |n| n.to_string())));
            let json = json!({
                "unit": ctx.elt_to_json(fl.unit),
                "factors": fl.factors.iter().map(|(h, m)| json!({"factor": h.to_string(), "multiplicity": m})).collect::<Vec<_>>(),
                "degrees": fl.degrees(),
                "splitting_degree": split,
            });
            Ok(Output { text, json, ok: true })
        }
        Command::RootsExt { f, n } => {
            let f = poly(&ctx, "f", &f)?;
            let roots = f.count_roots_in_extension(n).map_err(domain)?;
            Ok(Output { text: roots.to_string(), json: json!({"f": f.to_string(), "n": n, "roots": roots}), ok: true })
        }
        Command::Dickson { n, a } => {
            let a = elt(&ctx, "a", &a)?;
            let d = dickson(&ctx, n, a);
            Ok(Output { text: d.to_string(), json: json!({"n": n, "a": ctx.elt_to_json(a), "poly": d.to_string(), "coeffs": d.to_json()}), ok: true })
        }
        Command::PolytopeCert { f, a } => {
            let f = poly(&ctx, "f", &f)?;
            let a = elt(&ctx, "a", &a)?;
            match certify_absolutely_irreducible_difference(&f, a) {
                Ok(cert) => {
                    let vs: Vec<String> = cert.vertices.iter().map(|p| format!("({}, {})", p.u, p.v)).collect();
                    let text = format!("certified\nvertices = {}\ngcd = {}", vs.join(" "), cert.gcd);
                    let mut json = cert.to_json(&ctx);
                    json["certified"] = json!(true);
                    Ok(Output { text, json, ok: true })
                }
                Err(e @ Error::Inapplicable(_)) => Ok(Output {
                    text: format!("inapplicable: {e}"),
                    json: json!({"certified": false, "reason": e.to_string()}),
                    ok: false,
                }),
                Err(e) => Err(domain(e)),
            }
        }
        Command::TightSearch { f, c, a, b, target, budget } => {
            let f = poly(&ctx, "f", &f)?;
            let c = elt(&ctx, "c", &c)?;
            let a = a.map(|a| elt(&ctx, "a", &a)).transpose()?;
            let b = b.map(|b| elt(&ctx, "b", &b)).transpose()?;
            let mut cfg = SearchConfig::new(f, c);
            cfg.target = target;
            cfg.budget = budget;
            cfg.seed = seed;
            if a.is_some() || b.is_some() {
                let avals: Vec<Elt> = a.map_or_else(|| ctx.nonzero_elements().collect(), |a| vec![a]);
                let bvals: Vec<Elt> = b.map_or_else(|| ctx.nonzero_elements().collect(), |b| vec![b]);
                cfg.scan = Scan::Explicit(avals.iter().flat_map(|&a| bvals.iter().map(move |&b| (a, b))).collect());
            }
            let rep = search(&cfg).map_err(domain)?;
            let text = match &rep.witness {
                Some(w) => format!(
                    "found (a, b) = ({}, {})\ndimension = {}\nfactor degrees = {:?}\nsplitting degree = {}\nroots = {}\nexamined = {}",
                    ctx.format_elt(w.a),
                    ctx.format_elt(w.b),
                    w.dimension,
                    w.factors.degrees(),
                    w.splitting_degree,
                    w.roots,
                    rep.examined
                ),
                None => format!(
                    "no witness for target {}\nexamined = {}{}",
                    rep.target,
                    rep.examined,
                    if rep.budget_exhausted { " (budget exhausted)" } else { "" }
                ),
            };
            Ok(Output { text, json: rep.to_json(&ctx), ok: true })
        }
        Command::Verify { fixture } => {
            let names: Vec<&str> = if fixture == "all" {
                FIXTURE_NAMES.to_vec()
            } else if FIXTURE_NAMES.contains(&fixture.as_str()) {
                vec![fixture.as_str()]
            } else {
                return Err(Failure::Usage(format!("--fixture: unknown fixture '{fixture}'")));
            };
            let mut ok = true;
            let mut text = Vec::new();
            let mut reports = Vec::new();
            for name in names {
                let rep = run_fixture(name).map_err(domain)?;
                ok &= rep.pass();
                text.push(format!("{name}: {}", if rep.pass() { "ok" } else { "MISMATCH" }));
                for c in rep.failures() {
                    text.push(format!("  {}: expected {}, got {}", c.name, c.expected, c.actual));
                }
                reports.push(rep.to_json());
            }
            let json = if reports.len() == 1 { reports.pop().unwrap() } else { Value::Array(reports) };
            Ok(Output { text: text.join("\n"), json, ok })
        }
    }
}

fn generators(ctx: &FieldCtx, input: &BasisInput) -> std::result::Result<Vec<BiPoly>, Failure> {
    if !input.polys.is_empty() {
        return input.polys.iter().map(|s| BiPoly::parse(ctx, s).map_err(flag("poly"))).collect();
    }
    let f = poly(ctx, "f", required("f", &input.f)?)?;
    let c = elt(ctx, "c", required("c", &input.c)?)?;
    let a = elt(ctx, "a", required("a", &input.a)?)?;
    let b = elt(ctx, "b", required("b", &input.b)?)?;
    Ok(build_system(&f, c, a, b).map_err(domain)?.generators())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: --threads: {e}");
            return ExitCode::from(2);
        }
    }
    let json = cli.global.json;
    match run(cli) {
        Ok(out) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                println!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            match &f {
                Failure::Usage(m) | Failure::Verification(m) => eprintln!("error: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
