use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use skein::bmw::{Bmw, CheckLine};
use skein::coeff::parse_ratfunc;
use skein::handlebody::{
    connect_sum_reduce, cut_degree, enumerate_generators, example_s4, meridian_reduce,
    slide_defect, Cut, HandlebodyElement,
};
use skein::relations::relation_suite;
use skein::tangle::parse_tangle_file;
use skein::young::{enumerate_updown, UPDOWN_BOUND};
use skein::{Engine, RatFunc, Result, SkeinElement, SkeinError, TangleWord, YoungDiagram};

#[derive(Parser)]
#[command(name = "skein", version, about = "Exact Kauffman skein calculus")]
struct Cli {
    /// Override the arity caps of the BMW and idempotent computations
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Disable memoization of reductions
    #[arg(long, global = true)]
    no_cache: bool,
    /// Emit structured JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduce a tangle file (optionally with coefficients) to canonical form
    Reduce { file: String },
    /// Kauffman polynomial of a closed tangle file
    Kpoly { file: String },
    /// BMW algebra: dimensions, products, relation checks, idempotents
    #[command(subcommand)]
    Bmw(BmwCmd),
    /// Content polynomials and up-down tableaux
    #[command(subcommand)]
    Young(YoungCmd),
    /// Skein modules of handlebodies
    #[command(subcommand)]
    Hb(HbCmd),
}

#[derive(Subcommand)]
enum BmwCmd {
    /// Dimension of K_n
    Dim { n: usize },
    /// Product of two elements, the first on top
    Mul { top: String, bottom: String },
    /// Relation suite and path orthogonality at n
    Verify { n: usize },
    /// Young idempotent and its image in K_n
    Idempotent { partition: String },
    /// Quantum dimension
    Qdim { partition: String },
}

#[derive(Subcommand)]
enum YoungCmd {
    /// Content polynomial c_lambda
    Clambda { partition: String },
    /// Up-down tableaux of length n
    Updown { n: usize },
}

#[derive(Subcommand)]
enum HbCmd {
    /// Generators of genus g with labels up to max_label
    Gens { g: usize, max_label: usize },
    /// Reduce along a separating cut `k` or a meridian `m<i>`
    Reduce {
        file: String,
        #[arg(long)]
        cut: String,
        /// Print the sliding defect instead of the reduction
        #[arg(long)]
        defect: bool,
    },
    /// The knot in S^1 x S^2 # S^1 x S^2
    ExampleS4 {
        /// Also print the intermediate checks
        #[arg(long)]
        steps: bool,
    },
}

struct Ctx {
    bmw: Bmw,
    json: bool,
}

impl Ctx {
    fn engine(&self) -> &Engine {
        self.bmw.engine()
    }
}

enum Output {
    Text(String),
    Json(Value),
}

fn read_input(path: &str) -> Result<String> {
    let mut s = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| s = t)
    };
    res.map_err(|e| SkeinError::InvalidArgument(format!("cannot read {path}: {e}")))?;
    Ok(s)
}

fn parse_partition(s: &str) -> Result<YoungDiagram> {
    s.parse()
}

fn load_terms(path: &str) -> Result<Vec<(RatFunc, TangleWord)>> {
    parse_tangle_file(&read_input(path)?)?
        .into_iter()
        .map(|b| {
            let c = match &b.coeff {
                Some(t) => parse_ratfunc(t)?,
                None => RatFunc::one(),
            };
            Ok((c, b.word))
        })
        .collect()
}

fn element_json(x: &SkeinElement) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .iter()
        .map(|(m, c)| json!({"coeff": c.to_string(), "matching": m.to_string()}))
        .collect();
    json!({"src": x.src(), "dst": x.dst(), "terms": terms})
}

fn checks_json(lines: &[CheckLine]) -> Value {
    lines
        .iter()
        .map(|l| json!({"name": l.name, "ok": l.ok, "detail": l.detail}))
        .collect()
}

fn element_out(ctx: &Ctx, x: &SkeinElement) -> Output {
    if ctx.json {
        Output::Json(element_json(x))
    } else {
        Output::Text(x.to_text())
    }
}

fn scalar_out(ctx: &Ctx, key: &str, v: &RatFunc) -> Output {
    if ctx.json {
        Output::Json(json!({ key: v.to_string() }))
    } else {
        Output::Text(format!("{v}\n"))
    }
}

/// Returns the output and whether every reported check passed.
fn run(cli: Cli) -> Result<(Output, bool)> {
    let mut bmw = Bmw::new(Engine::new(!cli.no_cache));
    if let Some(n) = cli.max_n {
        bmw = bmw.with_max_n(n);
    }
    let ctx = Ctx { bmw, json: cli.json };
    let out = match cli.cmd {
        Cmd::Reduce { file } => {
            let terms = load_terms(&file)?;
            element_out(&ctx, &ctx.engine().reduce(&terms)?)
        }
        Cmd::Kpoly { file } => {
            let terms = load_terms(&file)?;
            let mut acc = RatFunc::zero();
            for (c, w) in &terms {
                acc = &acc + &(c * &ctx.engine().kauffman_poly(w)?);
            }
            scalar_out(&ctx, "kauffman", &acc)
        }
        Cmd::Bmw(b) => return run_bmw(&ctx, b),
        Cmd::Young(y) => run_young(&ctx, y)?,
        Cmd::Hb(h) => run_hb(&ctx, h)?,
    };
    Ok((out, true))
}

fn run_bmw(ctx: &Ctx, cmd: BmwCmd) -> Result<(Output, bool)> {
    let out = match cmd {
        BmwCmd::Dim { n } => {
            let d = ctx.bmw.basis(n)?.len();
            if ctx.json {
                Output::Json(json!({"n": n, "dim": d}))
            } else {
                Output::Text(format!("{d}\n"))
            }
        }
        BmwCmd::Mul { top, bottom } => {
            let x = ctx.engine().reduce(&load_terms(&top)?)?;
            let y = ctx.engine().reduce(&load_terms(&bottom)?)?;
            element_out(ctx, &ctx.bmw.mul(&x, &y)?)
        }
        BmwCmd::Verify { n } => {
            let rel = relation_suite(ctx.engine())?;
            let orth = ctx.bmw.verify_path_orthogonality(n)?;
            let mut lines = rel.lines.clone();
            lines.push(CheckLine::new(
                format!("path products vanish off the diagonal (n={n})"),
                orth.off_diagonal_ok(),
                "",
            ));
            for c in orth.checks.iter().filter(|c| c.left == c.right) {
                let detail = match &c.scalar {
                    Some(k) if !c.holds => format!("scalar {k}"),
                    None if !c.holds => "not proportional".into(),
                    _ => String::new(),
                };
                lines.push(CheckLine::new(format!("b a = y for {}", c.left), c.holds, detail));
            }
            lines.push(CheckLine::new(
                format!("rank of path basis = {}", orth.expected_rank),
                orth.rank_ok(),
                format!("rank {}", orth.rank),
            ));
            let ok = rel.epsilon.is_some() && lines.iter().all(|l| l.ok);
            let eps = rel.epsilon.map_or("inconsistent".to_string(), |e| e.to_string());
            let out = if ctx.json {
                Output::Json(json!({"n": n, "epsilon": eps, "checks": checks_json(&lines), "all_ok": ok}))
            } else {
                let mut s: String = lines.iter().map(|l| format!("{l}\n")).collect();
                s.push_str(&format!("epsilon = {eps}\n"));
                Output::Text(s)
            };
            return Ok((out, ok));
        }
        BmwCmd::Idempotent { partition } => {
            let lambda = parse_partition(&partition)?;
            let y = ctx.bmw.ytilde(&lambda)?;
            if ctx.json {
                let hecke = if lambda.is_empty() {
                    "1".to_string()
                } else {
                    ctx.bmw.flattened_idempotent(&lambda)?.to_string()
                };
                Output::Json(json!({"partition": lambda.to_string(), "hecke": hecke, "ytilde": element_json(&y)}))
            } else {
                Output::Text(y.to_text())
            }
        }
        BmwCmd::Qdim { partition } => {
            let lambda = parse_partition(&partition)?;
            scalar_out(ctx, "qdim", &ctx.bmw.qdim(&lambda)?)
        }
    };
    Ok((out, true))
}

fn run_young(ctx: &Ctx, cmd: YoungCmd) -> Result<Output> {
    Ok(match cmd {
        YoungCmd::Clambda { partition } => {
            let lambda = parse_partition(&partition)?;
            scalar_out(ctx, "c_lambda", &lambda.c_lambda())
        }
        YoungCmd::Updown { n } => {
            let (paths, counts) = enumerate_updown(n, UPDOWN_BOUND)?;
            if ctx.json {
                let counts: Vec<Value> = counts
                    .iter()
                    .map(|(l, m)| json!({"shape": l.to_string(), "count": m}))
                    .collect();
                let paths: Vec<String> = paths.iter().map(|p| p.to_string()).collect();
                Output::Json(json!({"n": n, "tableaux": paths, "counts": counts}))
            } else {
                let mut s: String = paths.iter().map(|p| format!("{p}\n")).collect();
                for (l, m) in &counts {
                    s.push_str(&format!("m({l}) = {m}\n"));
                }
                Output::Text(s)
            }
        }
    })
}

fn run_hb(ctx: &Ctx, cmd: HbCmd) -> Result<Output> {
    Ok(match cmd {
        HbCmd::Gens { g, max_label } => {
            let gens = enumerate_generators(g, max_label)?;
            if ctx.json {
                let v: Vec<Value> = gens
                    .iter()
                    .map(|x| json!({"g": x.genus(), "labels": x.labels(), "boxes": x.boxes()}))
                    .collect();
                Output::Json(json!({"g": g, "max_label": max_label, "generators": v}))
            } else {
                Output::Text(gens.iter().map(|x| format!("{x}\n")).collect())
            }
        }
        HbCmd::Reduce { file, cut, defect } => {
            let cut: Cut = cut.parse()?;
            let x = HandlebodyElement::parse(&read_input(&file)?)?;
            for gen in x.terms().keys() {
                cut_degree(gen, cut)?;
            }
            if defect {
                let d = slide_defect(&ctx.bmw, &x, cut)?;
                return Ok(if ctx.json {
                    Output::Json(hb_json(&d))
                } else {
                    Output::Text(if d.is_zero() { "0\n".into() } else { d.to_text() })
                });
            }
            match cut {
                Cut::Separating(k) => {
                    let t = connect_sum_reduce(&x, k)?;
                    if ctx.json {
                        let terms: Vec<Value> = t
                            .terms
                            .iter()
                            .map(|((l, r), c)| json!({"coeff": c.to_string(), "left": l.to_string(), "right": r.to_string()}))
                            .collect();
                        Output::Json(json!({"g": t.g, "cut": k, "terms": terms}))
                    } else if t.is_zero() {
                        Output::Text("0\n".into())
                    } else {
                        Output::Text(t.to_text())
                    }
                }
                Cut::Meridian(_) => {
                    let v = meridian_reduce(&ctx.bmw, &x)?;
                    if ctx.json {
                        Output::Json(json!({"coeff": v.to_string(), "link": "empty"}))
                    } else if v.is_zero() {
                        Output::Text("0\n".into())
                    } else {
                        Output::Text(format!("\"{v}\" * empty\n"))
                    }
                }
            }
        }
        HbCmd::ExampleS4 { steps } => {
            let rep = example_s4(&ctx.bmw)?;
            if ctx.json {
                Output::Json(json!({"value": rep.value.to_string(), "steps": checks_json(&rep.steps)}))
            } else {
                let mut s = String::new();
                if steps {
                    s.extend(rep.steps.iter().map(|l| format!("{l}\n")));
                }
                s.push_str(&format!("{}\n", rep.value));
                Output::Text(s)
            }
        }
    })
}

fn hb_json(x: &HandlebodyElement) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .iter()
        .map(|(g, c)| json!({"coeff": c.to_string(), "labels": g.labels(), "boxes": g.boxes()}))
        .collect();
    json!({"g": x.genus(), "terms": terms})
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            match out {
                Output::Text(s) => print!("{s}"),
                Output::Json(v) => println!("{}", serde_json::to_string_pretty(&v).expect("json")),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(if e.is_parse() { 2 } else { 1 })
        }
    }
}
