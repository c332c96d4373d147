//! `polyq`: command-line front end.
//!
//! Exit codes: 0 on success, 2 for bad input (parse errors, unmet
//! preconditions), 3 for numerical failures. Failures print
//! `{"error": ..., "offset": ...}` on stdout.

mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polyq::{
    default_step, fit_components, invert, lower, parse_complex, parse_expr, peel_components,
    quotient_seminorm, resolvent, spectrum, sup_norm, Complex64, Error, PolyElement,
    QuotientElement, Region, SampleSet, SamplingConfig, SeminormSearch,
};
use report::Report;
use serde_json::{json, Value};

/// Numerics for polyanalytic functions and their quotient algebras.
#[derive(Parser, Debug)]
#[command(name = "polyq", version)]
struct Cli {
    #[command(flatten)]
    run: RunArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Compact set K: disc:cx,cy,r or rect:x0,y0,x1,y1.
    #[arg(long, global = true, default_value = "disc:0.75,0,0.25")]
    region: String,
    /// Order bound q of the quotient algebra.
    #[arg(long, global = true)]
    order: Option<usize>,
    /// Grid resolution for sup-norm sampling.
    #[arg(long = "grid", global = true, default_value_t = 200)]
    grid_n: usize,
    /// Degree cap D of Taylor series.
    #[arg(long, global = true, default_value_t = 64)]
    series_cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
    /// Degree in z of the seminorm perturbation.
    #[arg(long, global = true, default_value_t = 6)]
    h_degree: usize,
    /// Number of z̄ powers in the seminorm perturbation.
    #[arg(long, global = true, default_value_t = 2)]
    h_order: usize,
    /// Finite-difference step for peel (default 1e-3 of the region diameter).
    #[arg(long, global = true)]
    step: Option<f64>,
    /// Component degree for fit and peel.
    #[arg(long, global = true, default_value_t = 6)]
    deg: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum Output {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression at a point.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Point such as 0.5+0.25i.
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
    /// Product of two expressions (diamond product when --order is given).
    Mul {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Sup-norm over the region.
    Norm {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Upper bound on the quotient seminorm (needs --order).
    Seminorm {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Inverse in the quotient algebra.
    Invert {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// (λ - f)^{-1} in the quotient algebra.
    Resolvent {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    /// Sampled spectrum, the image of the leading component.
    Spectrum {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Least-squares component fit of CSV samples (needs --order).
    Fit { csv: std::path::PathBuf },
    /// Component recovery from an expression used as a black box.
    Peel {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Check the non-submultiplicative norm example f = z zbar, g = 1 - z zbar.
    VerifyExample,
}

/// A failure and the exit code it maps to.
struct Failure {
    code: u8,
    body: Value,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let mut body = json!({ "error": e.to_string() });
        if let Some(off) = e.offset() {
            body["offset"] = json!(off);
        }
        Failure {
            code: if e.is_user_error() { 2 } else { 3 },
            body,
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        body: json!({ "error": msg.into() }),
    }
}

struct Ctx {
    region: Region,
    cfg: SamplingConfig,
    args: RunArgs,
}

impl Ctx {
    fn report(&self, command: &'static str) -> Report {
        let mut r = Report::new(command);
        r.input("region", self.region.to_string());
        r.input("order", self.args.order);
        r.diag("grid_n", self.cfg.grid_n);
        r.diag("D", self.args.series_cap);
        r
    }

    /// `--order`, or one more than the exact order of `f`.
    fn order_for(&self, f: &PolyElement) -> usize {
        self.args
            .order
            .unwrap_or_else(|| f.exact_order().map_or(1, |k| k + 1))
    }

    fn need_order(&self, command: &str) -> Result<usize, Failure> {
        self.args
            .order
            .ok_or_else(|| usage(format!("{command} needs --order")))
    }
}

fn parse(text: &str) -> Result<PolyElement, Failure> {
    Ok(lower(&parse_expr(text)?)?)
}

fn run(cli: Cli) -> Result<Value, Failure> {
    let args = cli.run;
    if args.order == Some(0) {
        return Err(usage("--order must be positive"));
    }
    let region: Region = args.region.parse()?;
    let cfg = SamplingConfig::with_grid(args.grid_n);
    let ctx = Ctx { region, cfg, args };
    let r = match &cli.command {
        Command::Eval { expr, z } => cmd_eval(&ctx, expr, z)?,
        Command::Mul { left, right } => cmd_mul(&ctx, left, right)?,
        Command::Norm { expr } => cmd_norm(&ctx, expr)?,
        Command::Seminorm { expr } => cmd_seminorm(&ctx, expr)?,
        Command::Invert { expr } => cmd_invert(&ctx, expr)?,
        Command::Resolvent { expr, lambda } => cmd_resolvent(&ctx, expr, lambda)?,
        Command::Spectrum { expr } => cmd_spectrum(&ctx, expr)?,
        Command::Fit { csv } => cmd_fit(&ctx, csv)?,
        Command::Peel { expr } => cmd_peel(&ctx, expr)?,
        Command::VerifyExample => return cmd_verify_example(&ctx),
    };
    Ok(r.to_json())
}

fn cmd_eval(ctx: &Ctx, expr: &str, z: &str) -> Result<Report, Failure> {
    let f = parse(expr)?;
    let z0 = parse_complex(z)?;
    let f = match ctx.args.order {
        Some(q) => f.truncate(q)?.into_rep(),
        None => f,
    };
    let mut r = ctx.report("eval");
    r.input("expr", expr).input("z", report::complex(z0));
    r.result("value", report::complex(f.eval(z0)?));
    r.result("canonical", polyq::print_canonical(&f)?);
    Ok(r)
}

fn cmd_mul(ctx: &Ctx, left: &str, right: &str) -> Result<Report, Failure> {
    let (f, g) = (parse(left)?, parse(right)?);
    let product = match ctx.args.order {
        Some(q) => f.truncate(q)?.diamond_mul(&g.truncate(q)?)?.into_rep(),
        None => f.full_mul(&g)?,
    };
    let mut r = ctx.report("mul");
    r.input("left", left).input("right", right);
    r.result("canonical", polyq::print_canonical(&product)?);
    r.result("element", report::element(&product));
    Ok(r)
}

fn cmd_norm(ctx: &Ctx, expr: &str) -> Result<Report, Failure> {
    let mut f = parse(expr)?;
    if let Some(q) = ctx.args.order {
        f = f.truncate(q)?.into_rep();
    }
    let n = sup_norm(&f, &ctx.region, &ctx.cfg)?;
    let mut r = ctx.report("norm");
    r.input("expr", expr);
    r.result("norm", n.value)
        .result("argmax", report::complex(n.argmax));
    r.diag("refined", n.refined);
    Ok(r)
}

fn cmd_seminorm(ctx: &Ctx, expr: &str) -> Result<Report, Failure> {
    let q = ctx.need_order("seminorm")?;
    let f = parse(expr)?;
    let search = SeminormSearch {
        h_degree: ctx.args.h_degree,
        h_order: ctx.args.h_order,
        ..SeminormSearch::default()
    };
    let est = quotient_seminorm(&f, q, &ctx.region, &search, &ctx.cfg)?;
    let plain = sup_norm(&f, &ctx.region, &ctx.cfg)?;
    let mut r = ctx.report("seminorm");
    r.input("expr", expr)
        .input("h_degree", search.h_degree)
        .input("h_order", search.h_order);
    r.result("seminorm", est.norm.value)
        .result("sup_norm", plain.value)
        .result("argmax", report::complex(est.norm.argmax))
        .result("representative", report::element(&est.representative));
    r.diag("seed", search.seed);
    Ok(r)
}

fn resolvent_report(r: &mut Report, res: &polyq::ResolventResult) {
    r.result("inverse", report::quotient(&res.inverse));
    r.diag("residual", res.residual)
        .diag("margin", res.margin)
        .diag("tail_bound", res.tail_bound);
}

fn cmd_invert(ctx: &Ctx, expr: &str) -> Result<Report, Failure> {
    let f = parse(expr)?;
    let q = ctx.order_for(&f);
    let res = invert(&f.truncate(q)?, &ctx.region, ctx.args.series_cap, &ctx.cfg)?;
    let mut r = ctx.report("invert");
    r.input("expr", expr).input("q", q);
    resolvent_report(&mut r, &res);
    Ok(r)
}

fn cmd_resolvent(ctx: &Ctx, expr: &str, lambda: &str) -> Result<Report, Failure> {
    let f = parse(expr)?;
    let lam = parse_complex(lambda)?;
    let q = ctx.order_for(&f);
    let res = resolvent(
        &f.truncate(q)?,
        lam,
        &ctx.region,
        ctx.args.series_cap,
        &ctx.cfg,
    )?;
    let mut r = ctx.report("resolvent");
    r.input("expr", expr)
        .input("lambda", report::complex(lam))
        .input("q", q);
    resolvent_report(&mut r, &res);
    Ok(r)
}

fn cmd_spectrum(ctx: &Ctx, expr: &str) -> Result<Report, Failure> {
    let f = parse(expr)?;
    let q = ctx.order_for(&f);
    let est = spectrum(&f.truncate(q)?, &ctx.region, ctx.cfg.grid_n)?;
    let mut r = ctx.report("spectrum");
    r.input("expr", expr).input("q", q);
    r.result("bound_radius", est.bound_radius)
        .result("max_modulus", est.max_modulus())
        .result("points", report::points(&est.points));
    r.diag("sample_n", est.sample_n);
    Ok(r)
}

fn cmd_fit(ctx: &Ctx, path: &std::path::Path) -> Result<Report, Failure> {
    let q = ctx.need_order("fit")?;
    let file = std::fs::File::open(path)
        .map_err(|e| usage(format!("cannot open {}: {e}", path.display())))?;
    let samples = SampleSet::from_csv(file)?;
    let fit = fit_components(&samples, q, ctx.args.deg)?;
    let mut r = ctx.report("fit");
    r.input("csv", path.display().to_string())
        .input("deg", ctx.args.deg)
        .input("samples", samples.len());
    r.result("element", report::quotient(&fit.element));
    r.diag("residual", fit.residual);
    Ok(r)
}

fn cmd_peel(ctx: &Ctx, expr: &str) -> Result<Report, Failure> {
    let f = parse(expr)?;
    let q = ctx.order_for(&f);
    let h = ctx.args.step.unwrap_or_else(|| default_step(&ctx.region));
    let black_box = |z: Complex64| f.eval(z).expect("polynomial elements evaluate everywhere");
    let e = peel_components(&black_box, &ctx.region, q, h, ctx.args.deg)?;
    let mut r = ctx.report("peel");
    r.input("expr", expr)
        .input("q", q)
        .input("deg", ctx.args.deg)
        .input("step", h);
    r.result("element", report::quotient(&e));
    Ok(r)
}

/// Norms of f = z zbar, g = 1 - z zbar and f ⋄₂ g on the region. The example
/// passes when the product's norm exceeds the product of the norms.
fn cmd_verify_example(ctx: &Ctx) -> Result<Value, Failure> {
    if ctx.args.order.is_some() {
        return Err(usage("verify-example fixes q = 2; --order is not accepted"));
    }
    let q = 2;
    let f = parse("z*zbar")?.truncate(q)?;
    let g = parse("1 - z*zbar")?.truncate(q)?;
    let fg: QuotientElement = f.diamond_mul(&g)?;
    let norm = |e: &QuotientElement| sup_norm(e.rep(), &ctx.region, &ctx.cfg).map(|n| n.value);
    let (nf, ng, nfg) = (norm(&f)?, norm(&g)?, norm(&fg)?);
    let submultiplicative = nfg <= nf * ng;
    let tol = 1e-3;
    let within = |x: f64, want: f64| x >= want - tol && x <= want;
    let pass = within(nf, 1.0) && within(ng, 0.75) && within(nfg, 1.0) && !submultiplicative;

    let mut r = ctx.report("verify-example");
    r.input("f", "z*zbar")
        .input("g", "1 - z*zbar")
        .input("q", q);
    r.result("norm_f", nf)
        .result("norm_g", ng)
        .result("norm_fg", nfg)
        .result("product_of_norms", nf * ng)
        .result("submultiplicative", submultiplicative)
        .result("canonical_fg", polyq::print_canonical(fg.rep())?)
        .result("pass", pass);
    let body = r.to_json();
    if pass {
        Ok(body)
    } else {
        Err(Failure { code: 3, body })
    }
}

fn emit(v: &Value, output: Output) {
    match output {
        Output::Json => println!("{v}"),
        Output::Csv => print!("{}", report::to_csv(v)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let msg = e.render().to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments");
            println!(
                "{}",
                json!({ "error": first.trim_start_matches("error: ") })
            );
            return ExitCode::from(2);
        }
    };
    let output = cli.run.output;
    match run(cli) {
        Ok(v) => {
            emit(&v, output);
            ExitCode::SUCCESS
        }
        Err(f) => {
            emit(&f.body, output);
            ExitCode::from(f.code)
        }
    }
}
