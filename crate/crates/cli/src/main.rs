//! `weyl`: command-line front end for weyl-core.
//!
//! Exit codes: 0 pass, 1 property failure, 2 usage or parse error, 3 zero
//! module, 4 inconclusive.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use weyl_core::corpus::{load_dir, load_file};
use weyl_core::filtration::{
    interleave_width, GoodFiltrationSpec, LeftIdealPresentation, TruncationParams,
};
use weyl_core::hilbert::{filtration_dimension, module_dimension, DimConfig, HilbertFit};
use weyl_core::lab::{
    bernstein_corpus, check_factorial_identity, check_recursion, check_vanishing,
    independence_rank, product_rule_suite, submodule_monotonicity, IdentityReport, Verdict,
};
use weyl_core::parser::{parse, parse_list, parse_polynomial};
use weyl_core::report::{
    corpus_json, corpus_table, fit_json, fit_table, identity_json, independence_json,
    submodule_json, table, tally,
};
use weyl_core::{Degree, Error, Polynomial, Truncation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Table,
}

#[derive(Parser, Debug)]
#[command(
    name = "weyl",
    version,
    about = "Exact computations with Weyl-algebra modules"
)]
struct Cli {
    /// Number of variables
    #[arg(short = 'n', global = true, default_value_t = 1)]
    n: usize,
    /// Extra degree allowed for ideal products (default: max generator degree + 2)
    #[arg(long, global = true)]
    slack: Option<u32>,
    /// Largest filtration step sampled when fitting Hilbert polynomials
    #[arg(long, global = true, default_value_t = 16)]
    budget: u32,
    /// Number of vanishing top differences required to accept a fit
    #[arg(long, global = true, default_value_t = 4)]
    window: u32,
    #[arg(long, global = true, value_enum, default_value_t = Output::Table)]
    output: Output,
    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Drop polynomial terms of total degree above N
    #[arg(long, global = true, value_name = "N")]
    trunc: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the normal form of an operator
    Normalize { expr: String },
    /// Apply an operator to a polynomial
    Apply { op: String, poly: String },
    /// Hilbert polynomial and dimension of A_n / I
    Dim {
        /// Corpus file describing the module
        file: Option<PathBuf>,
        /// Comma-separated ideal generators (empty for I = 0)
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Check identities from the proof of the Bernstein inequality
    Check(CheckArgs),
    /// Compare two good filtrations of the module in a corpus file
    Compare {
        file: PathBuf,
        #[arg(long = "t-max", default_value_t = 8)]
        t_max: u32,
    },
    /// Run the Bernstein-inequality corpus
    Corpus {
        #[arg(default_value = "corpus")]
        dir: PathBuf,
    },
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Product rule on random polynomials
    #[arg(long)]
    eq1: bool,
    /// f^s d^t z = 0 for s > t
    #[arg(long)]
    eq2: bool,
    /// The operator recursion behind the vanishing
    #[arg(long)]
    eq3: bool,
    /// f^t d^t z = (-1)^t t! f'^t z and f'^t z != 0
    #[arg(long)]
    eq4: bool,
    /// Rank of the d^alpha z in D / D(x_1..x_h)
    #[arg(long)]
    independence: bool,
    /// Dimension of a cyclic submodule is at most that of the module
    #[arg(long)]
    submodule: bool,
    /// Univariate polynomial (default: x1, x1^2 - 2, x1^3 + x1 + 1)
    #[arg(long = "f")]
    f: Option<String>,
    #[arg(long = "s")]
    s: Option<u32>,
    #[arg(long = "t")]
    t: Option<u32>,
    #[arg(long = "h")]
    h: Option<usize>,
    /// Ideal for --submodule
    #[arg(long)]
    ideal: Option<String>,
    /// Submodule generator for --submodule
    #[arg(long = "p")]
    p: Option<String>,
    /// Number of random cases for --eq1
    #[arg(long, default_value_t = 200)]
    cases: usize,
}

/// Failure modes mapped to exit codes.
enum Failure {
    Property,
    Usage(String),
    Zero,
    Inconclusive(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ZeroModule => Failure::Zero,
            Error::Inconclusive(why) => Failure::Inconclusive(why),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn verdict_outcome(v: Verdict) -> Outcome {
    match v {
        Verdict::Pass => Ok(()),
        Verdict::Fail => Err(Failure::Property),
        Verdict::Inconclusive => Err(Failure::Inconclusive(
            "some checks did not stabilize".into(),
        )),
    }
}

struct Ctx {
    n: usize,
    output: Output,
    seed: u64,
    trunc: Truncation,
    config: DimConfig,
}

impl Ctx {
    fn emit_json(&self, v: &Value) {
        println!("{}", serde_json::to_string(v).expect("serializable"));
    }
}

fn bernstein_verdict(n: usize, fit: &HilbertFit) -> Verdict {
    match fit.degree {
        Degree::Finite(d) if d as usize >= n => Verdict::Pass,
        _ => Verdict::Fail,
    }
}

fn cmd_dim(ctx: &Ctx, file: Option<PathBuf>, ideal: Option<String>) -> Outcome {
    let (n, ideal) = match (file, ideal) {
        (Some(path), None) => {
            let e = load_file(&path)?;
            (e.n, e.ideal)
        }
        (None, Some(list)) => (
            ctx.n,
            LeftIdealPresentation::new(ctx.n, parse_list(&list, ctx.n)?)?,
        ),
        _ => {
            return Err(Failure::Usage(
                "dim needs exactly one of FILE or --ideal".into(),
            ))
        }
    };
    let fit = module_dimension(&ideal, &ctx.config)?;
    let verdict = bernstein_verdict(n, &fit);
    let line = format!("d >= n: {}", verdict);
    match ctx.output {
        Output::Json => {
            let mut v = fit_json(n, &fit);
            v["verdict"] = json!(line);
            ctx.emit_json(&v);
        }
        Output::Table => {
            print!("{}", fit_table(n, &fit));
            println!("{}", line);
        }
    }
    verdict_outcome(verdict)
}

fn default_fs(n: usize) -> Result<Vec<Polynomial>, Error> {
    ["x1", "x1^2 - 2", "x1^3 + x1 + 1"]
        .iter()
        .map(|s| parse_polynomial(s, n))
        .collect()
}

fn cmd_check(ctx: &Ctx, a: &CheckArgs) -> Outcome {
    if !(a.eq1 || a.eq2 || a.eq3 || a.eq4 || a.independence || a.submodule) {
        return Err(Failure::Usage(
            "choose at least one of --eq1 --eq2 --eq3 --eq4 --independence --submodule".into(),
        ));
    }
    let n = ctx.n;
    let params = &ctx.config.params;
    let fs = match &a.f {
        Some(f) => vec![parse_polynomial(f, n)?],
        None => default_fs(n)?,
    };
    let mut reports: Vec<IdentityReport> = Vec::new();
    let mut extra_json: Vec<Value> = Vec::new();
    let mut extra_rows: Vec<Vec<String>> = Vec::new();
    let mut verdicts: Vec<Verdict> = Vec::new();
    let mut product_rule_summary = None;
    if a.eq1 {
        let r = product_rule_suite(n, ctx.seed, a.cases)?;
        let passed = r.iter().filter(|r| r.holds()).count();
        product_rule_summary = Some(format!(
            "product rule: {}/{} PASS (seed {})",
            passed,
            r.len(),
            ctx.seed
        ));
        reports.extend(r);
    }
    let pairs: Vec<(u32, u32)> = match (a.s, a.t) {
        (Some(s), Some(t)) => vec![(s, t)],
        (Some(s), None) => (0..s).map(|t| (s, t)).collect(),
        (None, Some(t)) => (t + 1..=4.max(t + 1)).map(|s| (s, t)).collect(),
        (None, None) => (1..=4).flat_map(|s| (0..s).map(move |t| (s, t))).collect(),
    };
    if a.eq2 {
        for f in &fs {
            for &(s, t) in &pairs {
                reports.push(check_vanishing(f, s, t, params)?);
            }
        }
    }
    if a.eq3 {
        for f in &fs {
            for &(s, t) in pairs.iter().filter(|(_, t)| *t >= 1) {
                reports.push(check_recursion(f, s, t)?);
            }
        }
    }
    if a.eq4 {
        let ts: Vec<u32> = a.t.map_or_else(|| (0..=3).collect(), |t| vec![t]);
        for f in &fs {
            for &t in &ts {
                reports.push(check_factorial_identity(f, t, params)?);
            }
        }
    }
    if a.independence {
        let h =
            a.h.ok_or_else(|| Failure::Usage("--independence needs --h".into()))?;
        let ts: Vec<u32> = a.t.map_or_else(|| (0..=5).collect(), |t| vec![t]);
        for t in ts {
            let r = independence_rank(n, h, t, params)?;
            extra_json.push(independence_json(&r));
            extra_rows.push(vec![
                "independence".into(),
                format!("n={} h={} t={}", n, h, t),
                format!(
                    "rank {} = C({}, {}) = {}",
                    r.rank,
                    t as usize + h,
                    h,
                    r.expected
                ),
                r.verdict.to_string(),
            ]);
            verdicts.push(r.verdict);
        }
    }
    if a.submodule {
        let ideal = a
            .ideal
            .as_deref()
            .ok_or_else(|| Failure::Usage("--submodule needs --ideal".into()))?;
        let p =
            a.p.as_deref()
                .ok_or_else(|| Failure::Usage("--submodule needs --p".into()))?;
        let ideal = LeftIdealPresentation::new(n, parse_list(ideal, n)?)?;
        let r = submodule_monotonicity(&ideal, &parse(p, n)?, &ctx.config)?;
        extra_json.push(submodule_json(&r));
        extra_rows.push(vec![
            "submodule".into(),
            format!("p={}", r.p),
            format!("d_sub {} <= d_full {}", r.d_sub, r.d_full),
            r.verdict.to_string(),
        ]);
        verdicts.push(r.verdict);
    }
    verdicts.extend(reports.iter().map(|r| r.verdict));
    let overall = Verdict::all(verdicts.iter().copied());
    let (pass, fail, inconclusive) = tally(verdicts.iter().copied());
    match ctx.output {
        Output::Json => {
            let mut all: Vec<Value> = reports.iter().map(identity_json).collect();
            all.extend(extra_json);
            ctx.emit_json(&json!({
                "seed": ctx.seed,
                "reports": all,
                "passed": pass,
                "failed": fail,
                "inconclusive": inconclusive,
                "verdict": overall.as_str(),
            }));
        }
        Output::Table => {
            // the random product-rule cases are summarized, everything else listed
            let mut rows: Vec<Vec<String>> = reports
                .iter()
                .filter(|r| r.identity != "product_rule" || !r.holds())
                .map(|r| {
                    let params: Vec<String> = r
                        .parameters
                        .iter()
                        .map(|(k, v)| format!("{}={}", k, v))
                        .collect();
                    vec![
                        r.identity.to_string(),
                        params.join(" "),
                        r.witness.clone().unwrap_or_default(),
                        r.verdict.to_string(),
                    ]
                })
                .collect();
            rows.extend(extra_rows);
            if !rows.is_empty() {
                print!(
                    "{}",
                    table(&["check", "parameters", "detail", "verdict"], &rows)
                );
            }
            if let Some(s) = product_rule_summary {
                println!("{}", s);
            }
            println!(
                "{} passed, {} failed, {} inconclusive: {}",
                pass, fail, inconclusive, overall
            );
        }
    }
    verdict_outcome(overall)
}

fn degree_text(fit: &Result<HilbertFit, Error>) -> String {
    match fit {
        Ok(f) => f.degree.to_string(),
        Err(Error::Inconclusive(_)) => "inconclusive".into(),
        Err(e) => e.to_string(),
    }
}

fn cmd_compare(ctx: &Ctx, file: PathBuf, t_max: u32) -> Outcome {
    let entry = load_file(&file)?;
    let (gamma, omega) = match entry.filtrations.as_slice() {
        [] => {
            return Err(Failure::Usage(format!(
                "{} defines no filtration",
                file.display()
            )))
        }
        [only] => (
            GoodFiltrationSpec::standard(entry.ideal.clone()),
            only.clone(),
        ),
        [first, second, ..] => (first.clone(), second.clone()),
    };
    let w = interleave_width(&gamma, &omega, t_max, &ctx.config.params)?;
    let dg = filtration_dimension(&gamma, &ctx.config);
    let do_ = filtration_dimension(&omega, &ctx.config);
    let mut verdicts = vec![if w.width.is_some() {
        Verdict::Pass
    } else {
        Verdict::Fail
    }];
    if !w.stabilized {
        verdicts.push(Verdict::Inconclusive);
    }
    let degrees = match (&dg, &do_) {
        (Ok(a), Ok(b)) if a.degree == b.degree => Verdict::Pass,
        (Ok(_), Ok(_)) => Verdict::Fail,
        (Err(Error::ZeroModule), _) | (_, Err(Error::ZeroModule)) => return Err(Failure::Zero),
        _ => Verdict::Inconclusive,
    };
    verdicts.push(degrees);
    let overall = Verdict::all(verdicts);
    let width = w
        .width
        .map_or_else(|| "not found".to_string(), |w| w.to_string());
    match ctx.output {
        Output::Json => ctx.emit_json(&json!({
            "name": entry.name,
            "n": entry.n,
            "t_max": t_max,
            "w": w.width,
            "stabilized": w.stabilized,
            "degree_gamma": dg.as_ref().ok().map(|f| weyl_core::report::degree_json(f.degree)),
            "degree_omega": do_.as_ref().ok().map(|f| weyl_core::report::degree_json(f.degree)),
            "degrees_equal": degrees.as_str(),
            "verdict": overall.as_str(),
        })),
        Output::Table => {
            println!("w = {} (t_max = {})", width, t_max);
            println!("degree(Gamma) = {}", degree_text(&dg));
            println!("degree(Omega) = {}", degree_text(&do_));
            println!("equal Hilbert degrees: {}", degrees);
        }
    }
    verdict_outcome(overall)
}

fn cmd_corpus(ctx: &Ctx, dir: PathBuf) -> Outcome {
    let entries = load_dir(&dir)?;
    let results = bernstein_corpus(&entries, &ctx.config)?;
    let overall = Verdict::all(results.iter().map(|r| r.verdict));
    match ctx.output {
        Output::Json => ctx.emit_json(&corpus_json(&results)),
        Output::Table => {
            print!("{}", corpus_table(&results));
            let (p, f, i) = tally(results.iter().map(|r| r.verdict));
            println!(
                "{} entries: {} passed, {} failed, {} inconclusive",
                results.len(),
                p,
                f,
                i
            );
        }
    }
    verdict_outcome(overall)
}

fn run(cli: Cli) -> Outcome {
    if cli.n == 0 {
        return Err(Failure::Usage("-n must be positive".into()));
    }
    let ctx = Ctx {
        n: cli.n,
        output: cli.output,
        seed: cli.seed,
        trunc: Truncation(cli.trunc),
        config: DimConfig {
            params: TruncationParams {
                slack: cli.slack,
                ..TruncationParams::default()
            },
            budget: cli.budget,
            window: cli.window,
        },
    };
    match cli.command {
        Command::Normalize { expr } => {
            let p = parse(&expr, ctx.n)?;
            match ctx.output {
                Output::Json => ctx.emit_json(&json!({ "n": ctx.n, "normal_form": p.to_string() })),
                Output::Table => println!("{}", p),
            }
            Ok(())
        }
        Command::Apply { op, poly } => {
            let p = parse(&op, ctx.n)?;
            let f = parse_polynomial(&poly, ctx.n)?;
            let out = p.apply_truncated(&f, ctx.trunc)?;
            match ctx.output {
                Output::Json => ctx.emit_json(&json!({ "n": ctx.n, "result": out.to_string() })),
                Output::Table => println!("{}", out),
            }
            Ok(())
        }
        Command::Dim { file, ideal } => cmd_dim(&ctx, file, ideal),
        Command::Check(args) => cmd_check(&ctx, &args),
        Command::Compare { file, t_max } => cmd_compare(&ctx, file, t_max),
        Command::Corpus { dir } => cmd_corpus(&ctx, dir),
    }
}

fn configure_threads() {
    if let Some(k) = std::env::var("WEYL_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
    {
        if k > 0 {
            // only fails if a pool already exists, which cannot happen this early
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build_global();
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    configure_threads();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Property) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(Failure::Zero) => {
            eprintln!("error: {}", Error::ZeroModule);
            ExitCode::from(3)
        }
        Err(Failure::Inconclusive(why)) => {
            eprintln!("inconclusive: {}", why);
            ExitCode::from(4)
        }
    }
}
