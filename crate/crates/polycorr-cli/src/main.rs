//! `polycorr` — evaluate correlation functions of the classical
//! orthogonal polynomials, export tables, and run the verification
//! suites.
//!
//! Exit codes: 0 success, 1 evaluation/suite failure, 2 argument error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use polycorr::check::{self, VerifyConfig};
use polycorr::corr::{self, CorrelationQuery};
use polycorr::family::Family;
use polycorr::negative_control::Mutation;
use polycorr::quad;
use polycorr::recur::{self, CorrTable, Provenance};
use serde::Serialize;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "polycorr",
    version,
    about = "Correlation functions R_{m,n}(y) of the classical orthogonal polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate R_{m,n}(y) at a single point.
    #[command(allow_negative_numbers = true)]
    Eval(EvalArgs),
    /// Evaluate over a y grid (or emit the coefficient vector).
    #[command(allow_negative_numbers = true)]
    Table(TableArgs),
    /// Run the verification suites and report per-suite results.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Legendre,
    #[value(name = "chebyshev-t")]
    ChebyshevT,
    #[value(name = "chebyshev-u")]
    ChebyshevU,
    Gegenbauer,
    Jacobi,
    Laguerre,
    Hermite,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Oracle,
    Recurrence,
    Coeffs,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Oracle => "oracle",
            Method::Recurrence => "recurrence",
            Method::Coeffs => "coeffs",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// Finite plain-decimal/scientific reals only (no inf/nan).
fn parse_real(s: &str) -> Result<f64, String> {
    let v: f64 = s
        .parse()
        .map_err(|_| format!("`{s}` is not a decimal or scientific-notation number"))?;
    if !v.is_finite() {
        return Err(format!("`{s}` is not finite"));
    }
    Ok(v)
}

#[derive(Args)]
struct FamilyArgs {
    /// Polynomial family.
    #[arg(long, value_enum)]
    family: FamilyName,
    /// α parameter (gegenbauer, jacobi, laguerre).
    #[arg(long, value_parser = parse_real)]
    alpha: Option<f64>,
    /// β parameter (jacobi only).
    #[arg(long, value_parser = parse_real)]
    beta: Option<f64>,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Index offset m ≥ 0.
    #[arg(long)]
    m: u32,
    /// Base degree n ≥ 0.
    #[arg(long)]
    n: u32,
    /// Shift y.
    #[arg(long, value_parser = parse_real)]
    y: f64,
    /// Evaluation route.
    #[arg(long, value_enum, default_value = "closed")]
    method: Method,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
    /// First y value (inclusive).
    #[arg(long = "y-min", value_parser = parse_real)]
    y_min: f64,
    /// Last y value (inclusive).
    #[arg(long = "y-max", value_parser = parse_real)]
    y_max: f64,
    /// Number of samples (≥ 2).
    #[arg(long = "y-steps")]
    y_steps: u32,
    /// Emit the coefficient vector of R_{m,n} instead of samples.
    #[arg(long)]
    coeffs: bool,
    #[arg(long, value_enum, default_value = "closed")]
    method: Method,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Restrict family-specific suites to one family.
    #[arg(long, value_enum)]
    family: Option<FamilyName>,
    /// Multiplier applied to every suite's default tolerance.
    #[arg(long, value_parser = parse_real, default_value = "1.0")]
    tol: f64,
    /// Seed for the randomized transform suites.
    #[arg(long, default_value = "1886745721")]
    seed: u64,
    /// Negative control: run with one deliberately mutated evaluator.
    #[arg(long, hide = true)]
    inject: Option<String>,
}

fn arg_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn eval_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(1)
}

impl FamilyName {
    fn as_str(self) -> &'static str {
        match self {
            FamilyName::Legendre => "legendre",
            FamilyName::ChebyshevT => "chebyshev-t",
            FamilyName::ChebyshevU => "chebyshev-u",
            FamilyName::Gegenbauer => "gegenbauer",
            FamilyName::Jacobi => "jacobi",
            FamilyName::Laguerre => "laguerre",
            FamilyName::Hermite => "hermite",
        }
    }
}

impl FamilyArgs {
    fn build(&self) -> Result<Family<f64>, String> {
        let need_alpha = matches!(
            self.family,
            FamilyName::Gegenbauer | FamilyName::Jacobi | FamilyName::Laguerre
        );
        if need_alpha && self.alpha.is_none() {
            return Err(format!(
                "--alpha is required for --family {}",
                self.family.as_str()
            ));
        }
        if !need_alpha && self.alpha.is_some() {
            return Err(format!(
                "--alpha is not accepted for --family {}",
                self.family.as_str()
            ));
        }
        if self.family == FamilyName::Jacobi && self.beta.is_none() {
            return Err("--beta is required for --family jacobi".into());
        }
        if self.family != FamilyName::Jacobi && self.beta.is_some() {
            return Err(format!(
                "--beta is only accepted for --family jacobi, not {}",
                self.family.as_str()
            ));
        }
        let fam = match self.family {
            FamilyName::Legendre => Family::Legendre,
            FamilyName::ChebyshevT => Family::ChebyshevT,
            FamilyName::ChebyshevU => Family::ChebyshevU,
            FamilyName::Hermite => Family::Hermite,
            FamilyName::Gegenbauer => Family::Gegenbauer {
                alpha: self.alpha.unwrap(),
            },
            FamilyName::Laguerre => Family::Laguerre {
                alpha: self.alpha.unwrap(),
            },
            FamilyName::Jacobi => Family::Jacobi {
                alpha: self.alpha.unwrap(),
                beta: self.beta.unwrap(),
            },
        };
        fam.validate()
            .map_err(|e| format!("--alpha/--beta out of domain: {e}"))?;
        Ok(fam)
    }
}

/// One evaluation record; field order is the CSV column order.
#[derive(Serialize)]
struct Record {
    family: String,
    alpha: Option<f64>,
    beta: Option<f64>,
    m: u32,
    n: u32,
    y: f64,
    value: f64,
    method: &'static str,
    est_error: f64,
}

/// 17 significant digits: round-trips f64 exactly.
fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(fmt17).unwrap_or_default()
}

const CSV_HEADER: &str = "family,alpha,beta,m,n,y,value,method,est_error";

impl Record {
    fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.family,
            fmt_opt(self.alpha),
            fmt_opt(self.beta),
            self.m,
            self.n,
            fmt17(self.y),
            fmt17(self.value),
            self.method,
            fmt17(self.est_error)
        )
    }
}

fn evaluate(
    family: &Family<f64>,
    m: u32,
    n: u32,
    y: f64,
    method: Method,
) -> Result<(f64, f64), String> {
    let res = match method {
        Method::Closed => {
            let r = corr::corr(&CorrelationQuery {
                family: *family,
                m,
                n,
                y,
            })
            .map_err(|e| e.to_string())?;
            (r.value, r.est_error)
        }
        Method::Oracle => quad::corr_oracle_with_est(family, m, n, y).map_err(|e| e.to_string())?,
        Method::Coeffs => {
            let cv = corr::coefficient_vector(family, m, n).map_err(|e| e.to_string())?;
            cv.eval_with_est(y)
        }
        Method::Recurrence => {
            let closed = |mm: u32, nn: u32| {
                corr::corr(&CorrelationQuery {
                    family: *family,
                    m: mm,
                    n: nn,
                    y,
                })
                .map(|r| r.value)
            };
            if m <= 1 {
                let r = corr::corr(&CorrelationQuery {
                    family: *family,
                    m,
                    n,
                    y,
                })
                .map_err(|e| e.to_string())?;
                (r.value, r.est_error)
            } else {
                let mut seeds = CorrTable::new(*family, y);
                for mm in 0..=1u32 {
                    for nn in 0..=(n + m) {
                        seeds.set(
                            mm,
                            nn,
                            closed(mm, nn).map_err(|e| e.to_string())?,
                            Provenance::Seed,
                        );
                    }
                }
                for mm in 2..=m {
                    seeds.set(
                        mm,
                        0,
                        closed(mm, 0).map_err(|e| e.to_string())?,
                        Provenance::Seed,
                    );
                }
                let table =
                    recur::propagate_table(family, y, m, n, &seeds).map_err(|e| e.to_string())?;
                let v = table
                    .get(m, n)
                    .ok_or_else(|| "propagated table is missing the requested entry".to_string())?;
                // propagation is designed to track the closed forms to 1e-7
                (v, v.abs() * 1e-7)
            }
        }
    };
    Ok(res)
}

fn emit_records(records: &[Record], format: Format) {
    match format {
        Format::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for r in records {
                out.push_str(&r.csv_line());
                out.push('\n');
            }
            print!("{out}");
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(records).expect("serializable")
            );
        }
    }
}

fn cmd_eval(args: &EvalArgs) -> ExitCode {
    let family = match args.family.build() {
        Ok(f) => f,
        Err(e) => return arg_error(&e),
    };
    match evaluate(&family, args.m, args.n, args.y, args.method) {
        Ok((value, est_error)) => {
            let record = Record {
                family: family.name().into(),
                alpha: family.alpha(),
                beta: family.beta(),
                m: args.m,
                n: args.n,
                y: args.y,
                value,
                method: args.method.name(),
                est_error,
            };
            emit_records(std::slice::from_ref(&record), args.format);
            ExitCode::SUCCESS
        }
        Err(e) => eval_error(&e),
    }
}

fn cmd_table(args: &TableArgs) -> ExitCode {
    let family = match args.family.build() {
        Ok(f) => f,
        Err(e) => return arg_error(&e),
    };
    if args.coeffs {
        let cv = match corr::coefficient_vector(&family, args.m, args.n) {
            Ok(cv) => cv,
            Err(e) => return eval_error(&e.to_string()),
        };
        match args.format {
            Format::Csv => {
                let mut header = String::from("family,alpha,beta,m,n,method");
                let mut row = format!(
                    "{},{},{},{},{},coeffs",
                    family.name(),
                    fmt_opt(family.alpha()),
                    fmt_opt(family.beta()),
                    args.m,
                    args.n
                );
                for j in 0..=args.m {
                    header.push_str(&format!(",c{j}"));
                    row.push(',');
                    row.push_str(&fmt17(cv.coeff(j)));
                }
                println!("{header}");
                println!("{row}");
            }
            Format::Json => {
                // hand-built to keep c0..cm in index order
                let mut obj = format!(
                    "{{\"family\":\"{}\",\"alpha\":{},\"beta\":{},\"m\":{},\"n\":{},\"method\":\"coeffs\"",
                    family.name(),
                    family
                        .alpha()
                        .map(|a| serde_json::to_string(&a).expect("number"))
                        .unwrap_or_else(|| "null".into()),
                    family
                        .beta()
                        .map(|b| serde_json::to_string(&b).expect("number"))
                        .unwrap_or_else(|| "null".into()),
                    args.m,
                    args.n
                );
                for j in 0..=args.m {
                    obj.push_str(&format!(
                        ",\"c{j}\":{}",
                        serde_json::to_string(&cv.coeff(j)).expect("number")
                    ));
                }
                obj.push('}');
                println!("[{obj}]");
            }
        }
        return ExitCode::SUCCESS;
    }
    if args.y_steps < 2 {
        return arg_error("--y-steps must be at least 2 (inclusive endpoints)");
    }
    let mut records = Vec::with_capacity(args.y_steps as usize);
    for i in 0..args.y_steps {
        let t = i as f64 / (args.y_steps - 1) as f64;
        let y = args.y_min + t * (args.y_max - args.y_min);
        match evaluate(&family, args.m, args.n, y, args.method) {
            Ok((value, est_error)) => records.push(Record {
                family: family.name().into(),
                alpha: family.alpha(),
                beta: family.beta(),
                m: args.m,
                n: args.n,
                y,
                value,
                method: args.method.name(),
                est_error,
            }),
            Err(e) => return eval_error(&e),
        }
    }
    records.sort_by(|a, b| a.y.total_cmp(&b.y));
    emit_records(&records, args.format);
    ExitCode::SUCCESS
}

fn cmd_verify(args: &VerifyArgs) -> ExitCode {
    if args.tol <= 0.0 {
        return arg_error("--tol must be a positive tolerance multiplier");
    }
    let mutation = match &args.inject {
        None => None,
        Some(name) => match Mutation::parse(name) {
            Some(m) => Some(m),
            None => {
                return arg_error(&format!(
                    "--inject must be one of {:?}",
                    Mutation::ALL.map(|m| m.name())
                ))
            }
        },
    };
    let cfg = VerifyConfig {
        family: args.family.map(|f| f.as_str().to_string()),
        tol_scale: args.tol,
        seed: args.seed,
        mutation,
    };
    let outcomes = check::run_all(&cfg);
    let mut all_passed = true;
    for o in &outcomes {
        let status = if o.passed() { "PASS" } else { "FAIL" };
        println!(
            "suite {:22} {status}  checks {:6}  failures {:5}  worst {:9.3e}  tol {:8.1e}",
            o.name, o.checks, o.failures, o.worst, o.tolerance
        );
        for note in &o.notes {
            println!("    note: {note}");
        }
        all_passed &= o.passed();
    }
    if all_passed {
        println!("all suites passed");
        ExitCode::SUCCESS
    } else {
        let failing: Vec<&str> = outcomes
            .iter()
            .filter(|o| !o.passed())
            .map(|o| o.name)
            .collect();
        println!("FAILED suites: {}", failing.join(", "));
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
    }
}
