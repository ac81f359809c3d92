//! Command line for exact Quot-scheme classes on curves, their numerical
//! specializations, and the brute-force oracles that cross-check them.
//!
//! Exit codes: 0 on success, 1 when a verification ran and failed (a
//! `verify-*` mismatch, a failing suite cell, or curve data caught by a
//! consistency check), 2 on usage errors, unreadable input, and exhausted
//! operation budgets. All numbers in JSON output are decimal strings, so
//! nothing is rounded; output is byte-identical across runs.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use quotmotive::motive::{
    betti_numbers, euler_characteristic, poincare_polynomial, poincare_series_product,
    punctual_class, quot_class, quot_point_count, sym_point_count, verify_stratification,
};
use quotmotive::oracle::{
    closed_point_counts, count_colength_submodules_affine, count_punctual_quotients,
    curve_point_counts, factor_prime_power, quot_point_count_bruteforce_p1,
    sym_point_count_bruteforce,
};
use quotmotive::suite::SuiteReport;
use quotmotive::{run_suite, Budget, CurveSpec, MotiveError, OracleError, SuiteConfig};

const MAX_N: u32 = 24;
const MAX_R: u32 = 6;
const MAX_GENUS: u32 = 8;

#[derive(Parser)]
#[command(
    name = "quotmotive",
    version,
    about = "Exact classes of Quot schemes of points on curves, their specializations, and enumeration cross-checks"
)]
struct Cli {
    /// Emit JSON on stdout instead of plain text
    #[arg(long, global = true)]
    json: bool,

    /// Operation budget for enumeration commands (default: QUOTMOTIVE_BUDGET
    /// or 10000000)
    #[arg(long, global = true)]
    budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Class of the Quot scheme, as a polynomial in L and the symbols S_m
    Class(NrArgs),
    /// Class of the stratum of quotients supported at one fixed point
    Punctual(NrArgs),
    /// Poincare polynomial in t
    Poincare(GnrArgs),
    /// Betti numbers b_0 .. b_{2nr}
    Betti(GnrArgs),
    /// Topological Euler characteristic
    Euler(GnrArgs),
    /// Number of F_q points of the Quot scheme of a curve
    CountPoints(CountArgs),
    /// Number of F_q points of the m-th symmetric power of a curve
    SymPoints(SymArgs),
    /// Check the open/punctual stratification identity in the class ring
    VerifyStratification(StratArgs),
    /// Check composition-sum Poincare polynomials against the product formula
    VerifyProduct(ProductArgs),
    /// Direct enumerations, sharing no formulas with the commands above
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Run the whole cross-validation grid and report each cell
    Suite(SuiteArgs),
}

#[derive(Args)]
struct NrArgs {
    /// Length of the quotient
    #[arg(long)]
    n: u32,
    /// Rank of the sheaf being quotiented
    #[arg(long)]
    r: u32,
}

#[derive(Args)]
struct GnrArgs {
    /// Genus of the curve
    #[arg(long)]
    genus: u32,
    /// Length of the quotient
    #[arg(long)]
    n: u32,
    /// Rank of the sheaf being quotiented
    #[arg(long)]
    r: u32,
}

#[derive(Args)]
struct CountArgs {
    /// Field size, a prime power
    #[arg(long)]
    q: u64,
    /// Length of the quotient
    #[arg(long)]
    n: u32,
    /// Rank of the sheaf being quotiented
    #[arg(long)]
    r: u32,
    /// Curve description file; defaults to the projective line
    #[arg(long)]
    curve: Option<PathBuf>,
}

#[derive(Args)]
struct SymArgs {
    /// Field size, a prime power
    #[arg(long)]
    q: u64,
    /// Symmetric-power degree
    #[arg(long)]
    m: u32,
    /// Curve description file; defaults to the projective line
    #[arg(long)]
    curve: Option<PathBuf>,
}

#[derive(Args)]
struct StratArgs {
    /// Length of the quotient
    #[arg(long)]
    n: u32,
    /// Rank of the sheaf being quotiented
    #[arg(long)]
    r: u32,
    /// Number of punctured points in the open stratum
    #[arg(long, default_value_t = 1)]
    removed_points: u32,
}

#[derive(Args)]
struct ProductArgs {
    /// Genus of the curve
    #[arg(long)]
    genus: u32,
    /// Rank of the sheaf being quotiented
    #[arg(long)]
    r: u32,
    /// Compare coefficients of u^0 .. u^order
    #[arg(long, default_value_t = 4)]
    order: u32,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Count quotients supported at one point, by enumerating normal forms
    Punctual(OracleNrArgs),
    /// Count colength-n submodules of a free module on the affine line
    Affine(OracleNrArgs),
    /// Count F_q points of the Quot scheme of a free sheaf on the line
    QuotP1(OracleNrArgs),
    /// Count degree-m effective divisors of a curve from its plane model
    Sym(OracleSymArgs),
    /// Count points of a plane model over extension fields
    CurvePoints(OracleCurveArgs),
}

#[derive(Args)]
struct OracleNrArgs {
    /// Field size, a prime power
    #[arg(long)]
    q: u64,
    /// Colength / quotient length
    #[arg(long)]
    n: u32,
    /// Rank of the free module
    #[arg(long)]
    r: u32,
}

#[derive(Args)]
struct OracleSymArgs {
    /// Curve description file; must carry a plane equation
    #[arg(long)]
    curve: PathBuf,
    /// Field size, a prime power
    #[arg(long)]
    q: u64,
    /// Symmetric-power degree
    #[arg(long)]
    m: u32,
}

#[derive(Args)]
struct OracleCurveArgs {
    /// Curve description file; must carry a plane equation
    #[arg(long)]
    curve: PathBuf,
    /// Field size, a prime power
    #[arg(long)]
    q: u64,
    /// Count points over F_{q^d} for d up to this bound
    #[arg(long, default_value_t = 3)]
    max_degree: u32,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long, default_value_t = 3)]
    max_n: u32,
    #[arg(long, default_value_t = 3)]
    max_r: u32,
    #[arg(long, default_value_t = 2)]
    max_genus: u32,
    /// Field sizes for the enumeration criteria (repeatable)
    #[arg(long = "q", default_values_t = vec![2u64, 3])]
    qs: Vec<u64>,
    /// Extra curve description file to run through the curve criteria
    #[arg(long, requires = "curve_q")]
    curve: Option<PathBuf>,
    /// Field size for the extra curve
    #[arg(long, requires = "curve")]
    curve_q: Option<u64>,
}

enum CliError {
    Input(String),
    Oracle(OracleError),
    Motive(MotiveError),
}

impl CliError {
    fn message(&self) -> String {
        match self {
            CliError::Input(msg) => msg.clone(),
            CliError::Oracle(e) => e.to_string(),
            CliError::Motive(e) => e.to_string(),
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Motive(_) => 2,
            CliError::Oracle(e) => match e {
                // the data itself failed a consistency check
                OracleError::WeilBoundViolated { .. }
                | OracleError::InconsistentPointCounts { .. } => 1,
                _ => 2,
            },
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Oracle(e)
    }
}

impl From<MotiveError> for CliError {
    fn from(e: MotiveError) -> Self {
        CliError::Motive(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((value, text, pass)) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&value).expect("output serializes")
                );
            } else {
                println!("{text}");
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}

fn check_nr(n: u32, r: u32) -> Result<(), CliError> {
    if n > MAX_N {
        return Err(CliError::Input(format!("n must be at most {MAX_N}, got {n}")));
    }
    if r == 0 || r > MAX_R {
        return Err(CliError::Input(format!(
            "r must be between 1 and {MAX_R}, got {r}"
        )));
    }
    Ok(())
}

fn check_genus(genus: u32) -> Result<(), CliError> {
    if genus > MAX_GENUS {
        return Err(CliError::Input(format!(
            "genus must be at most {MAX_GENUS}, got {genus}"
        )));
    }
    Ok(())
}

fn check_q(q: u64) -> Result<(), CliError> {
    factor_prime_power(q)?;
    Ok(())
}

fn make_budget(cli: &Cli) -> Budget {
    match cli.budget {
        Some(limit) => Budget::new(limit),
        None => Budget::from_env(),
    }
}

fn load_curve(path: &Path) -> Result<CurveSpec, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    Ok(CurveSpec::from_json_str(&text)?)
}

fn big_strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn run(cli: &Cli) -> Result<(Value, String, bool), CliError> {
    match &cli.command {
        Command::Class(args) => {
            check_nr(args.n, args.r)?;
            let class = quot_class(args.n, args.r);
            Ok((
                json!({"n": args.n, "r": args.r, "class": class.to_string()}),
                class.to_string(),
                true,
            ))
        }
        Command::Punctual(args) => {
            check_nr(args.n, args.r)?;
            let class = punctual_class(args.n, args.r);
            Ok((
                json!({"n": args.n, "r": args.r, "class": class.to_string()}),
                class.to_string(),
                true,
            ))
        }
        Command::Poincare(args) => {
            check_genus(args.genus)?;
            check_nr(args.n, args.r)?;
            let poly = poincare_polynomial(args.genus, args.n, args.r);
            Ok((
                json!({
                    "genus": args.genus,
                    "n": args.n,
                    "r": args.r,
                    "poincare": poly.to_string(),
                }),
                poly.to_string(),
                true,
            ))
        }
        Command::Betti(args) => {
            check_genus(args.genus)?;
            check_nr(args.n, args.r)?;
            let betti = betti_numbers(args.genus, args.n, args.r);
            let rendered = big_strings(&betti);
            Ok((
                json!({
                    "genus": args.genus,
                    "n": args.n,
                    "r": args.r,
                    "betti": rendered,
                }),
                rendered.join(" "),
                true,
            ))
        }
        Command::Euler(args) => {
            check_genus(args.genus)?;
            check_nr(args.n, args.r)?;
            let euler = euler_characteristic(args.genus, args.n, args.r);
            Ok((
                json!({
                    "genus": args.genus,
                    "n": args.n,
                    "r": args.r,
                    "euler": euler.to_string(),
                }),
                euler.to_string(),
                true,
            ))
        }
        Command::CountPoints(args) => {
            check_nr(args.n, args.r)?;
            check_q(args.q)?;
            let (curve, label) = match &args.curve {
                Some(path) => (load_curve(path)?, path.display().to_string()),
                None => (CurveSpec::projective_line(), "projective-line".to_string()),
            };
            check_genus(curve.genus)?;
            let count = quot_point_count(&curve, args.q, args.n, args.r)?;
            Ok((
                json!({
                    "curve": label,
                    "q": args.q,
                    "n": args.n,
                    "r": args.r,
                    "count": count.to_string(),
                }),
                count.to_string(),
                true,
            ))
        }
        Command::SymPoints(args) => {
            check_q(args.q)?;
            if args.m > MAX_N {
                return Err(CliError::Input(format!(
                    "m must be at most {MAX_N}, got {}",
                    args.m
                )));
            }
            let (curve, label) = match &args.curve {
                Some(path) => (load_curve(path)?, path.display().to_string()),
                None => (CurveSpec::projective_line(), "projective-line".to_string()),
            };
            check_genus(curve.genus)?;
            let count = sym_point_count(&curve, args.q, args.m)?;
            Ok((
                json!({
                    "curve": label,
                    "q": args.q,
                    "m": args.m,
                    "count": count.to_string(),
                }),
                count.to_string(),
                true,
            ))
        }
        Command::VerifyStratification(args) => {
            check_nr(args.n, args.r)?;
            if args.removed_points > 4 {
                return Err(CliError::Input(format!(
                    "removed-points must be at most 4, got {}",
                    args.removed_points
                )));
            }
            let outcome = verify_stratification(args.n, args.r, args.removed_points);
            let pass = outcome.holds();
            let verdict = if pass { "PASS" } else { "FAIL" };
            Ok((
                json!({
                    "n": args.n,
                    "r": args.r,
                    "removed_points": args.removed_points,
                    "lhs": outcome.lhs.to_string(),
                    "rhs": outcome.rhs.to_string(),
                    "pass": pass,
                }),
                format!(
                    "{verdict}: direct class {} vs stratified sum {}",
                    outcome.lhs, outcome.rhs
                ),
                pass,
            ))
        }
        Command::VerifyProduct(args) => {
            check_genus(args.genus)?;
            check_nr(args.order, args.r)?;
            let series = poincare_series_product(args.genus, args.r, args.order as usize);
            let mut rows = Vec::new();
            let mut lines = Vec::new();
            let mut all = true;
            for n in 0..=args.order {
                let sum = poincare_polynomial(args.genus, n, args.r);
                let product = series.coefficient(n as usize).clone();
                let pass = sum == product;
                all &= pass;
                rows.push(json!({
                    "n": n,
                    "sum": sum.to_string(),
                    "product": product.to_string(),
                    "pass": pass,
                }));
                lines.push(format!(
                    "n={n}: {} ({sum})",
                    if pass { "PASS" } else { "FAIL" }
                ));
            }
            lines.push(format!(
                "verify-product: {}",
                if all { "PASS" } else { "FAIL" }
            ));
            Ok((
                json!({
                    "genus": args.genus,
                    "r": args.r,
                    "order": args.order,
                    "pass": all,
                    "coefficients": rows,
                }),
                lines.join("\n"),
                all,
            ))
        }
        Command::Oracle(oracle) => run_oracle(cli, oracle),
        Command::Suite(args) => {
            let extra_curve = match (&args.curve, args.curve_q) {
                (Some(path), Some(q)) => {
                    check_q(q)?;
                    Some((load_curve(path)?, q))
                }
                (None, None) => None,
                _ => {
                    return Err(CliError::Input(
                        "--curve and --curve-q go together".to_string(),
                    ))
                }
            };
            // grid bounds, not parameters: zero is a legal (empty) bound
            if args.max_n > MAX_N || args.max_r > MAX_R {
                return Err(CliError::Input(format!(
                    "suite bounds exceed n <= {MAX_N}, r <= {MAX_R}"
                )));
            }
            check_genus(args.max_genus)?;
            for &q in &args.qs {
                check_q(q)?;
            }
            let config = SuiteConfig {
                max_n: args.max_n,
                max_r: args.max_r,
                max_genus: args.max_genus,
                qs: args.qs.clone(),
                extra_curve,
            };
            let mut budget = make_budget(cli);
            let report = run_suite(&config, &mut budget)?;
            let pass = report.all_pass();
            let value =
                serde_json::to_value(&report).expect("report serializes");
            Ok((value, suite_text(&report), pass))
        }
    }
}

fn run_oracle(cli: &Cli, oracle: &OracleCommand) -> Result<(Value, String, bool), CliError> {
    let mut budget = make_budget(cli);
    match oracle {
        OracleCommand::Punctual(args) => {
            check_nr(args.n, args.r)?;
            let count = count_punctual_quotients(args.q, args.r, args.n, &mut budget)?;
            Ok((
                json!({
                    "q": args.q,
                    "n": args.n,
                    "r": args.r,
                    "count": count.to_string(),
                    "budget_used": budget.used(),
                }),
                count.to_string(),
                true,
            ))
        }
        OracleCommand::Affine(args) => {
            check_nr(args.n, args.r)?;
            let count = count_colength_submodules_affine(args.q, args.r, args.n, &mut budget)?;
            Ok((
                json!({
                    "q": args.q,
                    "n": args.n,
                    "r": args.r,
                    "count": count.to_string(),
                    "budget_used": budget.used(),
                }),
                count.to_string(),
                true,
            ))
        }
        OracleCommand::QuotP1(args) => {
            check_nr(args.n, args.r)?;
            let count = quot_point_count_bruteforce_p1(args.q, args.r, args.n, &mut budget)?;
            Ok((
                json!({
                    "q": args.q,
                    "n": args.n,
                    "r": args.r,
                    "count": count.to_string(),
                    "budget_used": budget.used(),
                }),
                count.to_string(),
                true,
            ))
        }
        OracleCommand::Sym(args) => {
            let curve = load_curve(&args.curve)?;
            let equation = curve.equation.as_ref().ok_or_else(|| {
                CliError::Input(format!(
                    "{} has no plane equation, which the divisor enumeration needs",
                    args.curve.display()
                ))
            })?;
            let scan_depth = args.m.max(1);
            let counts =
                curve_point_counts(equation, args.q, curve.genus, scan_depth, &mut budget)?;
            let count = sym_point_count_bruteforce(&counts, args.m, &mut budget)?;
            Ok((
                json!({
                    "curve": args.curve.display().to_string(),
                    "q": args.q,
                    "m": args.m,
                    "count": count.to_string(),
                    "budget_used": budget.used(),
                }),
                count.to_string(),
                true,
            ))
        }
        OracleCommand::CurvePoints(args) => {
            if args.max_degree == 0 {
                return Err(CliError::Input(
                    "max-degree must be at least 1".to_string(),
                ));
            }
            let curve = load_curve(&args.curve)?;
            let equation = curve.equation.as_ref().ok_or_else(|| {
                CliError::Input(format!(
                    "{} has no plane equation to count points on",
                    args.curve.display()
                ))
            })?;
            let counts =
                curve_point_counts(equation, args.q, curve.genus, args.max_degree, &mut budget)?;
            let closed = closed_point_counts(&counts)?;
            let rendered_counts: Vec<String> =
                counts.iter().map(|c| c.to_string()).collect();
            let rendered_closed: Vec<String> =
                closed.iter().map(|c| c.to_string()).collect();
            Ok((
                json!({
                    "curve": args.curve.display().to_string(),
                    "q": args.q,
                    "max_degree": args.max_degree,
                    "counts": rendered_counts,
                    "closed_counts": rendered_closed,
                    "budget_used": budget.used(),
                }),
                format!(
                    "points: {}\nclosed points: {}",
                    rendered_counts.join(" "),
                    rendered_closed.join(" ")
                ),
                true,
            ))
        }
    }
}

fn suite_text(report: &SuiteReport) -> String {
    let mut lines = Vec::new();
    for cell in &report.cells {
        let params: Vec<String> = cell
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        lines.push(format!(
            "{} [{}] ... {}",
            cell.criterion,
            params.join(" "),
            if cell.pass { "PASS" } else { "FAIL" }
        ));
    }
    lines.push(format!(
        "suite: {} passed, {} failed (budget used {} of {})",
        report.passed, report.failed, report.budget_used, report.budget_limit
    ));
    lines.join("\n")
}
