//! Command-line front end: `gen`, `det`, `inv`, `ldl`, `seb`, `check`,
//! `infdiv`, and `reproduce`.
//!
//! Exit codes: 0 for success/pass, 1 for a fail (or still-indeterminate)
//! verdict, 2 for usage, parse, and domain errors. Every flag can also be
//! set through an environment variable with the `TOTPOS_` prefix.
//! High-precision checks that come back indeterminate are retried once at
//! twice the precision before the verdict is reported.

use crate::error::Error;
use crate::factor::{
    bareiss_det, exact_inverse, neville_seb, sym_congruence_ldl, SebFactorization,
};
use crate::families::{
    bell_matrix, bell_triangle_matrix, beta_matrix, beta_matrix_indexed, beta_recip_matrix,
    cauchy_matrix, factorial_hankel_matrix, gamma_matrix, pascal_matrix,
    shifted_bell_triangle_matrix, stirling_matrix, symmetrized_stirling, RealIndexSet,
    StirlingKind,
};
use crate::io::{
    congruence_to_pretty, congruence_to_seb, matrix_from_csv, matrix_from_json, matrix_to_csv,
    matrix_to_json, matrix_to_pretty, report_to_json, report_to_pretty, seb_to_json,
    seb_to_pretty, verdict_str, MatrixData, ScalarKind,
};
use crate::matrix::IndexOffset;
use crate::numerics::{format_rational, format_rational_plain, parse_rational, Rational};
use crate::positivity::{
    default_tol_exponent, hankel_tp_via_pd, hp_det, infdiv_horn, infdiv_sample, is_pd_exact,
    is_pd_hp, is_psd_exact, is_tn, is_tp, is_triangular_tp, standard_grid,
    tshift_identity_check, CheckReport, TpMode, Verdict,
};
use crate::reproduce::{run_all, run_entry, SuiteConfig};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "totpos",
    version,
    about = "Exact positivity lab for beta, Pascal, Cauchy, Stirling and Bell matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Precision in bits for high-precision arithmetic
    #[arg(long, global = true, env = "TOTPOS_PRECISION", default_value_t = 128)]
    precision: u32,

    /// Tolerance exponent t, giving τ = 2^(-t); defaults to precision/2
    #[arg(long = "tol-exponent", global = true, env = "TOTPOS_TOL_EXPONENT")]
    tol_exponent: Option<u32>,

    /// Output format
    #[arg(long, global = true, env = "TOTPOS_FORMAT", value_enum, default_value_t = OutputFormat::Pretty)]
    format: OutputFormat,

    /// Seed for the randomized suite entries
    #[arg(long, global = true, env = "TOTPOS_SEED", default_value_t = 0)]
    seed: u64,

    /// Write output to a file instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Beta,
    Pascal,
    Cauchy,
    Bell,
    BellTriangle,
    ShiftedBellTriangle,
    FactorialHankel,
    StirlingFirst,
    StirlingSecond,
    SymStirlingFirst,
    SymStirlingSecond,
    Gamma,
    BetaRecip,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FileFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScalarArg {
    Rational,
    Real,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    AllMinors,
    SolidMinors,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    /// Positive definiteness (exact or high-precision, by scalar kind)
    Pd,
    /// Positive semidefiniteness (exact)
    Psd,
    /// Total positivity
    Tp,
    /// Total nonnegativity
    Tn,
    /// Triangular total positivity (lower triangular input)
    Ttp,
    /// Hankel positive-definiteness shortcut for total positivity
    HankelTp,
    /// Stirling second-kind shift identity (needs --n)
    Tshift,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InfdivMethod {
    /// Sufficient criterion: Δ log A positive definite
    Horn,
    /// Grid search for a Hadamard-power counterexample
    Sample,
}

#[derive(Args)]
struct MatrixSource {
    /// Matrix family to construct
    #[arg(long, value_enum)]
    family: Option<Family>,

    /// Size parameter n of the family
    #[arg(long)]
    n: Option<usize>,

    /// Comma-separated strictly increasing indices: reals for gamma and
    /// beta-recip, positive integers for an index-restricted beta matrix
    #[arg(long)]
    lambda: Option<String>,

    /// Second index set for gamma/beta-recip (defaults to --lambda)
    #[arg(long)]
    mu: Option<String>,

    /// Read the matrix from a JSON or CSV file instead of constructing it
    #[arg(long)]
    input: Option<PathBuf>,

    /// Input file format; inferred from the extension when omitted
    #[arg(long, value_enum)]
    input_format: Option<FileFormat>,

    /// Scalar kind override for CSV input
    #[arg(long, value_enum)]
    scalar: Option<ScalarArg>,

    /// Index offset (0 or 1) attached to CSV input
    #[arg(long)]
    offset: Option<u8>,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    source: MatrixSource,
}

#[derive(Args)]
struct InputArgs {
    #[command(flatten)]
    source: MatrixSource,
}

#[derive(Args)]
struct CheckArgs {
    /// Property to check
    #[arg(value_enum)]
    property: CheckKind,

    #[command(flatten)]
    source: MatrixSource,

    /// Minor enumeration mode for tp
    #[arg(long, value_enum, default_value_t = ModeArg::AllMinors)]
    mode: ModeArg,
}

#[derive(Args)]
struct InfdivArgs {
    /// Evidence method
    #[arg(value_enum)]
    method: InfdivMethod,

    #[command(flatten)]
    source: MatrixSource,

    /// Comma-separated exponent grid for sampling;
    /// default {k/10 : 1 ≤ k ≤ 20} ∪ {1/4, 1/2}
    #[arg(long, env = "TOTPOS_GRID")]
    grid: Option<String>,
}

#[derive(Args)]
struct ReproduceArgs {
    /// Run a single named suite entry instead of all of them
    #[arg(long)]
    entry: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a matrix family and print or save it
    Gen(GenArgs),
    /// Exact (or high-precision) determinant
    Det(InputArgs),
    /// Exact inverse of a rational matrix
    Inv(InputArgs),
    /// Radical-free symmetric congruence A = Z·diag(d)·Zᵀ
    Ldl(InputArgs),
    /// Successive elementary bidiagonal (Neville) factorization
    Seb(InputArgs),
    /// Positivity checks with witness reports
    Check(CheckArgs),
    /// Infinite-divisibility evidence
    Infdiv(InfdivArgs),
    /// Run the claims-reproduction suite
    Reproduce(ReproduceArgs),
}

/// Binary entry point; returns the process exit code.
pub fn main_entry() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version on stdout with code 0, usage errors
            // on stderr with code 2
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Error> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(Error::from),
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn parse_index_list(csv: &str) -> Result<Vec<usize>, Error> {
    csv.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::parse(format!("bad integer index '{s}'")))
        })
        .collect()
}

fn build_family(src: &MatrixSource, precision: u32) -> Result<MatrixData, Error> {
    let family = src.family.expect("caller checked");
    // pascal and factorial-hankel take n ≥ 0 (their size is n+1); every
    // other sized family needs n ≥ 1
    let min_n = match family {
        Family::Pascal | Family::FactorialHankel => 0,
        _ => 1,
    };
    let need_n = |op: &str| match src.n {
        Some(n) if n >= min_n => Ok(n),
        Some(n) => Err(Error::domain(format!(
            "family {op} needs --n at least {min_n}, got {n}"
        ))),
        None => Err(Error::domain(format!("--n is required for family {op}"))),
    };
    let data = match family {
        Family::Beta => {
            if let Some(lambda) = &src.lambda {
                let idx = parse_index_list(lambda)?;
                MatrixData::Exact(beta_matrix_indexed(&idx)?)
            } else {
                MatrixData::Exact(beta_matrix(need_n("beta")?))
            }
        }
        Family::Pascal => MatrixData::Exact(pascal_matrix(need_n("pascal")?)),
        Family::Cauchy => MatrixData::Exact(cauchy_matrix(need_n("cauchy")?)),
        Family::Bell => MatrixData::Exact(bell_matrix(need_n("bell")?)),
        Family::BellTriangle => MatrixData::Exact(bell_triangle_matrix(need_n("bell-triangle")?)),
        Family::ShiftedBellTriangle => {
            MatrixData::Exact(shifted_bell_triangle_matrix(need_n("shifted-bell-triangle")?))
        }
        Family::FactorialHankel => {
            MatrixData::Exact(factorial_hankel_matrix(need_n("factorial-hankel")?))
        }
        Family::StirlingFirst => {
            MatrixData::Exact(stirling_matrix(StirlingKind::First, need_n("stirling-first")?))
        }
        Family::StirlingSecond => {
            MatrixData::Exact(stirling_matrix(StirlingKind::Second, need_n("stirling-second")?))
        }
        Family::SymStirlingFirst => MatrixData::Exact(symmetrized_stirling(
            StirlingKind::First,
            need_n("sym-stirling-first")?,
        )),
        Family::SymStirlingSecond => MatrixData::Exact(symmetrized_stirling(
            StirlingKind::Second,
            need_n("sym-stirling-second")?,
        )),
        Family::Gamma | Family::BetaRecip => {
            let lambda = src.lambda.as_ref().ok_or_else(|| {
                Error::domain("--lambda is required for the gamma and beta-recip families")
            })?;
            let lambda = RealIndexSet::parse(lambda, precision)?;
            let mu = match &src.mu {
                Some(m) => RealIndexSet::parse(m, precision)?,
                None => RealIndexSet::parse(src.lambda.as_ref().unwrap(), precision)?,
            };
            let m = if family == Family::Gamma {
                gamma_matrix(&lambda, &mu, precision)?
            } else {
                beta_recip_matrix(&lambda, &mu, precision)?
            };
            MatrixData::Real(m)
        }
    };
    Ok(data)
}

fn ingest_matrix(src: &MatrixSource, precision: u32) -> Result<MatrixData, Error> {
    let path = src.input.as_ref().expect("caller checked");
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let format = match src.input_format {
        Some(f) => f,
        None => infer_format(path)?,
    };
    match format {
        FileFormat::Json => matrix_from_json(&text),
        FileFormat::Csv => {
            let kind = src.scalar.map(|s| match s {
                ScalarArg::Rational => ScalarKind::Rational,
                ScalarArg::Real => ScalarKind::Real,
            });
            let offset = IndexOffset::from_base(src.offset.unwrap_or(0))?;
            matrix_from_csv(&text, kind, offset, precision)
        }
    }
}

fn infer_format(path: &Path) -> Result<FileFormat, Error> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("json") => Ok(FileFormat::Json),
        Some("csv") => Ok(FileFormat::Csv),
        other => Err(Error::parse(format!(
            "cannot infer input format from extension {other:?}; pass --input-format"
        ))),
    }
}

fn resolve_matrix(src: &MatrixSource, precision: u32) -> Result<MatrixData, Error> {
    match (&src.input, src.family) {
        (Some(_), None) => ingest_matrix(src, precision),
        (None, Some(_)) => build_family(src, precision),
        (Some(_), Some(_)) => Err(Error::domain("pass either --family or --input, not both")),
        (None, None) => Err(Error::domain("a matrix is required: pass --family or --input")),
    }
}

fn report_exit(report: &CheckReport) -> i32 {
    match report.verdict {
        Verdict::Pass => 0,
        _ => 1,
    }
}

fn emit_report(cli: &Cli, report: &CheckReport) -> Result<i32, Error> {
    let text = match cli.format {
        OutputFormat::Json => report_to_json(report),
        OutputFormat::Pretty => report_to_pretty(report),
        OutputFormat::Csv => {
            let mut line = format!("verdict,method,precision_bits\n{},{},",
                verdict_str(report.verdict), report.method);
            if let Some(p) = report.precision_bits {
                line.push_str(&p.to_string());
            }
            line.push('\n');
            line
        }
    };
    emit(cli, &text)?;
    Ok(report_exit(report))
}

fn emit_seb(cli: &Cli, f: &SebFactorization) -> Result<i32, Error> {
    let text = match cli.format {
        OutputFormat::Json => seb_to_json(f),
        OutputFormat::Pretty => seb_to_pretty(f),
        OutputFormat::Csv => {
            return Err(Error::domain(
                "factorizations have no CSV form; use --format json or pretty",
            ))
        }
    };
    emit(cli, &text)?;
    Ok(0)
}

/// Rerun an indeterminate high-precision check once at doubled precision.
fn with_retry(
    precision: u32,
    tol_exponent: Option<u32>,
    f: impl Fn(u32, u32) -> Result<CheckReport, Error>,
) -> Result<CheckReport, Error> {
    let tol = tol_exponent.unwrap_or_else(|| default_tol_exponent(precision));
    let first = f(precision, tol)?;
    if first.verdict != Verdict::Indeterminate {
        return Ok(first);
    }
    let p2 = precision * 2;
    let tol2 = tol_exponent.unwrap_or_else(|| default_tol_exponent(p2));
    f(p2, tol2)
}

fn dispatch(cli: &Cli) -> Result<i32, Error> {
    match &cli.command {
        Command::Gen(args) => {
            let m = resolve_matrix(&args.source, cli.precision)?;
            let text = match cli.format {
                OutputFormat::Json => matrix_to_json(&m),
                OutputFormat::Csv => matrix_to_csv(&m),
                OutputFormat::Pretty => matrix_to_pretty(&m),
            };
            emit(cli, &text)?;
            Ok(0)
        }
        Command::Det(args) => {
            let m = resolve_matrix(&args.source, cli.precision)?;
            let text = match &m {
                MatrixData::Exact(a) => {
                    let det = bareiss_det(a)?;
                    match cli.format {
                        OutputFormat::Json => format!(
                            "{{\n  \"schema\": 1,\n  \"op\": \"det\",\n  \"value\": \"{}\"\n}}",
                            format_rational(&det)
                        ),
                        OutputFormat::Csv => format!("{}\n", format_rational(&det)),
                        OutputFormat::Pretty => format!("{}\n", format_rational_plain(&det)),
                    }
                }
                MatrixData::Real(a) => {
                    let det = hp_det(a)?;
                    match cli.format {
                        OutputFormat::Json => format!(
                            "{{\n  \"schema\": 1,\n  \"op\": \"det\",\n  \"value\": \"{}\",\n  \"precision_bits\": {}\n}}",
                            det.to_decimal_string(),
                            det.precision()
                        ),
                        _ => format!("{}\n", det.to_decimal_string()),
                    }
                }
            };
            emit(cli, &text)?;
            Ok(0)
        }
        Command::Inv(args) => {
            let m = resolve_matrix(&args.source, cli.precision)?;
            let inv = exact_inverse(m.as_exact()?)?;
            let data = MatrixData::Exact(inv);
            let text = match cli.format {
                OutputFormat::Json => matrix_to_json(&data),
                OutputFormat::Csv => matrix_to_csv(&data),
                OutputFormat::Pretty => matrix_to_pretty(&data),
            };
            emit(cli, &text)?;
            Ok(0)
        }
        Command::Ldl(args) => {
            let m = resolve_matrix(&args.source, cli.precision)?;
            let c = sym_congruence_ldl(m.as_exact()?)?;
            match cli.format {
                OutputFormat::Pretty => {
                    emit(cli, &congruence_to_pretty(&c))?;
                    Ok(0)
                }
                _ => {
                    let f = congruence_to_seb(&c)?;
                    emit_seb(cli, &f)
                }
            }
        }
        Command::Seb(args) => {
            let m = resolve_matrix(&args.source, cli.precision)?;
            let f = neville_seb(m.as_exact()?)?;
            emit_seb(cli, &f)
        }
        Command::Check(args) => {
            if args.property == CheckKind::Tshift {
                let n = args
                    .source
                    .n
                    .ok_or_else(|| Error::domain("check tshift needs --n"))?;
                let report = tshift_identity_check(n)?;
                return emit_report(cli, &report);
            }
            let m = resolve_matrix(&args.source, cli.precision)?;
            let report = match (args.property, &m) {
                (CheckKind::Pd, MatrixData::Exact(a)) => is_pd_exact(a)?,
                (CheckKind::Pd, MatrixData::Real(a)) => {
                    with_retry(cli.precision, cli.tol_exponent, |p, tol| {
                        // the matrix is already built at its own precision;
                        // raise entry precision on retry
                        let scaled = a.map(|v| v.round_to(p.max(v.precision())));
                        is_pd_hp(&scaled, tol)
                    })?
                }
                (CheckKind::Psd, m) => is_psd_exact(m.as_exact()?)?,
                (CheckKind::Tp, m) => {
                    let mode = match args.mode {
                        ModeArg::AllMinors => TpMode::AllMinors,
                        ModeArg::SolidMinors => TpMode::SolidMinors,
                    };
                    is_tp(m.as_exact()?, mode)?
                }
                (CheckKind::Tn, m) => is_tn(m.as_exact()?)?,
                (CheckKind::Ttp, m) => is_triangular_tp(m.as_exact()?)?,
                (CheckKind::HankelTp, m) => hankel_tp_via_pd(m.as_exact()?)?,
                (CheckKind::Tshift, _) => unreachable!("handled above"),
            };
            emit_report(cli, &report)
        }
        Command::Infdiv(args) => {
            let m = resolve_matrix(&args.source, cli.precision)?;
            let a = m.as_exact()?;
            let report = match args.method {
                InfdivMethod::Horn => with_retry(cli.precision, cli.tol_exponent, |p, tol| {
                    infdiv_horn(a, p, tol)
                })?,
                InfdivMethod::Sample => {
                    let grid = match &args.grid {
                        Some(g) => g
                            .split(',')
                            .map(|s| parse_rational(s.trim()))
                            .collect::<Result<Vec<Rational>, Error>>()?,
                        None => standard_grid(),
                    };
                    with_retry(cli.precision, cli.tol_exponent, |p, tol| {
                        infdiv_sample(a, &grid, p, tol)
                    })?
                }
            };
            emit_report(cli, &report)
        }
        Command::Reproduce(args) => {
            let cfg = SuiteConfig {
                precision: cli.precision,
                tol_exp: cli.tol_exponent,
                seed: cli.seed,
                grid: None,
            };
            let results = match &args.entry {
                Some(name) => vec![run_entry(name, &cfg)
                    .ok_or_else(|| Error::domain(format!("unknown suite entry '{name}'")))?],
                None => run_all(&cfg),
            };
            let overall = results.iter().all(|r| r.passed);
            let text = match cli.format {
                OutputFormat::Pretty => {
                    let mut out = String::new();
                    for r in &results {
                        out.push_str(&format!(
                            "[{}] {} ({:.1?}) — {}\n",
                            if r.passed { "PASS" } else { "FAIL" },
                            r.name,
                            r.elapsed,
                            r.detail
                        ));
                    }
                    out.push_str(&format!(
                        "overall: {} ({} of {} entries passed)\n",
                        if overall { "pass" } else { "fail" },
                        results.iter().filter(|r| r.passed).count(),
                        results.len()
                    ));
                    out
                }
                OutputFormat::Json => {
                    let entries: Vec<serde_json::Value> = results
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "name": r.name,
                                "criterion": r.criterion,
                                "verdict": if r.passed { "pass" } else { "fail" },
                                "elapsed_ms": r.elapsed.as_secs_f64() * 1e3,
                                "detail": r.detail,
                            })
                        })
                        .collect();
                    let doc = serde_json::json!({
                        "schema": 1,
                        "precision_bits": cli.precision,
                        "seed": cli.seed,
                        "overall": if overall { "pass" } else { "fail" },
                        "entries": entries,
                    });
                    serde_json::to_string_pretty(&doc).expect("serializable")
                }
                OutputFormat::Csv => {
                    let mut out = String::from("name,criterion,verdict,elapsed_ms\n");
                    for r in &results {
                        out.push_str(&format!(
                            "{},{},{},{:.3}\n",
                            r.name,
                            r.criterion,
                            if r.passed { "pass" } else { "fail" },
                            r.elapsed.as_secs_f64() * 1e3
                        ));
                    }
                    out
                }
            };
            emit(cli, &text)?;
            Ok(if overall { 0 } else { 1 })
        }
    }
}
