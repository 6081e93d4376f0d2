//! `stickkit` command dispatch.
//!
//! Exit status: 0 on success, 1 when a verification sweep has failing
//! cases, 2 on usage errors and invalid arguments.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::coeff::{binomial, multinomial, trinomial, TriangleKind};
use crate::error::{Error, Result};
use crate::identity::{Evaluator, Family, IdentityCase, SweepOptions, VerificationReport};
use crate::render::{render, RenderFormat, RenderSpec};
use crate::report::{report_json, report_text, reports_json};
use crate::source::{CoefficientSource, ExactCoefficients};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "stickkit",
    version,
    about = "Exact Pascal and trinomial triangles and hockey-stick identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Render a Pascal or trinomial triangle.
    Triangle(TriangleArgs),
    /// Print a single exact coefficient.
    #[command(subcommand)]
    Coeff(CoeffCommand),
    /// Check an identity family over a rectangle of (n, k).
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Pascal,
    Trinomial,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TriangleFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct TriangleArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long, allow_negative_numbers = true)]
    rows: i64,
    /// Hockey stick to mark, as `n,k`.
    #[arg(long, value_name = "N,K")]
    highlight: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: TriangleFormat,
}

#[derive(Debug, Subcommand)]
enum CoeffCommand {
    Binomial {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    Trinomial {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    Multinomial {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(allow_negative_numbers = true, num_args = 0..)]
        parts: Vec<i64>,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// little-stick, big-stick-puck, pascal-hockey, trinomial-hockey, pyramid or all
    #[arg(long)]
    family: String,
    #[arg(long, allow_negative_numbers = true)]
    n_max: i64,
    #[arg(long, allow_negative_numbers = true)]
    k_max: i64,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
    #[arg(long)]
    fail_fast: bool,
}

/// Runs the CLI with exact coefficients.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_source(args, &ExactCoefficients::global(), out, err)
}

/// Runs the CLI with `source` backing the `verify` sweeps.
pub fn run_with_source<I, T>(args: I, source: &dyn CoefficientSource, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Triangle(args) => cmd_triangle(&args, out),
        Command::Coeff(cmd) => cmd_coeff(&cmd, out),
        Command::Verify(args) => cmd_verify(&args, source, out),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "stickkit: {e}");
            EXIT_USAGE
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Usage(format!("write failed: {e}"))
}

fn parse_highlight(text: &str) -> Result<(u64, u64)> {
    let bad = || {
        Error::Usage(format!(
            "--highlight expects `n,k` with non-negative integers, got `{text}`"
        ))
    };
    let (n, k) = text.split_once(',').ok_or_else(bad)?;
    let n = n.trim().parse().map_err(|_| bad())?;
    let k = k.trim().parse().map_err(|_| bad())?;
    Ok((n, k))
}

fn cmd_triangle(args: &TriangleArgs, out: &mut dyn Write) -> Result<i32> {
    let kind = match args.kind {
        KindArg::Pascal => TriangleKind::Pascal,
        KindArg::Trinomial => TriangleKind::Trinomial,
    };
    let rows = u64::try_from(args.rows)
        .map_err(|_| Error::InvalidArgument(format!("rows must be at least 1, got {}", args.rows)))?;
    let highlight = match &args.highlight {
        Some(text) => {
            let (n, k) = parse_highlight(text)?;
            let family = match kind {
                TriangleKind::Pascal => Family::PascalHockey,
                TriangleKind::Trinomial => Family::TrinomialHockey,
            };
            Some(IdentityCase::new(family, n, k))
        }
        None => None,
    };
    let format = match args.format {
        TriangleFormat::Text => RenderFormat::Text,
        TriangleFormat::Csv => RenderFormat::Csv,
        TriangleFormat::Json => RenderFormat::Json,
    };
    let doc = render(&RenderSpec {
        kind,
        rows,
        highlight,
        format,
    })?;
    out.write_all(doc.as_bytes()).map_err(io_err)?;
    Ok(EXIT_OK)
}

fn cmd_coeff(cmd: &CoeffCommand, out: &mut dyn Write) -> Result<i32> {
    let value = match cmd {
        CoeffCommand::Binomial { n, k } => binomial(*n, *k),
        CoeffCommand::Trinomial { n, k } => trinomial(*n, *k),
        CoeffCommand::Multinomial { n, parts } => multinomial(*n, parts),
    };
    writeln!(out, "{value}").map_err(io_err)?;
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs, source: &dyn CoefficientSource, out: &mut dyn Write) -> Result<i32> {
    let families: Vec<Family> = if args.family == "all" {
        Family::ALL.to_vec()
    } else {
        vec![args.family.parse()?]
    };
    let evaluator = Evaluator::new(source);
    let options = SweepOptions {
        fail_fast: args.fail_fast,
    };

    let mut reports: Vec<VerificationReport> = Vec::new();
    for family in families.iter().copied() {
        let report = evaluator.verify_family_with(family, args.n_max, args.k_max, options)?;
        let failed = !report.passed();
        reports.push(report);
        if failed && args.fail_fast {
            break;
        }
    }

    let doc = match args.format {
        ReportFormat::Json if args.family == "all" => reports_json(&reports),
        ReportFormat::Json => report_json(&reports[0]),
        ReportFormat::Text => reports.iter().map(report_text).collect(),
    };
    out.write_all(doc.as_bytes()).map_err(io_err)?;
    Ok(if reports.iter().all(VerificationReport::passed) {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("stickkit").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn coeff_values() {
        assert_eq!(
            call(&["coeff", "binomial", "8", "3"]),
            (0, "56\n".into(), String::new())
        );
        assert_eq!(call(&["coeff", "trinomial", "6", "0"]).1, "141\n");
        assert_eq!(call(&["coeff", "trinomial", "3", "9"]).1, "0\n");
        assert_eq!(call(&["coeff", "trinomial", "6", "-2"]).1, "90\n");
        assert_eq!(call(&["coeff", "multinomial", "4", "2", "1", "1"]).1, "12\n");
    }

    #[test]
    fn coeff_usage_errors() {
        assert_eq!(call(&["coeff", "binomial", "8"]).0, EXIT_USAGE);
        assert_eq!(call(&["coeff", "binomial", "8", "3", "1"]).0, EXIT_USAGE);
        assert_eq!(call(&["coeff", "trinomial", "x", "3"]).0, EXIT_USAGE);
        assert_eq!(call(&["coeff", "multinomial"]).0, EXIT_USAGE);
        assert_eq!(call(&["coeff", "factorial", "3"]).0, EXIT_USAGE);
    }

    #[test]
    fn verify_errors() {
        let (code, _, err) = call(&["verify", "--family", "hockey", "--n-max", "1", "--k-max", "1"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("unknown identity family"));
        let (code, _, err) = call(&["verify", "--family", "pyramid", "--n-max", "-1", "--k-max", "1"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("invalid argument"));
        assert_eq!(
            call(&["verify", "--family", "pyramid", "--n-max", "1", "--k-max", "1", "--bogus"]).0,
            EXIT_USAGE
        );
    }

    #[test]
    fn verify_text() {
        let (code, out, _) = call(&["verify", "--family", "trinomial-hockey", "--n-max", "1", "--k-max", "4"]);
        assert_eq!(code, 0);
        assert!(out.contains("1+2+6+16+45 = 90-21+1 = 70"));
    }

    #[test]
    fn verify_all_base_cases() {
        let (code, out, _) = call(&[
            "verify", "--family", "all", "--n-max", "0", "--k-max", "0", "--format", "json",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let reports = v.as_array().unwrap();
        assert_eq!(reports.len(), 5);
        for r in reports {
            assert_eq!(r["checked"], 1);
            assert_eq!(r["failed"], 0);
        }
    }

    #[test]
    fn triangle_errors() {
        assert_eq!(call(&["triangle", "--kind", "pascal", "--rows", "0"]).0, EXIT_USAGE);
        assert_eq!(call(&["triangle", "--kind", "pascal", "--rows", "-3"]).0, EXIT_USAGE);
        assert_eq!(
            call(&["triangle", "--kind", "pascal", "--rows", "3", "--highlight", "1"]).0,
            EXIT_USAGE
        );
        let (code, _, err) = call(&["triangle", "--kind", "pascal", "--rows", "4", "--highlight", "1,3"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("invalid render spec"));
        assert_eq!(call(&["triangle", "--kind", "hex", "--rows", "3"]).0, EXIT_USAGE);
    }

    #[test]
    fn triangle_single_row() {
        assert_eq!(
            call(&["triangle", "--kind", "pascal", "--rows", "1"]),
            (0, "1\n".into(), String::new())
        );
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
    }
}
