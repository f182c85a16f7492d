//! Command definitions and their execution.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use gammaval::hypergeometric::{beta_value, gauss_value, HypergeometricSpec};
use gammaval::numeric::{eval_monomial, PrecisionConfig};
use gammaval::relations::{extension_table, hardcoded_table, kubert_rank, reduce};
use gammaval::verify::{self, CheckOutcome};
use gammaval::{Error, Format, Monomial, Rational};

use crate::expr::{parse_expr, parse_rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Latex,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Json => Format::Json,
            OutputFormat::Latex => Format::Latex,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "gammaval", version, about = "Exact gamma values at rational points")]
pub struct Cli {
    /// Decimal digits for numeric work.
    #[arg(long, global = true, default_value_t = 50)]
    pub digits: u32,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gamma(x) as a monomial.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// A product of gamma values, pi and integers, e.g. "Gamma(1/3)^2 / pi".
    Simplify {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// 2F1(a, b; c; 1) by the Gauss identity.
    Gauss {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b).
    Beta {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Runs every verification and prints a summary.
    VerifyAll,
    /// All table entries whose denominator divides the given one.
    Table { denominator: u32 },
    /// Number of gamma values at k/N left free by the standard relations.
    KubertRank { n: i64 },
    /// Numeric value of an expression.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

/// Exit code for an error: 2 for input that does not parse, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. } | Error::InvalidRational(_) => 2,
        _ => 1,
    }
}

fn render(m: &Monomial, f: OutputFormat) -> String {
    m.render(f.into())
}

fn table_entries(n: u32) -> Result<Vec<(Rational, Monomial)>, Error> {
    if n == 0 || 120 % n != 0 {
        return Err(Error::UnsupportedDenominator(n.to_string()));
    }
    let mut out: Vec<(Rational, Monomial)> =
        hardcoded_table().with_denominator_dividing(n).into_iter().map(|(x, m)| (x.clone(), m.clone())).collect();
    if 24 % n != 0 && 60 % n != 0 {
        for (x, m) in extension_table()? {
            if n % x.denom().to_u32().unwrap_or(0) == 0 {
                out.push((x.clone(), m.clone()));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

fn outcome_json(c: &CheckOutcome) -> Value {
    json!({
        "name": c.name,
        "passed": c.passed,
        "max_deviation": c.max_deviation,
        "detail": c.detail,
    })
}

/// The checks run by `verify-all`, in output order.
pub fn verify_all(digits: u32) -> Vec<CheckOutcome> {
    type Job = Box<dyn Fn() -> Vec<CheckOutcome> + Send + Sync>;
    let jobs: Vec<Job> = vec![
        Box::new(move || vec![verify::table_sweep(digits)]),
        Box::new(|| vec![verify::derivation_oracle()]),
        Box::new(move || verify::lemma_checks(2 * digits)),
        Box::new(|| vec![verify::kubert_ranks(&[3, 5, 24, 60, 120])]),
        Box::new(move || vec![verify::elliptic(digits)]),
        Box::new(move || vec![verify::hyperelliptic(digits * 4 / 5)]),
        Box::new(move || vec![verify::hypergeometric_examples(digits)]),
        Box::new(move || vec![verify::extension_sweep(digits + 10)]),
    ];
    jobs.par_iter().map(|j| j()).collect::<Vec<_>>().into_iter().flatten().collect()
}

/// Runs a command, writing its result to `out`. Returns the exit code for
/// commands that finish without an error.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, Error> {
    let f = cli.format;
    let cfg = PrecisionConfig::new(cli.digits);
    let text = match &cli.command {
        Command::Reduce { x } => render(&reduce(&parse_rational(x)?)?, f),
        Command::Simplify { expr } => render(&parse_expr(expr)?.to_monomial()?, f),
        Command::Gauss { a, b, c } => {
            let spec = HypergeometricSpec::new(parse_rational(a)?, parse_rational(b)?, parse_rational(c)?);
            render(&gauss_value(&spec)?, f)
        }
        Command::Beta { a, b } => render(&beta_value(&parse_rational(a)?, &parse_rational(b)?)?, f),
        Command::Table { denominator } => {
            let entries = table_entries(*denominator)?;
            match f {
                OutputFormat::Text => entries
                    .iter()
                    .map(|(x, m)| format!("Gamma({x}) = {}", m.to_text()))
                    .collect::<Vec<_>>()
                    .join("\n"),
                OutputFormat::Json => {
                    let map: Map<String, Value> =
                        entries.iter().map(|(x, m)| (x.to_fraction_string(), m.to_json_value())).collect();
                    Value::Object(map).to_string()
                }
                OutputFormat::Latex => {
                    let mut s = String::from("\\begin{eqnarray*}\n");
                    for (x, m) in &entries {
                        s.push_str(&format!(
                            "\\Gamma\\!\\left(\\tfrac{{{}}}{{{}}}\\right) &=& {} \\\\\n",
                            x.numer(),
                            x.denom(),
                            m.to_latex()
                        ));
                    }
                    s.push_str("\\end{eqnarray*}");
                    s
                }
            }
        }
        Command::KubertRank { n } => {
            let r = kubert_rank(*n)?;
            match f {
                OutputFormat::Json => json!({ "N": n, "rank": r }).to_string(),
                _ => r.to_string(),
            }
        }
        Command::Eval { expr } => {
            let m = parse_expr(expr)?.to_monomial()?;
            let v = eval_monomial(&m, &cfg)?;
            let digits = cli.digits as usize;
            match f {
                OutputFormat::Text => format!("{} +/- {}", v.mid_string(digits), v.rad_string()),
                OutputFormat::Json => json!({
                    "expression": expr,
                    "monomial": m.to_json_value(),
                    "digits": cli.digits,
                    "mid": v.mid_string(digits),
                    "rad": v.rad_string(),
                })
                .to_string(),
                OutputFormat::Latex => v.mid_string(digits),
            }
        }
        Command::VerifyAll => {
            let results = verify_all(cli.digits);
            let passed = results.iter().filter(|c| c.passed).count();
            let all = passed == results.len();
            let s = match f {
                OutputFormat::Json => json!({
                    "checks": results.iter().map(outcome_json).collect::<Vec<_>>(),
                    "passed": passed,
                    "total": results.len(),
                })
                .to_string(),
                _ => {
                    let mut lines: Vec<String> = results.iter().map(CheckOutcome::line).collect();
                    lines.push(format!("summary: {passed}/{} checks passed", results.len()));
                    lines.join("\n")
                }
            };
            writeln!(out, "{s}").map_err(|e| Error::Domain(e.to_string()))?;
            return Ok(if all { 0 } else { 1 });
        }
    };
    writeln!(out, "{text}").map_err(|e| Error::Domain(e.to_string()))?;
    Ok(0)
}

/// Runs a command and reports errors as `error[code]: message` on `err`.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match run(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error[{}]: {e}", e.code());
            exit_code(&e)
        }
    }
}
