//! Thin command-line front end; all substance lives in the library.
//!
//! Exit codes: 0 success, 1 identity-check failure, 2 usage or validation
//! error. Results go to stdout (JSON is one line per invocation),
//! diagnostics to stderr.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use higgsform::curvature::hhym_flat;
use higgsform::higgs::{f_table, f_table_trace, span_f_table};
use higgsform::report::{self, OutputFormat};
use higgsform::scalar::{parse_rat, rint, Rat};
use higgsform::slope::{bigthm_verdict, chern_coeff, slope, slope_diff};
use higgsform::suites::{run_suite, SuiteConfig, SuiteError, SuiteKind};

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    s.parse()
}

fn parse_suite(s: &str) -> Result<SuiteKind, String> {
    s.parse().map_err(|e: SuiteError| e.to_string())
}

#[derive(Parser)]
#[command(
    name = "higgsform",
    version,
    about = "Exact eigenvalue tables, slope calculus, obstruction verdicts, and operator-identity suites for wedge Higgs fields"
)]
struct Cli {
    /// Output format: json, csv, or text.
    #[arg(long, global = true, default_value = "json", value_parser = parse_format)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Trace-operator eigenvalue table for dimension n (odd), plus the span
    /// table for blade degree k when --k is given.
    Tables {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Slope of a selected sum of (p,0)-power summands, in units of the
    /// degree d of the (1,0)-power, optionally compared with a
    /// sub-selection.
    Slope {
        #[arg(long)]
        n: usize,
        /// Degrees as a comma list, or `even`, `odd`, `E<a>`.
        #[arg(long)]
        set: String,
        /// Sub-selection to subtract: reports μ(set) − μ(against).
        #[arg(long)]
        against: Option<String>,
    },
    /// Stability obstruction verdict for a Higgs-invariant selection.
    Verdict {
        #[arg(long)]
        n: usize,
        /// Structure-form degree (odd, at least 3).
        #[arg(long)]
        k: usize,
        /// Sign of deg X in {-1, 0, 1}; internally d = −deg X.
        #[arg(long = "deg-sign", allow_hyphen_values = true)]
        deg_sign: i64,
        /// Degrees as a comma list, or `even`, `odd`, `E<a>`.
        #[arg(long)]
        set: String,
        /// Whether the structure form is a section of the selected sum.
        /// Defaults to `k ∈ set`.
        #[arg(long = "omega-in-p", num_args = 0..=1, default_missing_value = "true")]
        omega_in_p: Option<bool>,
    },
    /// Run an identity suite; exits 1 on the first failing check.
    Check {
        /// One of exterior, metric, higgs, curvature, nakano, all.
        #[arg(long, value_parser = parse_suite)]
        suite: SuiteKind,
        #[arg(long)]
        n: usize,
        /// Structure-form degree; defaults to the largest odd degree ≤ n.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        trials: usize,
    },
    /// Conformal coefficient table of the flat Higgs-Hermitian-Yang-Mills
    /// construction, with its bookkeeping identity verified.
    Hhym {
        #[arg(long)]
        n: usize,
        /// Conformal eigenvalue λ, a rational such as 2 or -1/3.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rat)]
        lambda: Rat,
        /// Target constant, a rational.
        #[arg(long = "C", allow_hyphen_values = true, value_parser = parse_rat)]
        cst: Rat,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let format = cli.format;
    match cli.command {
        Command::Tables { n, k } => {
            let f = f_table(n).map_err(|e| e.to_string())?;
            let trace = f_table_trace(n).map_err(|e| e.to_string())?;
            let span = match k {
                Some(k) => Some((k, span_f_table(k).map_err(|e| e.to_string())?)),
                None => None,
            };
            let span_ref = span.as_ref().map(|(k, table)| (*k, table.as_slice()));
            print!("{}", report::tables_output(n, &f, &trace, span_ref, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Slope { n, set, against } => {
            let p = report::parse_selector(n, &set)?;
            let set_report = slope(&p);
            let against = match against {
                Some(text) => {
                    let q = report::parse_selector(n, &text)?;
                    let diff = if q.is_sub_selector_of(&p) {
                        slope_diff(&p, &q).map_err(|e| e.to_string())?
                    } else {
                        set_report.slope_coeff.clone() - slope(&q).slope_coeff
                    };
                    Some((slope(&q), diff))
                }
                None => None,
            };
            let against_ref = against.as_ref().map(|(r, d)| (r, d));
            print!("{}", report::slope_output(&set_report, against_ref, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verdict {
            n,
            k,
            deg_sign,
            set,
            omega_in_p,
        } => {
            let sel = report::parse_selector(n, &set)?;
            let contains_omega = omega_in_p.unwrap_or_else(|| sel.contains(k));
            let verdict =
                bigthm_verdict(n, k, deg_sign, &sel, contains_omega).map_err(|e| e.to_string())?;
            print!("{}", report::verdict_output(&verdict, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            suite,
            n,
            k,
            seed,
            trials,
        } => {
            let cfg = SuiteConfig { n, k, seed, trials };
            let outcome = run_suite(suite, &cfg).map_err(|e| e.to_string())?;
            print!("{}", report::suite_output(&outcome, format));
            if outcome.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                if let Some(first) = outcome.first_failure() {
                    eprintln!("first failing check: {}", first.name);
                    if let Some(witness) = &first.detail {
                        eprintln!("witness: {witness}");
                    }
                }
                Ok(ExitCode::from(1))
            }
        }
        Command::Hhym { n, lambda, cst } => {
            let c = hhym_flat(n, &lambda, &cst).map_err(|e| e.to_string())?;
            let f = f_table(n).map_err(|e| e.to_string())?;
            let verified = c.iter().zip(f.iter()).enumerate().all(|(p, (cp, fp))| {
                rint(n as i64) * cp + Rat::from_integer(chern_coeff(n, p)) * &lambda + fp == cst
            });
            print!("{}", report::hhym_output(n, &lambda, &cst, &c, verified, format));
            Ok(ExitCode::SUCCESS)
        }
    }
}
