//! Output rendering for the command-line front end.
//!
//! Three formats: canonical single-line JSON (the machine format), flat CSV,
//! and an indented text layout. Rationals render as `p/q` strings and
//! Gaussian rationals as `{re, im}` string pairs; nothing is ever a float.
//! Identical inputs produce byte-identical output in every format.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::scalar::{rat_str, Rat, Scalar};
use crate::slope::{BundleSelector, SlopeReport, Verdict};
use crate::suites::SuiteReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            other => Err(format!("unknown format `{other}` (expected json, csv, or text)")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Text => "text",
        })
    }
}

/// Expands selector sugar: `even`, `odd`, and `E<a>` (the filtration
/// `⊕_{p ≥ a}`) or an explicit comma-separated degree list such as `0,2,4`.
pub fn parse_selector(n: usize, text: &str) -> Result<BundleSelector, String> {
    let trimmed = text.trim();
    match trimmed {
        "even" => return Ok(BundleSelector::even(n)),
        "odd" => return Ok(BundleSelector::odd(n)),
        _ => {}
    }
    if let Some(level) = trimmed.strip_prefix('E') {
        let a: usize = level
            .parse()
            .map_err(|_| format!("bad filtration level `{level}` in `{trimmed}`"))?;
        return BundleSelector::filtration(n, a).map_err(|e| e.to_string());
    }
    let mut degrees = Vec::new();
    for part in trimmed.split(',') {
        let p: usize = part
            .trim()
            .parse()
            .map_err(|_| format!("bad degree `{part}` in selector `{trimmed}`"))?;
        degrees.push(p);
    }
    BundleSelector::new(n, degrees).map_err(|e| e.to_string())
}

pub fn rat_value(r: &Rat) -> Value {
    Value::String(rat_str(r))
}

pub fn scalar_value(s: &Scalar) -> Value {
    json!({ "re": rat_str(&s.re), "im": rat_str(&s.im) })
}

pub fn rat_table_value(table: &[Rat]) -> Value {
    Value::Array(table.iter().map(rat_value).collect())
}

/// Quotes a CSV field when it contains a comma, quote, or newline.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn json_line(v: &Value) -> String {
    let mut line = serde_json::to_string(v).expect("serializable value");
    line.push('\n');
    line
}

/// Renders the eigenvalue tables: the full f-table for dimension `n` with
/// its weighted trace, and optionally the span table for blade degree `k`.
pub fn tables_output(
    n: usize,
    f: &[Rat],
    trace: &Rat,
    span: Option<(usize, &[Rat])>,
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Json => {
            let mut obj = json!({
                "command": "tables",
                "n": n,
                "f": rat_table_value(f),
                "trace": rat_value(trace),
            });
            if let Some((k, table)) = span {
                obj["span"] = json!({ "k": k, "F": rat_table_value(table) });
            }
            json_line(&obj)
        }
        OutputFormat::Csv => {
            let mut out = String::from("table,degree,value\n");
            for (i, v) in f.iter().enumerate() {
                out.push_str(&format!("f,{i},{}\n", csv_field(&rat_str(v))));
            }
            out.push_str(&format!("trace,,{}\n", csv_field(&rat_str(trace))));
            if let Some((_, table)) = span {
                for (i, v) in table.iter().enumerate() {
                    out.push_str(&format!("F,{i},{}\n", csv_field(&rat_str(v))));
                }
            }
            out
        }
        OutputFormat::Text => {
            let mut out = format!("f-table, n = {n}\n");
            for (i, v) in f.iter().enumerate() {
                out.push_str(&format!("  f[{i}] = {}\n", rat_str(v)));
            }
            out.push_str(&format!("  weighted trace = {}\n", rat_str(trace)));
            if let Some((k, table)) = span {
                out.push_str(&format!("span table, k = {k}\n"));
                for (i, v) in table.iter().enumerate() {
                    out.push_str(&format!("  F[{i}] = {}\n", rat_str(v)));
                }
            }
            out
        }
    }
}

fn slope_entry(report: &SlopeReport) -> Value {
    json!({
        "selector": report.selector.to_string(),
        "degree": report.degree_coeff.to_string(),
        "rank": report.rank.to_string(),
        "slope": rat_value(&report.slope_coeff),
    })
}

fn sign_word(r: &Rat) -> &'static str {
    use num::Zero as _;
    if r.is_zero() {
        "zero"
    } else if *r > Rat::zero() {
        "positive"
    } else {
        "negative"
    }
}

fn sign_int(r: &Rat) -> i64 {
    use num::Zero as _;
    if r.is_zero() {
        0
    } else if *r > Rat::zero() {
        1
    } else {
        -1
    }
}

/// Renders slope data for one selector, with an optional sub-selector
/// comparison. All quantities are coefficients of `d = deg Λ^{(1,0)}`.
pub fn slope_output(
    set: &SlopeReport,
    against: Option<(&SlopeReport, &Rat)>,
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Json => {
            let mut obj = json!({
                "command": "slope",
                "n": set.selector.n(),
                "set": slope_entry(set),
            });
            if let Some((other, diff)) = against {
                obj["against"] = slope_entry(other);
                obj["difference"] = rat_value(diff);
                obj["difference_sign"] = json!(sign_int(diff));
            }
            json_line(&obj)
        }
        OutputFormat::Csv => {
            let mut out = String::from("role,selector,degree,rank,slope\n");
            let row = |role: &str, r: &SlopeReport| {
                format!(
                    "{role},{},{},{},{}\n",
                    csv_field(&r.selector.to_string()),
                    r.degree_coeff,
                    r.rank,
                    csv_field(&rat_str(&r.slope_coeff)),
                )
            };
            out.push_str(&row("set", set));
            if let Some((other, diff)) = against {
                out.push_str(&row("against", other));
                out.push_str(&format!("difference,,,,{}\n", csv_field(&rat_str(diff))));
            }
            out
        }
        OutputFormat::Text => {
            let mut out = String::new();
            let line = |r: &SlopeReport| {
                format!(
                    "μ{} = ({})·d   [degree {}·d, rank {}]\n",
                    r.selector,
                    rat_str(&r.slope_coeff),
                    r.degree_coeff,
                    r.rank,
                )
            };
            out.push_str(&line(set));
            if let Some((other, diff)) = against {
                out.push_str(&line(other));
                out.push_str(&format!(
                    "μ(P) − μ(Q) = ({})·d   [{}]\n",
                    rat_str(diff),
                    sign_word(diff),
                ));
            }
            out
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Renders an obstruction verdict with the facts the engine evaluated.
pub fn verdict_output(verdict: &Verdict, format: OutputFormat) -> String {
    let facts = &verdict.facts;
    match format {
        OutputFormat::Json => {
            let obj = json!({
                "command": "verdict",
                "label": verdict.label(),
                "fired": verdict.fired.map(|c| c.to_string()),
                "satisfied": verdict.satisfied.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "facts": {
                    "n": facts.n,
                    "k": facts.k,
                    "sign_deg_x": facts.sign_deg_x,
                    "sign_d": facts.sign_d,
                    "p1": facts.p1,
                    "threshold": facts.threshold,
                    "p1_below_threshold": facts.p1_below_threshold,
                    "k_large": facts.k_large,
                    "contains_omega": facts.contains_omega,
                    "trivial_action": facts.trivial_action,
                },
            });
            json_line(&obj)
        }
        OutputFormat::Csv => {
            let mut out = String::from("field,value\n");
            let satisfied = verdict
                .satisfied
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            for (field, value) in [
                ("label", verdict.label().to_string()),
                ("fired", verdict.fired.map_or_else(String::new, |c| c.to_string())),
                ("satisfied", satisfied),
                ("n", facts.n.to_string()),
                ("k", facts.k.to_string()),
                ("sign_deg_x", facts.sign_deg_x.to_string()),
                ("sign_d", facts.sign_d.to_string()),
                ("p1", facts.p1.to_string()),
                ("threshold", facts.threshold.to_string()),
                ("p1_below_threshold", facts.p1_below_threshold.to_string()),
                ("k_large", facts.k_large.to_string()),
                ("contains_omega", facts.contains_omega.to_string()),
                ("trivial_action", facts.trivial_action.to_string()),
            ] {
                out.push_str(&format!("{field},{}\n", csv_field(&value)));
            }
            out
        }
        OutputFormat::Text => {
            let mut out = format!("{}\n", verdict.label());
            out.push_str(&format!(
                "  n = {}, k = {}, deg X sign = {} (so sign of d = {})\n",
                facts.n, facts.k, facts.sign_deg_x, facts.sign_d,
            ));
            out.push_str(&format!(
                "  p1 = {}, threshold n−k+1 = {}, p1 ≤ threshold: {}\n",
                facts.p1,
                facts.threshold,
                yes_no(facts.p1_below_threshold),
            ));
            out.push_str(&format!(
                "  2k ≥ n+2: {}; structure form in sum: {}; trivial Higgs action: {}\n",
                yes_no(facts.k_large),
                yes_no(facts.contains_omega),
                yes_no(facts.trivial_action),
            ));
            let satisfied = if verdict.satisfied.is_empty() {
                "none".to_string()
            } else {
                verdict
                    .satisfied
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            out.push_str(&format!("  satisfied hypotheses: {satisfied}\n"));
            out
        }
    }
}

/// Renders a suite run: per-check pass/fail with the first counterexample
/// witness on failure.
pub fn suite_output(report: &SuiteReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| {
                    let mut entry = json!({ "name": c.name, "pass": c.pass });
                    if let Some(witness) = &c.detail {
                        entry["witness"] = Value::String(witness.clone());
                    }
                    entry
                })
                .collect();
            let obj = json!({
                "command": "check",
                "suite": report.suite,
                "n": report.n,
                "k": report.k,
                "seed": report.seed,
                "trials": report.trials,
                "passed": report.passed(),
                "checks": checks,
            });
            json_line(&obj)
        }
        OutputFormat::Csv => {
            let mut out = String::from("suite,check,pass,witness\n");
            for c in &report.checks {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    csv_field(&report.suite),
                    csv_field(&c.name),
                    c.pass,
                    csv_field(c.detail.as_deref().unwrap_or("")),
                ));
            }
            out
        }
        OutputFormat::Text => {
            let mut out = format!(
                "suite {}: n = {}, k = {}, seed = {}, trials = {}\n",
                report.suite, report.n, report.k, report.seed, report.trials,
            );
            for c in &report.checks {
                if c.pass {
                    out.push_str(&format!("  pass  {}\n", c.name));
                } else {
                    out.push_str(&format!("  FAIL  {}\n", c.name));
                    if let Some(witness) = &c.detail {
                        out.push_str(&format!("        {witness}\n"));
                    }
                }
            }
            let total = report.checks.len();
            if report.passed() {
                out.push_str(&format!("result: PASS ({total} checks)\n"));
            } else {
                let failed = report.checks.iter().filter(|c| !c.pass).count();
                out.push_str(&format!("result: FAIL ({failed} of {total} checks)\n"));
            }
            out
        }
    }
}

/// Renders the conformal coefficient table `c_p` with the bookkeeping
/// identity flag.
pub fn hhym_output(
    n: usize,
    lambda: &Rat,
    cst: &Rat,
    c: &[Rat],
    verified: bool,
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Json => {
            let obj = json!({
                "command": "hhym",
                "n": n,
                "lambda": rat_value(lambda),
                "C": rat_value(cst),
                "c": rat_table_value(c),
                "identity_verified": verified,
            });
            json_line(&obj)
        }
        OutputFormat::Csv => {
            let mut out = String::from("degree,c\n");
            for (p, v) in c.iter().enumerate() {
                out.push_str(&format!("{p},{}\n", csv_field(&rat_str(v))));
            }
            out.push_str(&format!("identity,{verified}\n"));
            out
        }
        OutputFormat::Text => {
            let mut out = format!(
                "conformal coefficients, n = {n}, λ = {}, C = {}\n",
                rat_str(lambda),
                rat_str(cst),
            );
            for (p, v) in c.iter().enumerate() {
                out.push_str(&format!("  c[{p}] = {}\n", rat_str(v)));
            }
            out.push_str(&format!("bookkeeping identity: {}\n", if verified { "verified" } else { "FAILED" }));
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::higgs::{f_table, f_table_trace};
    use crate::scalar::{gauss, rat, rint};
    use crate::slope::{bigthm_verdict, slope, slope_diff};

    #[test]
    fn selector_sugar() {
        let even = parse_selector(4, "even").unwrap();
        assert_eq!(even.degrees().collect::<Vec<_>>(), vec![0, 2, 4]);
        let odd = parse_selector(4, "odd").unwrap();
        assert_eq!(odd.degrees().collect::<Vec<_>>(), vec![1, 3]);
        let filt = parse_selector(4, "E2").unwrap();
        assert_eq!(filt.degrees().collect::<Vec<_>>(), vec![2, 3, 4]);
        let list = parse_selector(4, "0, 2,3").unwrap();
        assert_eq!(list.degrees().collect::<Vec<_>>(), vec![0, 2, 3]);

        assert!(parse_selector(4, "Ex").is_err());
        assert!(parse_selector(4, "1,5").is_err());
        assert!(parse_selector(4, "1,,2").is_err());
        assert!(parse_selector(4, "").is_err());
    }

    #[test]
    fn json_is_single_line_and_exact() {
        let f = f_table(3).unwrap();
        let trace = f_table_trace(3).unwrap();
        let line = tables_output(3, &f, &trace, None, OutputFormat::Json);
        assert!(line.ends_with('\n'));
        assert_eq!(line.matches('\n').count(), 1);
        let parsed: Value = serde_json::from_str(line.trim()).unwrap();
        assert_eq!(parsed["f"][0], Value::String("-3".into()));
        assert_eq!(parsed["f"][3], Value::String("3".into()));
        assert_eq!(parsed["trace"], Value::String("0".into()));
    }

    #[test]
    fn scalar_value_shape() {
        let v = scalar_value(&gauss(rat(1, 2), rat(-3, 1)));
        assert_eq!(v["re"], Value::String("1/2".into()));
        assert_eq!(v["im"], Value::String("-3".into()));
    }

    #[test]
    fn csv_quotes_embedded_commas() {
        let sel = parse_selector(3, "0,1,2,3").unwrap();
        let report = slope(&sel);
        let csv = slope_output(&report, None, OutputFormat::Csv);
        assert!(csv.contains("\"{0,1,2,3}\""));
        assert!(csv.contains("1/2"));
    }

    #[test]
    fn slope_difference_sign() {
        let p = parse_selector(3, "0,1,2,3").unwrap();
        let q = parse_selector(3, "3").unwrap();
        let diff = slope_diff(&p, &q).unwrap();
        assert_eq!(diff, rat(-1, 2));
        let line = slope_output(&slope(&p), Some((&slope(&q), &diff)), OutputFormat::Json);
        let parsed: Value = serde_json::from_str(line.trim()).unwrap();
        assert_eq!(parsed["difference"], Value::String("-1/2".into()));
        assert_eq!(parsed["difference_sign"], json!(-1));
    }

    #[test]
    fn verdict_rendering_has_label_in_every_format() {
        let sel = parse_selector(5, "1,3,5").unwrap();
        let verdict = bigthm_verdict(5, 3, -1, &sel, true).unwrap();
        for format in [OutputFormat::Json, OutputFormat::Csv, OutputFormat::Text] {
            let out = verdict_output(&verdict, format);
            assert!(out.contains("ObstructedCaseI"), "{format}: {out}");
        }
    }

    #[test]
    fn rendering_is_deterministic() {
        let f = f_table(5).unwrap();
        let trace = f_table_trace(5).unwrap();
        let span = f_table(3).unwrap();
        for format in [OutputFormat::Json, OutputFormat::Csv, OutputFormat::Text] {
            let a = tables_output(5, &f, &trace, Some((3, &span)), format);
            let b = tables_output(5, &f, &trace, Some((3, &span)), format);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn format_parsing_roundtrip() {
        for format in [OutputFormat::Json, OutputFormat::Csv, OutputFormat::Text] {
            assert_eq!(format.to_string().parse::<OutputFormat>().unwrap(), format);
        }
        assert!("yaml".parse::<OutputFormat>().is_err());
    }

    #[test]
    fn hhym_rendering_matches_frozen_table() {
        let c = vec![rint(1), rat(1, 3), rat(-1, 3), rint(-1)];
        let line = hhym_output(3, &rint(0), &rint(0), &c, true, OutputFormat::Json);
        let parsed: Value = serde_json::from_str(line.trim()).unwrap();
        assert_eq!(parsed["c"][1], Value::String("1/3".into()));
        assert_eq!(parsed["c"][2], Value::String("-1/3".into()));
        assert_eq!(parsed["identity_verified"], json!(true));
    }
}
