//! The `partmag` command-line driver.
//!
//! Exit status is 0 on success, 1 when a verification finds a counterexample
//! or a golden comparison mismatches, and 2 for malformed arguments.

use std::fmt;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bijection::{self, BijectionRow, PartitionPair};
use crate::counting;
use crate::golden;
use crate::oracle;
use crate::partition::{join_plus, Partition};
use crate::verify::{self, IdentityReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    #[value(alias = "json-lines")]
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "partmag",
    version,
    about = "Exact partition counts by number of distinct part values"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of partitions of N.
    P { n: usize },
    /// Partitions of N with no part larger than K.
    Pbounded { k: usize, n: usize },
    /// Partitions of N whose parts take exactly K different values.
    Pexact { k: usize, n: usize },
    /// Partitions of N into exactly K distinct parts.
    Qexact { k: usize, n: usize },
    /// The signed coefficient a(K, M).
    Acoeff { k: usize, m: usize },
    /// Self-convolution A_N = sum p(m) p(N - m).
    Conv { n: usize },
    /// List partitions of N in reverse-lexicographic order.
    Enumerate {
        n: usize,
        #[arg(long)]
        max_part: Option<usize>,
        /// Keep partitions with exactly this many different part values.
        #[arg(long)]
        distinct_values: Option<usize>,
        /// Keep partitions into exactly this many pairwise distinct parts.
        #[arg(long)]
        distinct_parts: Option<usize>,
    },
    /// Every row of the staircase construction for (K, N), K >= N.
    Table { k: usize, n: usize },
    /// Apply the construction to one pair.
    Assemble {
        k: usize,
        #[arg(long)]
        m: usize,
        /// Comma-separated parts of the partition of M (empty or 0 for none).
        #[arg(long, default_value = "")]
        alpha: String,
        /// Comma-separated parts of the partition of N - M.
        #[arg(long, default_value = "")]
        beta: String,
    },
    /// Invert the construction on a partition with K distinct values.
    Disassemble {
        k: usize,
        #[arg(long)]
        parts: String,
    },
    /// Check an identity over a finite range.
    Verify {
        #[command(subcommand)]
        which: VerifyCommand,
    },
    /// Compare computed terms against a bundled sequence prefix.
    OeisCheck {
        sequence: String,
        #[arg(long)]
        terms: usize,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// p(k, n + T(k)) = A_n for 0 <= n <= k <= K_MAX.
    Main {
        #[arg(long, default_value_t = 20)]
        k_max: usize,
        /// Let n run to k + SLACK, past the k >= n hypothesis.
        #[arg(long, default_value_t = 0)]
        slack: usize,
    },
    /// The a(k, m) expansion of p(k, n) against enumeration.
    Merca1 {
        #[arg(long, default_value_t = 8)]
        k_max: usize,
        #[arg(long, default_value_t = 40)]
        n_max: usize,
    },
    /// q(k, n + T(k)) = p(n) for 0 <= n <= k <= K_MAX.
    Qshift {
        #[arg(long, default_value_t = 15)]
        k_max: usize,
    },
    /// sum_k p(n - T(k)) = sum_m q(m) q(n - m) for n <= N_MAX.
    Merca52 {
        #[arg(long, default_value_t = 40)]
        n_max: usize,
    },
    /// a(k, m) = q(k, m) for T(k) <= m <= T(k) + k.
    Aq {
        #[arg(long, default_value_t = 10)]
        k_max: usize,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

fn usage(msg: impl fmt::Display) -> CliError {
    CliError::Usage(msg.to_string())
}

enum Outcome {
    Success,
    Failure,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                2
            } else {
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(Outcome::Success) => 0,
        Ok(Outcome::Failure) => 1,
        Err(e @ CliError::Usage(_)) => {
            let _ = writeln!(err, "error: {e}\n\nFor more information, try '--help'.");
            2
        }
        Err(e @ CliError::Io(_)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::P { n } => scalar(out, format, "p", json!({ "n": n }), counting::p(*n)),
        Command::Pbounded { k, n } => scalar(
            out,
            format,
            "pbounded",
            json!({ "k": k, "n": n }),
            counting::p_bounded(*k, *n),
        ),
        Command::Pexact { k, n } => scalar(
            out,
            format,
            "pexact",
            json!({ "k": k, "n": n }),
            counting::p_exact_magnitudes(*k, *n),
        ),
        Command::Qexact { k, n } => scalar(
            out,
            format,
            "qexact",
            json!({ "k": k, "n": n }),
            counting::q_exact(*k, *n),
        ),
        Command::Acoeff { k, m } => scalar(
            out,
            format,
            "acoeff",
            json!({ "k": k, "m": m }),
            counting::a_coeff(*k, *m),
        ),
        Command::Conv { n } => scalar(
            out,
            format,
            "conv",
            json!({ "n": n }),
            counting::convolution_a(*n),
        ),
        Command::Enumerate {
            n,
            max_part,
            distinct_values,
            distinct_parts,
        } => {
            let params = json!({
                "n": n,
                "max_part": max_part,
                "distinct_values": distinct_values,
                "distinct_parts": distinct_parts,
            });
            let stream = oracle::enumerate(*n, *max_part)
                .filter(|p| distinct_values.is_none_or(|k| p.distinct_count() == k))
                .filter(|p| distinct_parts.is_none_or(|k| p.len() == k && p.has_distinct_parts()));
            if format == Format::Csv {
                writeln!(out, "parts")?;
            }
            for partition in stream {
                match format {
                    Format::Text => writeln!(out, "{partition}")?,
                    Format::Csv => writeln!(out, "{}", partition.ascending_display())?,
                    Format::Json => record(out, "enumerate", &params, json!(partition.parts()))?,
                }
            }
            Ok(Outcome::Success)
        }
        Command::Table { k, n } => {
            let rows = bijection::table(*k, *n).map_err(usage)?;
            write_rows(out, format, "table", &json!({ "k": k, "n": n }), &rows)?;
            Ok(Outcome::Success)
        }
        Command::Assemble { k, m, alpha, beta } => {
            let alpha_p = parse_partition(alpha, "--alpha")?;
            let beta_p = parse_partition(beta, "--beta")?;
            let pair = PartitionPair::new(*m, &alpha_p, &beta_p).map_err(usage)?;
            let row = bijection::assemble(*k, &pair).map_err(usage)?;
            let params = json!({
                "k": k,
                "m": m,
                "alpha": pair.alpha_parts(),
                "beta": pair.beta_parts(),
            });
            write_rows(out, format, "assemble", &params, &[row])?;
            Ok(Outcome::Success)
        }
        Command::Disassemble { k, parts } => {
            let partition = parse_partition(parts, "--parts")?;
            let pair = bijection::disassemble(*k, &partition).map_err(usage)?;
            match format {
                Format::Text => writeln!(
                    out,
                    "n={} m={} r={} s={} alpha={} beta={}",
                    pair.n(),
                    pair.m(),
                    pair.r(),
                    pair.s(),
                    join_plus(pair.alpha_parts()),
                    join_plus(pair.beta_parts())
                )?,
                Format::Csv => {
                    writeln!(out, "n,m,r,s,alpha,beta")?;
                    writeln!(
                        out,
                        "{},{},{},{},{},{}",
                        pair.n(),
                        pair.m(),
                        pair.r(),
                        pair.s(),
                        join_plus(pair.alpha_parts()),
                        join_plus(pair.beta_parts())
                    )?;
                }
                Format::Json => record(
                    out,
                    "disassemble",
                    &json!({ "k": k, "parts": partition.ascending() }),
                    json!({
                        "n": pair.n(),
                        "m": pair.m(),
                        "r": pair.r(),
                        "s": pair.s(),
                        "alpha": pair.alpha_parts(),
                        "beta": pair.beta_parts(),
                    }),
                )?,
            }
            Ok(Outcome::Success)
        }
        Command::Verify { which } => {
            let (report, params) = match which {
                VerifyCommand::Main { k_max, slack } => (
                    verify::verify_main_with_slack(*k_max, *slack),
                    json!({ "identity": "main", "k_max": k_max, "slack": slack }),
                ),
                VerifyCommand::Merca1 { k_max, n_max } => (
                    verify::verify_merca_corollary(*k_max, *n_max),
                    json!({ "identity": "merca1", "k_max": k_max, "n_max": n_max }),
                ),
                VerifyCommand::Qshift { k_max } => (
                    verify::verify_q_shift(*k_max),
                    json!({ "identity": "qshift", "k_max": k_max }),
                ),
                VerifyCommand::Merca52 { n_max } => (
                    verify::verify_merca_52(*n_max),
                    json!({ "identity": "merca52", "n_max": n_max }),
                ),
                VerifyCommand::Aq { k_max } => (
                    verify::verify_a_equals_q_regime(*k_max),
                    json!({ "identity": "aq", "k_max": k_max }),
                ),
            };
            write_report(out, format, &params, &report)?;
            Ok(if report.holds() {
                Outcome::Success
            } else {
                Outcome::Failure
            })
        }
        Command::OeisCheck { sequence, terms } => {
            let check = golden::check_sequence(sequence, *terms).map_err(usage)?;
            let params = json!({ "sequence": sequence, "terms": terms });
            match (&check.mismatch, format) {
                (None, Format::Json) => {
                    record(out, "oeis-check", &params, json!({ "matches": true }))?
                }
                (Some((i, computed, bundled)), Format::Json) => record(
                    out,
                    "oeis-check",
                    &params,
                    json!({
                        "matches": false,
                        "index": i,
                        "computed": computed.to_string(),
                        "bundled": bundled.to_string(),
                    }),
                )?,
                (None, _) => writeln!(out, "{sequence}: {terms} terms match")?,
                (Some((i, computed, bundled)), _) => writeln!(
                    out,
                    "{sequence}: mismatch at index {i}: computed {computed}, bundled {bundled}"
                )?,
            }
            Ok(if check.matches() {
                Outcome::Success
            } else {
                Outcome::Failure
            })
        }
    }
}

/// Comma-separated positive integers in any order; empty or `0` is the
/// empty partition.
fn parse_partition(raw: &str, flag: &str) -> Result<Partition, CliError> {
    let raw = raw.trim();
    if raw.is_empty() || raw == "0" {
        return Ok(Partition::empty());
    }
    let parts = raw
        .split(',')
        .map(|field| {
            let field = field.trim();
            match field.parse::<usize>() {
                Ok(v) if v > 0 => Ok(v),
                _ => Err(usage(format!(
                    "{flag}: expected comma-separated positive integers, got '{field}'"
                ))),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(usage)
}

fn record(out: &mut dyn Write, cmd: &str, params: &Value, result: Value) -> io::Result<()> {
    let line = json!({ "cmd": cmd, "params": params, "result": result });
    writeln!(out, "{line}")
}

fn scalar(
    out: &mut dyn Write,
    format: Format,
    cmd: &str,
    params: Value,
    value: impl fmt::Display,
) -> Result<Outcome, CliError> {
    match format {
        Format::Text => writeln!(out, "{value}")?,
        Format::Csv => write!(out, "result\n{value}\n")?,
        Format::Json => record(out, cmd, &params, json!(value.to_string()))?,
    }
    Ok(Outcome::Success)
}

const TABLE_HEADER: [&str; 7] = ["m", "r", "s", "alpha", "beta", "c", "assembled"];

fn row_fields(row: &BijectionRow) -> [String; 7] {
    [
        row.m().to_string(),
        row.r().to_string(),
        row.s().to_string(),
        join_plus(row.pair.alpha_parts()),
        join_plus(row.pair.beta_parts()),
        join_plus(&row.c_values),
        row.assembled.ascending_display(),
    ]
}

fn write_rows(
    out: &mut dyn Write,
    format: Format,
    cmd: &str,
    params: &Value,
    rows: &[BijectionRow],
) -> io::Result<()> {
    match format {
        Format::Csv => {
            writeln!(out, "{}", TABLE_HEADER.join(","))?;
            for row in rows {
                writeln!(out, "{}", row_fields(row).join(","))?;
            }
        }
        Format::Json => {
            for row in rows {
                let result = json!({
                    "m": row.m(),
                    "r": row.r(),
                    "s": row.s(),
                    "alpha": row.pair.alpha_parts(),
                    "beta": row.pair.beta_parts(),
                    "c": row.c_values,
                    "assembled": row.assembled.ascending(),
                });
                record(out, cmd, params, result)?;
            }
        }
        Format::Text => {
            let cells: Vec<[String; 7]> = rows.iter().map(row_fields).collect();
            let mut widths = TABLE_HEADER.map(str::len);
            for line in &cells {
                for (w, cell) in widths.iter_mut().zip(line) {
                    *w = (*w).max(cell.len());
                }
            }
            let header = TABLE_HEADER.map(str::to_owned);
            for line in std::iter::once(&header).chain(&cells) {
                let padded: Vec<String> = line
                    .iter()
                    .zip(widths)
                    .map(|(cell, w)| format!("{cell:<w$}"))
                    .collect();
                writeln!(out, "{}", padded.join("  ").trim_end())?;
            }
        }
    }
    Ok(())
}

fn write_report(
    out: &mut dyn Write,
    format: Format,
    params: &Value,
    report: &IdentityReport,
) -> io::Result<()> {
    match format {
        Format::Text => {
            writeln!(out, "{report}")?;
            for probe in &report.boundary_probes {
                writeln!(
                    out,
                    "  boundary k={} m={}: a={} q={}",
                    probe.k, probe.m, probe.a, probe.q
                )?;
            }
        }
        Format::Csv => {
            writeln!(out, "identity,range,cases_checked,holds,counterexample")?;
            let cx = report
                .counterexample
                .as_ref()
                .map(ToString::to_string)
                .unwrap_or_default();
            writeln!(
                out,
                "{},\"{}\",{},{},\"{}\"",
                report.identity,
                report.range,
                report.cases_checked,
                report.holds(),
                cx
            )?;
        }
        Format::Json => {
            let counterexample = report.counterexample.as_ref().map(|cx| {
                let params: serde_json::Map<String, Value> = cx
                    .params
                    .iter()
                    .map(|(k, v)| ((*k).to_owned(), json!(v)))
                    .collect();
                json!({ "params": params, "lhs": cx.lhs.to_string(), "rhs": cx.rhs.to_string() })
            });
            let probes: Vec<Value> = report
                .boundary_probes
                .iter()
                .map(|p| json!({ "k": p.k, "m": p.m, "a": p.a.to_string(), "q": p.q.to_string() }))
                .collect();
            record(
                out,
                "verify",
                params,
                json!({
                    "identity": report.identity.name(),
                    "range": report.range,
                    "cases_checked": report.cases_checked,
                    "holds": report.holds(),
                    "counterexample": counterexample,
                    "boundary_probes": probes,
                }),
            )?;
        }
    }
    Ok(())
}
