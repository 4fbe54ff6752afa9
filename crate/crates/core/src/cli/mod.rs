//! Command-line front end: `classify`, `eval`, `verify`, `chartable` and
//! `dims`, with JSON (default) or aligned-table output.

mod parse;

pub use parse::parse_expr;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::decompose::classify;
use crate::equivalence::{verify, ComparisonReport};
use crate::error::{Error, Result};
use crate::exactmath::{matrix_to_json, parse_matrix, Matrix, RMatrix, Ring};
use crate::polyfunctor::eval;
use crate::symgroup::{character_table, conjugacy_classes};

pub const SEED_ENV: &str = "SCHURKIT_SEED";
pub const DEFAULT_SEED: u64 = 42;

#[derive(Parser, Debug)]
#[command(
    name = "schurkit",
    version,
    about = "Exact decomposition and classification of polynomial functors over ℚ"
)]
pub struct Cli {
    #[command(flatten)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Format {
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "table")]
    pub json: bool,
    /// Emit aligned plain-text tables.
    #[arg(long, global = true)]
    pub table: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decompose an operation into Specht multiplicities per degree.
    Classify { expr: String },
    /// Dimension of F(ℚ^d), and optionally F applied to a matrix.
    Eval {
        expr: String,
        #[arg(long)]
        dim: usize,
        /// JSON matrix file; entries are strings "p/q" or polynomials in T1, T2, ...
        #[arg(long)]
        matrix: Option<std::path::PathBuf>,
    },
    /// Compare an operation with the Schur operations of its modules.
    Verify {
        expr: String,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        /// Seed for the random test maps; defaults to $SCHURKIT_SEED, then 42.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Character table of the symmetric group on n letters.
    Chartable { n: usize },
    /// Dimensions of F(ℚ^d) for d in an inclusive range "a..b".
    Dims {
        expr: String,
        #[arg(long)]
        range: String,
    },
}

/// Exit code and standard output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: 0,
                    stdout: e.to_string(),
                };
            }
            return error_outcome(
                json!({"error": e.kind().to_string(), "kind": "usage", "detail": e.to_string().trim_end()}),
            );
        }
    };
    match execute(&cli) {
        Ok((code, stdout)) => Outcome { code, stdout },
        Err(e) => error_outcome(error_json(&e)),
    }
}

fn error_outcome(v: Value) -> Outcome {
    Outcome {
        code: 2,
        stdout: format!("{v}\n"),
    }
}

fn error_json(e: &Error) -> Value {
    let kind = match e {
        Error::Syntax { .. } => "syntax",
        Error::InvalidPartition(_) => "partition",
        Error::Precondition(_) => "precondition",
        Error::DimensionMismatch(_) | Error::NotSquare { .. } => "dimension",
        Error::Format(_) | Error::MissingVariable(_) => "format",
        Error::Io(_) => "io",
        _ => "engine",
    };
    let mut obj = Map::new();
    obj.insert("error".into(), json!(e.to_string()));
    obj.insert("kind".into(), json!(kind));
    if let Error::Syntax {
        offset, expected, ..
    } = e
    {
        obj.insert("offset".into(), json!(offset));
        obj.insert("expected".into(), json!(expected));
    }
    Value::Object(obj)
}

fn resolve_seed(seed: Option<u64>) -> Result<u64> {
    if let Some(s) = seed {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Error::Format(format!("{SEED_ENV} must be an unsigned integer, got {v:?}"))
        }),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

/// Parses "a..b" (or "a..=b") as an inclusive range.
pub fn parse_range(text: &str) -> Result<(usize, usize)> {
    let bad = || Error::Format(format!("range must look like a..b, got {text:?}"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let (a, b): (usize, usize) = (
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    );
    if a > b {
        return Err(Error::Format(format!("empty range {text:?}")));
    }
    Ok((a, b))
}

fn execute(cli: &Cli) -> Result<(i32, String)> {
    let table = cli.format.table;
    let render = |v: Value, t: String| if table { t } else { format!("{v}\n") };
    match &cli.command {
        Command::Classify { expr } => {
            let c = classify(&parse_expr(expr)?)?;
            let mut rows = vec![row(["degree", "dim_V", "partition", "multiplicity"])];
            for p in &c.pieces {
                for (lambda, m) in &p.multiplicities {
                    rows.push(vec![
                        p.degree.to_string(),
                        p.module.dim().to_string(),
                        lambda.to_string(),
                        m.to_string(),
                    ]);
                }
            }
            Ok((0, render(c.to_json(), aligned(&rows))))
        }
        Command::Eval { expr, dim, matrix } => {
            let e = parse_expr(expr)?;
            let value = eval(&e);
            let mut obj = Map::new();
            obj.insert("expr".into(), json!(e.to_string()));
            obj.insert("d".into(), json!(dim));
            obj.insert("dim".into(), json!(value.dim(*dim)));
            let mut text = aligned(&[
                row(["d", "dim"]),
                vec![dim.to_string(), value.dim(*dim).to_string()],
            ]);
            if let Some(path) = matrix {
                let src = std::fs::read_to_string(path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                let f = parse_matrix(&src)?;
                if f.cols() != *dim {
                    return Err(Error::DimensionMismatch(format!(
                        "matrix has {} columns but --dim is {dim}",
                        f.cols()
                    )));
                }
                let (json_m, rows) = match value.map_rmatrix(&f) {
                    RMatrix::Rat(m) => (matrix_to_json(&m), matrix_rows(&m)),
                    RMatrix::Poly(m) => (matrix_to_json(&m), matrix_rows(&m)),
                };
                obj.insert("matrix".into(), json_m);
                text.push('\n');
                text.push_str(&aligned(&rows));
            }
            Ok((0, render(Value::Object(obj), text)))
        }
        Command::Verify {
            expr,
            max_dim,
            seed,
        } => {
            let seed = resolve_seed(*seed)?;
            let report = verify(&parse_expr(expr)?, *max_dim, seed)?;
            let code = if report.verdict { 0 } else { 1 };
            Ok((code, render(report.to_json(), report_table(&report))))
        }
        Command::Chartable { n } => {
            let classes = conjugacy_classes(*n);
            let tab = character_table(*n);
            let mut obj = Map::new();
            let mut header = vec![String::new()];
            header.extend(classes.iter().map(|(c, _)| c.to_string()));
            let mut rows = vec![header];
            for (lambda, chi) in &tab {
                let values: Vec<String> = classes
                    .iter()
                    .map(|(c, _)| chi.value(c).to_string())
                    .collect();
                obj.insert(lambda.to_string(), json!(values));
                let mut r = vec![lambda.to_string()];
                r.extend(values);
                rows.push(r);
            }
            Ok((0, render(Value::Object(obj), aligned(&rows))))
        }
        Command::Dims { expr, range } => {
            let (a, b) = parse_range(range)?;
            let value = eval(&parse_expr(expr)?);
            let dims: Vec<usize> = (a..=b).map(|d| value.dim(d)).collect();
            let mut rows = vec![row(["d", "dim"])];
            rows.extend(
                (a..=b)
                    .zip(&dims)
                    .map(|(d, n)| vec![d.to_string(), n.to_string()]),
            );
            Ok((0, render(json!(dims), aligned(&rows))))
        }
    }
}

fn row<const N: usize>(cells: [&str; N]) -> Vec<String> {
    cells.iter().map(|s| s.to_string()).collect()
}

fn matrix_rows<R: Ring>(m: &Matrix<R>) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect()
}

/// Left-aligned columns separated by two spaces.
fn aligned(rows: &[Vec<String>]) -> String {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..ncols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn report_table(r: &ComparisonReport) -> String {
    let mut out = format!("subject  {}\n\n", r.subject);
    let mut dims = vec![row(["d", "invertible"])];
    dims.extend(
        r.per_dim
            .iter()
            .map(|c| vec![c.d.to_string(), c.invertible.to_string()]),
    );
    out.push_str(&aligned(&dims));
    if !r.naturality.is_empty() {
        let mut nat = vec![row(["d", "e", "exact"])];
        nat.extend(r.naturality.iter().map(|c| {
            vec![
                c.f.cols().to_string(),
                c.f.rows().to_string(),
                c.exact.to_string(),
            ]
        }));
        out.push('\n');
        out.push_str(&aligned(&nat));
    }
    if !r.checks.is_empty() {
        let mut checks = vec![row(["check", "passed"])];
        checks.extend(
            r.checks
                .iter()
                .map(|c| vec![c.name.clone(), c.passed.to_string()]),
        );
        out.push('\n');
        out.push_str(&aligned(&checks));
    }
    out.push('\n');
    let seed = r.seed.map_or("none".to_string(), |s| s.to_string());
    let mut tail = vec![
        vec!["verdict".to_string(), r.verdict.to_string()],
        vec!["seed".to_string(), seed],
    ];
    if let Some(d) = &r.diagnostic {
        tail.push(vec!["diagnostic".to_string(), d.clone()]);
    }
    out.push_str(&aligned(&tail));
    out
}
