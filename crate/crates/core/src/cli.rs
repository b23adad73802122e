//! Command-line front end.
//!
//! Exit status: 0 when every check passes, 1 on a verification mismatch,
//! 2 on a usage error.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::checks::verify_bijections;
use crate::geode::{series_g, verify_factorization, verify_lemma_g, verify_theorem_g, GeodeError};
use crate::hypercatalan::{verify_functional_equation, HyperCatalanTable};
use crate::report::Report;
use crate::series::{BigCount, TypeVector};
use crate::subdigons::count_marked_subdigons;
use crate::trees::{count_marked_trees, enumerate_marked_trees, enumerate_trees};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Default cap on edge weight for anything that enumerates trees or subdigons.
pub const DEFAULT_MAX_ENUM_WEIGHT: usize = 10;

#[derive(Debug, Parser)]
#[command(name = "geode", version, about = "Hyper-Catalan and Geode series, exactly")]
struct Cli {
    /// Worker threads (0 = one per core). Output does not depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Coefficients C_m of S, one row per monomial.
    STable(TableArgs),
    /// Coefficients of the Geode G, optionally with independent counts.
    GTable(GTableArgs),
    /// Run identity and bijection checks.
    Verify(VerifyArgs),
    /// List the ordered trees of one type in bracket form.
    Trees(TreesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long, default_value_t = 8)]
    max_weight: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
    /// Only monomials with m_1 = 0 (no bigon faces / unary nodes).
    #[arg(long)]
    classical: bool,
}

#[derive(Debug, Args)]
struct GTableArgs {
    #[command(flatten)]
    table: TableArgs,
    /// Add the marked-tree count L_m and the marked-subdigon count.
    #[arg(long)]
    with_counts: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_ENUM_WEIGHT)]
    max_enum_weight: usize,
    /// Test hook: add 1 to the G coefficient of this monomial.
    #[arg(long, hide = true, value_parser = parse_type)]
    inject_mismatch: Option<TypeVector>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    FunctionalEq,
    Factorization,
    TheoremG,
    LemmaG,
    Bijections,
    All,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 8)]
    max_weight: usize,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
    checks: Vec<Check>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    /// Enumerative checks run up to min(max-weight, this).
    #[arg(long, default_value_t = DEFAULT_MAX_ENUM_WEIGHT)]
    max_enum_weight: usize,
}

#[derive(Debug, Args)]
struct TreesArgs {
    #[arg(long = "type", value_parser = parse_type)]
    tree_type: TypeVector,
    /// List marked trees (marked leaf written `*`).
    #[arg(long)]
    marked: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_ENUM_WEIGHT)]
    max_enum_weight: usize,
}

fn parse_type(s: &str) -> Result<TypeVector, String> {
    s.parse::<TypeVector>().map_err(|e| e.to_string())
}

/// One table row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub monomial: String,
    pub coefficient: String,
    #[serde(rename = "L_m", skip_serializing_if = "Option::is_none")]
    pub marked_trees: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub marked_subdigons: Option<String>,
}

fn csv_field(monomial: &str) -> String {
    format!("\"{monomial}\"")
}

fn render_table(records: &[OutputRecord], format: TableFormat, with_counts: bool) -> String {
    match format {
        TableFormat::Json => {
            let mut s = serde_json::to_string_pretty(records).expect("records serialize");
            s.push('\n');
            s
        }
        TableFormat::Csv => {
            let mut s = String::from(if with_counts {
                "monomial,coefficient,L_m,marked_subdigons\n"
            } else {
                "monomial,coefficient\n"
            });
            for r in records {
                s.push_str(&csv_field(&r.monomial));
                s.push(',');
                s.push_str(&r.coefficient);
                if let (Some(l), Some(sb)) = (&r.marked_trees, &r.marked_subdigons) {
                    s.push(',');
                    s.push_str(l);
                    s.push(',');
                    s.push_str(sb);
                }
                s.push('\n');
            }
            s
        }
    }
}

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(msg: String) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: msg }
    }

    fn geode_failure(e: GeodeError) -> Self {
        Outcome { code: EXIT_MISMATCH, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

fn s_table(args: &TableArgs) -> Outcome {
    let table = HyperCatalanTable::new(args.max_weight);
    let records: Vec<OutputRecord> = table
        .iter()
        .filter(|(m, _)| !args.classical || m.get(1) == 0)
        .map(|(m, c)| OutputRecord {
            monomial: m.to_string(),
            coefficient: c.to_string(),
            marked_trees: None,
            marked_subdigons: None,
        })
        .collect();
    Outcome::ok(render_table(&records, args.format, false))
}

fn g_table(args: &GTableArgs) -> Outcome {
    let max_weight = args.table.max_weight;
    if args.with_counts && max_weight > args.max_enum_weight {
        return Outcome::usage(format!(
            "error: --with-counts enumerates trees and subdigons; max weight {max_weight} exceeds \
             --max-enum-weight {}\n",
            args.max_enum_weight
        ));
    }
    let table = match series_g(max_weight) {
        Ok(t) => t,
        Err(e) => return Outcome::geode_failure(e),
    };
    let rows: Vec<(TypeVector, BigCount)> = table
        .iter()
        .filter(|(m, _)| !args.table.classical || m.get(1) == 0)
        .map(|(m, g)| {
            let mut g = g.clone();
            if args.inject_mismatch.as_ref() == Some(m) {
                g += 1u32;
            }
            (m.clone(), g)
        })
        .collect();
    let counts: Option<Vec<(BigCount, BigCount)>> = args
        .with_counts
        .then(|| rows.par_iter().map(|(m, _)| (count_marked_trees(m), count_marked_subdigons(m))).collect());

    let mut stderr = String::new();
    let mut records = Vec::with_capacity(rows.len());
    for (i, (m, g)) in rows.iter().enumerate() {
        let (l, sb) = match &counts {
            Some(c) => {
                let (l, sb) = &c[i];
                if l != g || sb != g {
                    stderr.push_str(&format!("mismatch at ({m}): G={g} L={l} marked_subdigons={sb}\n"));
                }
                (Some(l.to_string()), Some(sb.to_string()))
            }
            None => (None, None),
        };
        records.push(OutputRecord {
            monomial: m.to_string(),
            coefficient: g.to_string(),
            marked_trees: l,
            marked_subdigons: sb,
        });
    }
    let code = if stderr.is_empty() { EXIT_OK } else { EXIT_MISMATCH };
    Outcome { code, stdout: render_table(&records, args.table.format, args.with_counts), stderr }
}

type GeodeCheck = fn(usize) -> Result<Report, GeodeError>;

#[derive(Serialize)]
struct VerifySummary<'a> {
    passed: bool,
    reports: &'a [Report],
}

fn verify(args: &VerifyArgs) -> Outcome {
    let all = args.checks.contains(&Check::All);
    let wants = |c: Check| all || args.checks.contains(&c);
    let enum_bound = args.max_weight.min(args.max_enum_weight);
    let mut reports = Vec::new();
    let mut stderr = String::new();
    if enum_bound < args.max_weight
        && (wants(Check::TheoremG) || wants(Check::LemmaG) || wants(Check::Bijections))
    {
        stderr.push_str(&format!("note: enumerative checks capped at weight {enum_bound}\n"));
    }
    if wants(Check::FunctionalEq) {
        reports.push(verify_functional_equation(args.max_weight));
    }
    let geode_runs: [(Check, GeodeCheck, usize); 3] = [
        (Check::Factorization, verify_factorization, args.max_weight),
        (Check::TheoremG, verify_theorem_g, enum_bound),
        (Check::LemmaG, verify_lemma_g, enum_bound),
    ];
    for (check, run, bound) in geode_runs {
        if wants(check) {
            match run(bound) {
                Ok(r) => reports.push(r),
                Err(e) => return Outcome::geode_failure(e),
            }
        }
    }
    if wants(Check::Bijections) {
        reports.push(verify_bijections(enum_bound));
    }
    let passed = reports.iter().all(Report::passed);
    let stdout = match args.format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&VerifySummary { passed, reports: &reports })
                .expect("reports serialize");
            s.push('\n');
            s
        }
        ReportFormat::Text => {
            let mut s: String = reports.iter().map(|r| r.to_string()).collect();
            s.push_str(if passed { "overall: PASS\n" } else { "overall: FAIL\n" });
            s
        }
    };
    Outcome { code: if passed { EXIT_OK } else { EXIT_MISMATCH }, stdout, stderr }
}

fn trees(args: &TreesArgs) -> Outcome {
    if args.tree_type.edge_weight() > args.max_enum_weight {
        return Outcome::usage(format!(
            "error: type ({}) has edge weight {} above --max-enum-weight {}\n",
            args.tree_type,
            args.tree_type.edge_weight(),
            args.max_enum_weight
        ));
    }
    let lines: Vec<String> = if args.marked {
        enumerate_marked_trees(&args.tree_type).iter().map(|t| t.to_string()).collect()
    } else {
        enumerate_trees(&args.tree_type).iter().map(|t| t.to_string()).collect()
    };
    let mut stdout = lines.join("\n");
    stdout.push('\n');
    Outcome::ok(stdout)
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: cannot start worker pool: {e}");
            return EXIT_USAGE;
        }
    };
    let outcome = pool.install(|| match &cli.command {
        Command::STable(a) => s_table(a),
        Command::GTable(a) => g_table(a),
        Command::Verify(a) => verify(a),
        Command::Trees(a) => trees(a),
    });
    let _ = stdout.write_all(outcome.stdout.as_bytes());
    let _ = stderr.write_all(outcome.stderr.as_bytes());
    outcome.code
}

/// Runs the CLI and captures both streams.
pub fn run_captured<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(args, &mut out, &mut err);
    (code, String::from_utf8(out).expect("utf-8 output"), String::from_utf8(err).expect("utf-8 output"))
}
