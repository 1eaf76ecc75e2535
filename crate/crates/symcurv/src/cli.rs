//! Command-line surface: sweep the bound table, query a single space,
//! evaluate the constancy criteria, list positive roots, or run the
//! embedded verification suites.
//!
//! All output is deterministic: catalog order is fixed, JSON keys are
//! sorted, and rationals render as `p/q` in lowest terms (integers as
//! `p`). The only environment influence is `SYMCURV_WIDTH`, a minimum
//! column width for markdown tables.

use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::catalog::{resolve, CatalogLimits, Params, SpaceLabel, SpaceSpec};
use crate::exact::fmt_rat;
use crate::report::{
    bound_table, curvature_report, sampson_check, CurvatureReport, SampsonCriterion, TableRow,
};
use crate::root_system::{LieType, RootSystem};
use crate::verify::run_all;

#[derive(Parser)]
#[command(
    name = "symcurv",
    version,
    about = "Exact curvature bounds for compact irreducible symmetric spaces",
    color = clap::ColorChoice::Never
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the bound table over parameter sweeps
    Table {
        /// Largest single parameter n (and underlying rank)
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Largest p+q for the two-parameter families
        #[arg(long, default_value_t = 12)]
        max_pq: usize,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
    },
    /// Report the curvature bound of one space
    Bound {
        /// Family label, e.g. AI, BDI, EVII, G, GROUP(F4)
        label: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
    },
    /// Evaluate the constancy criteria for one space
    Sampson {
        /// Family label, e.g. AI, BDI, EVII, G, GROUP(F4)
        label: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long, value_enum, default_value_t = CriterionArg::Both)]
        criterion: CriterionArg,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
    },
    /// List the positive roots of a simple type
    Roots {
        /// Type name, e.g. A3, D7, G2
        lie_type: String,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
    },
    /// Run every embedded verification suite
    Verify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Markdown,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CriterionArg {
    Conservative,
    Relaxed,
    Both,
}

impl CriterionArg {
    fn criteria(self) -> Vec<SampsonCriterion> {
        match self {
            CriterionArg::Conservative => vec![SampsonCriterion::Conservative],
            CriterionArg::Relaxed => vec![SampsonCriterion::Relaxed],
            CriterionArg::Both => vec![SampsonCriterion::Conservative, SampsonCriterion::Relaxed],
        }
    }
}

/// Parse and run. Help and version requests go to `out` with exit 0;
/// argument errors go to `err` with exit 1; runtime errors go to `err`
/// with exit 1; a failed `verify` exits 2.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(parse_err) => {
            let rendered = parse_err.render().to_string();
            return match parse_err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    1
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, String> {
    match command {
        Command::Table {
            max_n,
            max_pq,
            format,
        } => {
            let rows = bound_table(CatalogLimits { max_n, max_pq }).map_err(stringify)?;
            emit_table(&rows, format, out)?;
            Ok(0)
        }
        Command::Bound {
            label,
            n,
            p,
            q,
            format,
        } => {
            let spec = resolve_from_args(&label, n, p, q)?;
            let report = curvature_report(&spec).map_err(stringify)?;
            emit_bound(&spec, &report, format, out)?;
            Ok(0)
        }
        Command::Sampson {
            label,
            n,
            p,
            q,
            criterion,
            format,
        } => {
            let spec = resolve_from_args(&label, n, p, q)?;
            let report = curvature_report(&spec).map_err(stringify)?;
            emit_sampson(&spec, &report, criterion, format, out)?;
            Ok(0)
        }
        Command::Roots { lie_type, format } => {
            let lie_type: LieType = lie_type.parse().map_err(stringify)?;
            emit_roots(&RootSystem::new(lie_type), format, out)?;
            Ok(0)
        }
        Command::Verify => emit_verify(out),
    }
}

fn stringify(err: impl std::fmt::Display) -> String {
    err.to_string()
}

fn resolve_from_args(
    label: &str,
    n: Option<usize>,
    p: Option<usize>,
    q: Option<usize>,
) -> Result<SpaceSpec, String> {
    let label: SpaceLabel = label.parse().map_err(stringify)?;
    let params = match (n, p, q) {
        (Some(n), None, None) => Params::N(n),
        (None, Some(p), Some(q)) => Params::PQ(p, q),
        (None, None, None) => Params::None,
        _ => return Err("give either --n, or --p together with --q".to_string()),
    };
    resolve(label, params).map_err(stringify)
}

/// Minimum markdown column width, from `SYMCURV_WIDTH` (unset: none).
fn column_width() -> usize {
    std::env::var("SYMCURV_WIDTH")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .unwrap_or(0)
}

fn markdown_row(cells: &[String], width: usize) -> String {
    let mut line = String::from("|");
    for cell in cells {
        line.push_str(&format!(" {cell:<width$} |"));
    }
    line
}

const TABLE_HEADER: [&str; 5] = ["Type", "compact type", "rank", "dimension", "bound"];
const CSV_HEADER: &str = "type,space,rank,dimension,bound";

fn table_cells(row: &TableRow) -> [String; 5] {
    [
        row.type_label.clone(),
        row.name.clone(),
        row.rank.to_string(),
        row.dim.to_string(),
        fmt_rat(&row.bound),
    ]
}

fn write_markdown_table(rows: &[[String; 5]], out: &mut dyn Write) -> Result<(), String> {
    let width = column_width();
    let header: Vec<String> = TABLE_HEADER.iter().map(|s| s.to_string()).collect();
    let separator: Vec<String> = TABLE_HEADER.iter().map(|_| "---".to_string()).collect();
    writeln!(out, "{}", markdown_row(&header, width)).map_err(stringify)?;
    writeln!(out, "{}", markdown_row(&separator, width)).map_err(stringify)?;
    for cells in rows {
        writeln!(out, "{}", markdown_row(cells, width)).map_err(stringify)?;
    }
    Ok(())
}

fn write_csv_table(rows: &[[String; 5]], out: &mut dyn Write) -> Result<(), String> {
    writeln!(out, "{CSV_HEADER}").map_err(stringify)?;
    for cells in rows {
        writeln!(out, "{}", cells.join(",")).map_err(stringify)?;
    }
    Ok(())
}

fn write_json(value: &serde_json::Value, out: &mut dyn Write) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(stringify)?;
    writeln!(out, "{text}").map_err(stringify)
}

fn emit_table(rows: &[TableRow], format: Format, out: &mut dyn Write) -> Result<(), String> {
    match format {
        Format::Markdown => {
            let cells: Vec<[String; 5]> = rows.iter().map(table_cells).collect();
            write_markdown_table(&cells, out)
        }
        Format::Csv => {
            let cells: Vec<[String; 5]> = rows.iter().map(table_cells).collect();
            write_csv_table(&cells, out)
        }
        Format::Json => {
            let value = serde_json::Value::Array(rows.iter().map(TableRow::to_json).collect());
            write_json(&value, out)
        }
    }
}

fn report_cells(spec: &SpaceSpec, report: &CurvatureReport) -> [String; 5] {
    [
        spec.type_label(),
        spec.name(),
        spec.meta_rank().to_string(),
        spec.meta_dim().to_string(),
        fmt_rat(report.upper_bound()),
    ]
}

fn emit_bound(
    spec: &SpaceSpec,
    report: &CurvatureReport,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), String> {
    match format {
        Format::Markdown => write_markdown_table(&[report_cells(spec, report)], out),
        Format::Csv => write_csv_table(&[report_cells(spec, report)], out),
        Format::Json => write_json(&report.to_json(), out),
    }
}

fn emit_sampson(
    spec: &SpaceSpec,
    report: &CurvatureReport,
    criterion: CriterionArg,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), String> {
    let verdicts: Vec<_> = criterion
        .criteria()
        .into_iter()
        .map(|c| sampson_check(report, c))
        .collect();
    match format {
        Format::Markdown => {
            for v in &verdicts {
                let outcome = if v.passes { "pass" } else { "fail" };
                writeln!(
                    out,
                    "{}: {outcome} (margin {})",
                    v.criterion,
                    fmt_rat(&v.margin)
                )
                .map_err(stringify)?;
            }
            Ok(())
        }
        Format::Csv => {
            writeln!(out, "criterion,passes,margin").map_err(stringify)?;
            for v in &verdicts {
                writeln!(out, "{},{},{}", v.criterion, v.passes, fmt_rat(&v.margin))
                    .map_err(stringify)?;
            }
            Ok(())
        }
        Format::Json => {
            let value = json!({
                "space": spec.to_json(),
                "bound": fmt_rat(report.upper_bound()),
                "verdicts": verdicts.iter().map(|v| v.to_json()).collect::<Vec<_>>(),
            });
            write_json(&value, out)
        }
    }
}

fn emit_roots(rs: &RootSystem, format: Format, out: &mut dyn Write) -> Result<(), String> {
    match format {
        Format::Markdown => {
            for root in rs.positive() {
                writeln!(out, "{root}").map_err(stringify)?;
            }
            Ok(())
        }
        Format::Csv => {
            for root in rs.positive() {
                let coeffs: Vec<String> = root.coeffs().iter().map(i64::to_string).collect();
                writeln!(out, "{}", coeffs.join(",")).map_err(stringify)?;
            }
            Ok(())
        }
        Format::Json => {
            let coeffs: Vec<Vec<i64>> = rs.positive().iter().map(|r| r.coeffs().to_vec()).collect();
            let value = json!({
                "lie_type": rs.lie_type().to_string(),
                "count": coeffs.len(),
                "positive_roots": coeffs,
            });
            write_json(&value, out)
        }
    }
}

fn emit_verify(out: &mut dyn Write) -> Result<i32, String> {
    let results = run_all();
    let mut failed = 0usize;
    let mut total = 0usize;
    for r in &results {
        total += r.checked;
        if r.passed() {
            writeln!(out, "PASS {} ({} checks)", r.name, r.checked).map_err(stringify)?;
        } else {
            failed += 1;
            writeln!(
                out,
                "FAIL {} ({} checks, {} failures)",
                r.name,
                r.checked,
                r.failures.len()
            )
            .map_err(stringify)?;
            for f in &r.failures {
                writeln!(out, "  - {f}").map_err(stringify)?;
            }
        }
    }
    if failed == 0 {
        writeln!(out, "all {} suites passed ({total} checks)", results.len()).map_err(stringify)?;
        Ok(0)
    } else {
        writeln!(out, "{failed} of {} suites failed", results.len()).map_err(stringify)?;
        Ok(2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str]) -> (i32, String, String) {
        let argv: Vec<String> = std::iter::once("symcurv")
            .chain(args.iter().copied())
            .map(str::to_string)
            .collect();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(&argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn help_goes_to_stdout_with_success() {
        let (code, out, err) = run_cli(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("Usage"));
        assert!(err.is_empty());
    }

    #[test]
    fn bad_arguments_exit_one_on_stderr() {
        let (code, out, err) = run_cli(&["bounds"]);
        assert_eq!(code, 1);
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }

    #[test]
    fn unknown_label_is_a_runtime_error() {
        let (code, _, err) = run_cli(&["bound", "XX"]);
        assert_eq!(code, 1);
        assert!(err.contains("XX"));
    }

    #[test]
    fn conflicting_parameter_flags_are_rejected() {
        let (code, _, err) = run_cli(&["bound", "AI", "--n", "3", "--p", "1", "--q", "2"]);
        assert_eq!(code, 1);
        assert!(err.contains("--n"));
    }

    #[test]
    fn single_row_markdown_report() {
        let (code, out, _) = run_cli(&["bound", "AI", "--n", "3"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(
            lines[0],
            "| Type | compact type | rank | dimension | bound |"
        );
        assert_eq!(lines[1], "| --- | --- | --- | --- | --- |");
        assert_eq!(lines[2], "| AI | SU(3)/SO(3) | 2 | 5 | 1/3 |");
    }

    #[test]
    fn json_report_carries_the_bound() {
        let (code, out, _) = run_cli(&["bound", "G", "--format", "json"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"bound\": \"1/4\""));
    }

    #[test]
    fn criteria_lines_show_margins() {
        let (code, out, _) = run_cli(&["sampson", "AI", "--n", "8", "--criterion", "conservative"]);
        assert_eq!(code, 0);
        assert_eq!(out, "conservative: pass (margin 0)\n");
        let (code, out, _) = run_cli(&["sampson", "G"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "conservative: fail (margin -1/2)\nrelaxed: pass (margin 0)\n"
        );
    }

    #[test]
    fn root_listing_counts_match() {
        let (code, out, _) = run_cli(&["roots", "G2"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 6);
        assert!(out.contains("(3,2)"));
    }

    #[test]
    fn csv_table_has_the_fixed_header() {
        let (code, out, _) =
            run_cli(&["table", "--max-n", "3", "--max-pq", "4", "--format", "csv"]);
        assert_eq!(code, 0);
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("type,space,rank,dimension,bound"));
        assert!(out.lines().count() > 10);
    }

    #[test]
    fn identical_arguments_give_identical_bytes() {
        let first = run_cli(&["table", "--max-n", "4", "--max-pq", "5"]);
        let second = run_cli(&["table", "--max-n", "4", "--max-pq", "5"]);
        assert_eq!(first, second);
    }
}
