//! Command output in JSON, CSV and plain text. Every renderer is a pure
//! function of its inputs so that identical runs give identical bytes.

use std::fmt::Write as _;

use clap::ValueEnum;
use qcurve_core::combinatorics::partitions_of;
use qcurve_core::hurwitz::{hurwitz_numbers, CutJoinReport, HurwitzRow};
use qcurve_core::qcurve::{
    verify_annihilation_with, z_closed, AnnihilationReport, CurveCase, YDirection,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::selftest::Summary;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn csv<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("flat rows serialize");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 input")
}

/// `csv` writes no header for an empty row set; emit one anyway.
fn csv_or_header<T: Serialize>(rows: &[T], header: &str) -> String {
    if rows.is_empty() {
        format!("{header}\n")
    } else {
        csv(rows)
    }
}

#[derive(Debug, Serialize)]
struct PartitionRow {
    partition: String,
    z: String,
    aut: String,
    kappa: i64,
    dim: String,
}

pub fn partitions(n: usize, format: Format) -> String {
    let rows: Vec<PartitionRow> = partitions_of(n)
        .iter()
        .map(|p| PartitionRow {
            partition: p.to_string(),
            z: p.z().to_string(),
            aut: p.aut().to_string(),
            kappa: p.kappa(),
            dim: p.dim().to_string(),
        })
        .collect();
    match format {
        Format::Json => json(&rows),
        Format::Csv => csv(&rows),
        Format::Text => {
            let width = rows
                .iter()
                .map(|r| r.partition.len())
                .max()
                .unwrap_or(0)
                .max(9);
            let mut s = format!(
                "{:<width$}  {:>8}  {:>6}  {:>6}  {:>6}\n",
                "partition", "z", "aut", "kappa", "dim"
            );
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:<width$}  {:>8}  {:>6}  {:>6}  {:>6}",
                    r.partition, r.z, r.aut, r.kappa, r.dim
                );
            }
            s
        }
    }
}

pub fn hurwitz_rows(dmax: usize, gmax: usize) -> Vec<HurwitzRow> {
    hurwitz_numbers(dmax, gmax).rows()
}

pub fn hurwitz(dmax: usize, gmax: usize, format: Format) -> String {
    let rows = hurwitz_rows(dmax, gmax);
    match format {
        Format::Json => json(&rows),
        Format::Csv => csv_or_header(&rows, "genus,partition,value"),
        Format::Text => rows.iter().fold(String::new(), |mut s, r| {
            let _ = writeln!(s, "H[g={}, mu={}] = {}", r.genus, r.partition, r.value);
            s
        }),
    }
}

#[derive(Debug, Serialize)]
struct ZRow {
    case: &'static str,
    framing: Option<i64>,
    degree: usize,
    coefficient: String,
}

pub fn zclosed(cases: &[CurveCase], order: usize, format: Format) -> String {
    let rows: Vec<ZRow> = cases
        .iter()
        .flat_map(|&case| {
            let z = z_closed(case, order);
            (0..=order)
                .map(move |n| ZRow {
                    case: case.name(),
                    framing: case.framing(),
                    degree: n,
                    coefficient: z.coeff(n).to_text(),
                })
                .collect::<Vec<_>>()
        })
        .collect();
    match format {
        Format::Json => json(&rows),
        Format::Csv => csv(&rows),
        Format::Text => {
            let mut s = String::new();
            for case in cases {
                let _ = writeln!(s, "{case}");
                for r in rows
                    .iter()
                    .filter(|r| r.case == case.name() && r.framing == case.framing())
                {
                    let _ = writeln!(s, "  x^{}: {}", r.degree, r.coefficient);
                }
            }
            s
        }
    }
}

/// Runs the independent checks in parallel and returns them in input order.
pub fn verify_reports(
    cases: &[CurveCase],
    order: usize,
    direction: YDirection,
    timing: bool,
) -> Vec<AnnihilationReport> {
    cases
        .par_iter()
        .map(|&case| {
            let mut r = verify_annihilation_with(case, order, direction);
            if !timing {
                r.millis = 0;
            }
            r
        })
        .collect()
}

#[derive(Debug, Serialize)]
struct VerifyRow<'a> {
    case: &'a str,
    framing: Option<i64>,
    order: usize,
    status: &'static str,
    failure_degree: Option<usize>,
    failure_coefficient: Option<&'a str>,
    millis: u64,
}

/// JSON is one report object per line.
pub fn verify(reports: &[AnnihilationReport], format: Format) -> String {
    match format {
        Format::Json => reports.iter().fold(String::new(), |mut s, r| {
            s.push_str(&serde_json::to_string(r).expect("plain data serializes"));
            s.push('\n');
            s
        }),
        Format::Csv => {
            let rows: Vec<VerifyRow> = reports
                .iter()
                .map(|r| VerifyRow {
                    case: &r.case,
                    framing: r.framing,
                    order: r.order,
                    status: if r.annihilated() {
                        "annihilated"
                    } else {
                        "failed"
                    },
                    failure_degree: r.first_failure.as_ref().map(|f| f.degree),
                    failure_coefficient: r.first_failure.as_ref().map(|f| f.coefficient.as_str()),
                    millis: r.millis,
                })
                .collect();
            csv(&rows)
        }
        Format::Text => reports.iter().fold(String::new(), |mut s, r| {
            let label = match r.framing {
                Some(a) => format!("{}(a={a})", r.case),
                None => r.case.clone(),
            };
            let _ = match &r.first_failure {
                None => writeln!(
                    s,
                    "{label} through x^{}: annihilated ({} ms)",
                    r.order, r.millis
                ),
                Some(f) => writeln!(
                    s,
                    "{label} through x^{}: FAILED at x^{}: {} ({} ms)",
                    r.order, f.degree, f.coefficient, r.millis
                ),
            };
            s
        }),
    }
}

#[derive(Debug, Serialize)]
struct CutJoinRow<'a> {
    degree_cap: usize,
    lambda_order: usize,
    coefficients_checked: usize,
    status: &'static str,
    mismatch_partition: Option<&'a str>,
    mismatch_lambda_power: Option<usize>,
}

pub fn cutjoin(report: &CutJoinReport, format: Format) -> String {
    match format {
        Format::Json => json(report),
        Format::Csv => csv(&[CutJoinRow {
            degree_cap: report.degree_cap,
            lambda_order: report.lambda_order,
            coefficients_checked: report.coefficients_checked,
            status: if report.passed() { "passed" } else { "failed" },
            mismatch_partition: report.mismatch.as_ref().map(|m| m.partition.as_str()),
            mismatch_lambda_power: report.mismatch.as_ref().map(|m| m.lambda_power),
        }]),
        Format::Text => match &report.mismatch {
            None => format!(
                "cut-and-join holds for |mu| <= {} through lam^{} ({} coefficients)\n",
                report.degree_cap,
                report.lambda_order.saturating_sub(1),
                report.coefficients_checked
            ),
            Some(m) => format!(
                "cut-and-join FAILED at p{} lam^{}: d/dlam gives {}, K gives {}\n",
                m.partition, m.lambda_power, m.derivative, m.cut_and_join
            ),
        },
    }
}

pub fn selftest(summary: &Summary, format: Format) -> String {
    match format {
        Format::Json => json(summary),
        Format::Csv => csv(&summary.suites),
        Format::Text => {
            let mut s = String::new();
            for suite in &summary.suites {
                let verdict = if suite.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    s,
                    "{verdict} {}: {} ({} ms)",
                    suite.name, suite.detail, suite.millis
                );
            }
            let _ = writeln!(
                s,
                "{}",
                if summary.passed {
                    "all suites passed"
                } else {
                    "selftest FAILED"
                }
            );
            s
        }
    }
}
