//! `qcurve`: exact Hurwitz numbers, partition functions and quantum-curve checks.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.

mod golden;
mod render;
mod selftest;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qcurve_core::qcurve::{CurveCase, YDirection};

use render::Format;

#[derive(Debug, Parser)]
#[command(
    name = "qcurve",
    version,
    about = "Exact checks of quantum mirror curves"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for independent checks; 0 picks the number of cores.
    #[arg(long, default_value_t = 0, global = true)]
    threads: usize,
    /// Report `millis` as 0 so that output is byte-for-byte reproducible.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the partitions of n with z, |Aut|, kappa and dim.
    Partitions { n: usize },
    /// Hurwitz numbers H_{g,mu} for 1 <= |mu| <= dmax, g <= gmax.
    Hurwitz {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
        dmax: u32,
        #[arg(long, default_value_t = 2)]
        gmax: u32,
    },
    /// Closed-form coefficients of Z through x^xorder.
    Zclosed {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, default_value_t = 6)]
        xorder: usize,
    },
    /// Check that the quantum curve annihilates Z through x^xorder.
    VerifyCurve {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, default_value_t = 12)]
        xorder: usize,
        /// Action of y^ on x^n for the conifold: q^n (forward) or q^-n (inverse).
        #[arg(long, value_enum, default_value_t = DirectionArg::Forward)]
        y_direction: DirectionArg,
    },
    /// Check the cut-and-join equation on the Burnside series.
    CutjoinCheck {
        #[arg(long, default_value_t = 6)]
        dmax: usize,
        #[arg(long, default_value_t = 10)]
        lambda_order: usize,
    },
    /// Run the invariant suites and compare against the golden files.
    Selftest {
        /// Shorthand for `--format json`.
        #[arg(long)]
        json: bool,
        /// Rewrite the golden files instead of comparing.
        #[arg(long, hide = true)]
        bless: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CaseArg {
    Lambert,
    C3,
    Conifold,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DirectionArg {
    Forward,
    Inverse,
}

impl From<DirectionArg> for YDirection {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::Forward => YDirection::Forward,
            DirectionArg::Inverse => YDirection::Inverse,
        }
    }
}

#[derive(Debug, Args)]
struct CurveArgs {
    #[arg(long, value_enum)]
    case: CaseArg,
    /// Framings, comma separated or repeated; ignored for lambert.
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        default_values_t = [-3i64, -2, -1, 0, 1, 2, 3]
    )]
    framing: Vec<i64>,
}

impl CurveArgs {
    fn cases(&self) -> Vec<CurveCase> {
        match self.case {
            CaseArg::Lambert => vec![CurveCase::Lambert],
            CaseArg::C3 => self
                .framing
                .iter()
                .map(|&a| CurveCase::C3 { framing: a })
                .collect(),
            CaseArg::Conifold => self
                .framing
                .iter()
                .map(|&a| CurveCase::Conifold { framing: a })
                .collect(),
        }
    }
}

/// Rendered output plus whether every check in it passed.
struct Outcome {
    text: String,
    ok: bool,
}

fn run(cli: &Cli) -> Result<Outcome, String> {
    let timing = !cli.no_timing;
    let outcome = match &cli.command {
        Command::Partitions { n } => Outcome {
            text: render::partitions(*n, cli.format),
            ok: true,
        },
        Command::Hurwitz { dmax, gmax } => Outcome {
            text: render::hurwitz(*dmax as usize, *gmax as usize, cli.format),
            ok: true,
        },
        Command::Zclosed { curve, xorder } => Outcome {
            text: render::zclosed(&curve.cases(), *xorder, cli.format),
            ok: true,
        },
        Command::VerifyCurve {
            curve,
            xorder,
            y_direction,
        } => {
            let reports =
                render::verify_reports(&curve.cases(), *xorder, (*y_direction).into(), timing);
            Outcome {
                ok: reports.iter().all(|r| r.annihilated()),
                text: render::verify(&reports, cli.format),
            }
        }
        Command::CutjoinCheck { dmax, lambda_order } => {
            let report = qcurve_core::hurwitz::cutjoin_verify(*dmax, *lambda_order);
            Outcome {
                ok: report.passed(),
                text: render::cutjoin(&report, cli.format),
            }
        }
        Command::Selftest { json, bless } => {
            let dir = golden::golden_dir();
            if *bless {
                let written = golden::bless(&dir).map_err(|e| format!("{}: {e}", dir.display()))?;
                return Ok(Outcome {
                    text: format!("wrote {written} golden files to {}\n", dir.display()),
                    ok: true,
                });
            }
            let summary = selftest::run(&dir, selftest::fault_injection_enabled(), timing);
            let format = if *json { Format::Json } else { cli.format };
            Outcome {
                ok: summary.passed,
                text: render::selftest(&summary, format),
            }
        }
    };
    Ok(outcome)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
        {
            eprintln!("qcurve: {e}");
            return ExitCode::from(2);
        }
    }
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("qcurve: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(path) => {
            fs::write(path, &outcome.text).map_err(|e| format!("{}: {e}", path.display()))
        }
        None => io::stdout()
            .lock()
            .write_all(outcome.text.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("qcurve: {e}");
        return ExitCode::from(2);
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
