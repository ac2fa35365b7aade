//! Reference outputs under a versioned directory.

use std::env;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use qcurve_core::qcurve::{CurveCase, YDirection};

use crate::render::{self, Format};

pub const GOLDEN_DIR_ENV: &str = "QCURVE_GOLDEN_DIR";

pub fn golden_dir() -> PathBuf {
    env::var_os(GOLDEN_DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/golden/v1")))
}

/// File name and freshly computed contents of every golden file.
pub fn expected() -> Vec<(&'static str, String)> {
    let conifold: Vec<CurveCase> = (-1..=1)
        .map(|a| CurveCase::Conifold { framing: a })
        .collect();
    vec![
        ("partitions_6.json", render::partitions(6, Format::Json)),
        ("hurwitz_d4_g2.json", render::hurwitz(4, 2, Format::Json)),
        ("hurwitz_d4_g2.csv", render::hurwitz(4, 2, Format::Csv)),
        (
            "zclosed_lambert_x6.json",
            render::zclosed(&[CurveCase::Lambert], 6, Format::Json),
        ),
        (
            "zclosed_c3_a2_x4.json",
            render::zclosed(&[CurveCase::C3 { framing: 2 }], 4, Format::Json),
        ),
        (
            "zclosed_conifold_a-1_x4.json",
            render::zclosed(&[CurveCase::Conifold { framing: -1 }], 4, Format::Json),
        ),
        (
            "verify_conifold_x8.jsonl",
            render::verify(
                &render::verify_reports(&conifold, 8, YDirection::Forward, false),
                Format::Json,
            ),
        ),
        (
            "verify_conifold_inverse_x8.jsonl",
            render::verify(
                &render::verify_reports(&conifold, 8, YDirection::Inverse, false),
                Format::Json,
            ),
        ),
    ]
}

pub fn bless(dir: &Path) -> io::Result<usize> {
    fs::create_dir_all(dir)?;
    let files = expected();
    for (name, contents) in &files {
        fs::write(dir.join(name), contents)?;
    }
    Ok(files.len())
}

/// Number of files compared, or a description of the first difference.
pub fn compare(dir: &Path) -> Result<usize, String> {
    let files = expected();
    for (name, contents) in &files {
        let path = dir.join(name);
        let stored = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        if &stored != contents {
            return Err(format!(
                "{} differs from the computed output",
                path.display()
            ));
        }
    }
    Ok(files.len())
}
