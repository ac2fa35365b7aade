//! Invariant suites run by `qcurve selftest`.

use std::env;
use std::path::Path;
use std::time::Instant;

use qcurve_core::combinatorics::{
    character_table, class_average, partitions_of, partitions_up_to, z_rat,
};
use qcurve_core::hurwitz::{burnside_rhs, cutjoin_check, elsv_genus0_count, hurwitz_numbers};
use qcurve_core::qcurve::{curve_operator, verify_series, z_closed, z_from_characters, CurveCase};
use qcurve_core::symfun::schur_in_p;
use qcurve_core::{LPoly, Mono, Rat, RatFun, Symbol};
use rayon::prelude::*;
use serde::Serialize;

use crate::golden;

/// Set to anything but `0` or the empty string to corrupt inputs on purpose.
pub const FAULT_ENV: &str = "QCURVE_FAULT_INJECT";

pub fn fault_injection_enabled() -> bool {
    env::var(FAULT_ENV).is_ok_and(|v| !v.is_empty() && v != "0")
}

#[derive(Debug, Clone, Serialize)]
pub struct Suite {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub passed: bool,
    pub fault_injection: bool,
    pub suites: Vec<Suite>,
}

type Check = fn(bool, &Path) -> Result<String, String>;

const SUITES: [(&str, Check); 6] = [
    ("characters", characters),
    ("cut-and-join", cut_and_join),
    ("route-equivalence", route_equivalence),
    ("elsv", elsv),
    ("annihilation", annihilation),
    ("golden", golden_files),
];

pub fn run(golden_dir: &Path, fault: bool, timing: bool) -> Summary {
    let suites: Vec<Suite> = SUITES
        .par_iter()
        .map(|&(name, check)| {
            let start = Instant::now();
            let result = check(fault, golden_dir);
            let millis = if timing {
                start.elapsed().as_millis() as u64
            } else {
                0
            };
            let (passed, detail) = match result {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            Suite {
                name,
                passed,
                detail,
                millis,
            }
        })
        .collect();
    Summary {
        passed: suites.iter().all(|s| s.passed),
        fault_injection: fault,
        suites,
    }
}

fn characters(_: bool, _: &Path) -> Result<String, String> {
    for n in 0..=8 {
        let (parts, table) = character_table(n);
        for (a, row_a) in table.iter().enumerate() {
            for (b, row_b) in table.iter().enumerate() {
                let inner: Rat = parts
                    .iter()
                    .enumerate()
                    .map(|(k, mu)| Rat::from_integer((row_a[k] * row_b[k]).into()) / z_rat(mu))
                    .sum();
                if inner != Rat::from_integer(i64::from(a == b).into()) {
                    return Err(format!(
                        "rows {} and {} not orthonormal",
                        parts[a], parts[b]
                    ));
                }
            }
            let expect = i64::from(parts[a].len() <= 1);
            if class_average(&parts[a]) != Rat::from_integer(expect.into()) {
                return Err(format!("collapse identity fails for {}", parts[a]));
            }
        }
    }
    Ok("orthogonality and collapse identity for n <= 8".into())
}

fn cut_and_join(fault: bool, _: &Path) -> Result<String, String> {
    for nu in partitions_up_to(6) {
        let s = schur_in_p(&nu, 6).map_err(|e| e.to_string())?;
        if s.cut_and_join() != s.scale_rat(&Rat::new(nu.kappa().into(), 2.into())) {
            return Err(format!("K s_nu != kappa/2 s_nu for {nu}"));
        }
    }
    let mut series = burnside_rhs(5, 8);
    if fault {
        let mu = partitions_of(3)[0].clone();
        // the top lam power only enters the derivative side
        let bump = LPoly::monomial(Mono::var(Symbol::Lam, series.lambda_order as i32));
        series.sym.add_term(mu, RatFun::from(bump));
    }
    let report = cutjoin_check(&series);
    match report.mismatch {
        None => Ok(format!(
            "eigenvalues for |nu| <= 6; equation on {} coefficients",
            report.coefficients_checked
        )),
        Some(m) => Err(format!(
            "mismatch at p{} lam^{}",
            m.partition, m.lambda_power
        )),
    }
}

fn route_equivalence(_: bool, _: &Path) -> Result<String, String> {
    let cases = [
        CurveCase::Lambert,
        CurveCase::C3 { framing: -1 },
        CurveCase::C3 { framing: 2 },
        CurveCase::Conifold { framing: -1 },
        CurveCase::Conifold { framing: 2 },
    ];
    let bad: Vec<String> = cases
        .par_iter()
        .filter(|&&case| z_from_characters(case, 6) != z_closed(case, 6))
        .map(|case| case.to_string())
        .collect();
    if bad.is_empty() {
        Ok(format!(
            "character sums equal closed forms through x^6 for {} cases",
            cases.len()
        ))
    } else {
        Err(format!("differs for {}", bad.join(", ")))
    }
}

fn elsv(_: bool, _: &Path) -> Result<String, String> {
    let table = hurwitz_numbers(6, 0);
    let mut count = 0;
    for mu in partitions_up_to(6).into_iter().filter(|mu| mu.len() >= 3) {
        let closed = elsv_genus0_count(&mu).map_err(|e| e.to_string())?;
        if table.get(0, &mu) != Some(&closed) {
            return Err(format!("H_0 mismatch at {mu}"));
        }
        count += 1;
    }
    Ok(format!(
        "genus-0 closed form matches for {count} partitions"
    ))
}

fn annihilation(fault: bool, _: &Path) -> Result<String, String> {
    const ORDER: usize = 12;
    let mut cases = vec![CurveCase::Lambert];
    for a in -3..=3 {
        cases.push(CurveCase::C3 { framing: a });
        cases.push(CurveCase::Conifold { framing: a });
    }
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|&case| {
            let mut z = z_closed(case, ORDER);
            if fault {
                let bumped = z.coeff(3) + &RatFun::one();
                z.set_coeff(3, bumped);
            }
            let report =
                verify_series(&curve_operator(case), &z, ORDER).expect("series has full order");
            report
                .first_failure
                .map(|f| format!("{case} at x^{}", f.degree))
        })
        .collect();
    if failures.is_empty() {
        Ok(format!(
            "{} operators annihilate Z through x^{ORDER}",
            cases.len()
        ))
    } else {
        Err(format!(
            "{} failures, first {}",
            failures.len(),
            failures[0]
        ))
    }
}

fn golden_files(_: bool, dir: &Path) -> Result<String, String> {
    golden::compare(dir).map(|n| format!("{n} files match {}", dir.display()))
}
