use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{
    apply_qop, curve_operator_with, z_closed, z_closed_coefficient, CurveCase, QOp, YDirection,
};
use crate::error::RingError;
use crate::ring::{LPoly, Mono, RatFun, Symbol, XSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Annihilated,
    Failed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeFailure {
    pub degree: usize,
    /// Canonical text of the nonzero coefficient.
    pub coefficient: String,
}

/// Outcome of checking `A Z = 0` through `x^order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnihilationReport {
    pub case: String,
    pub framing: Option<i64>,
    pub order: usize,
    pub status: Status,
    pub first_failure: Option<DegreeFailure>,
    pub millis: u64,
    /// Per-degree result for `x^0 .. x^order`: `true` when the coefficient vanishes.
    #[serde(skip)]
    pub degrees: Vec<bool>,
}

impl AnnihilationReport {
    pub fn annihilated(&self) -> bool {
        self.status == Status::Annihilated
    }
}

/// Applies the curve operator to the closed-form `Z` and checks that every
/// coefficient through `x^order` is zero.
pub fn verify_annihilation(case: CurveCase, order: usize) -> AnnihilationReport {
    verify_annihilation_with(case, order, YDirection::Forward)
}

pub fn verify_annihilation_with(
    case: CurveCase,
    order: usize,
    direction: YDirection,
) -> AnnihilationReport {
    let start = Instant::now();
    let z = z_closed(case, order);
    let op = curve_operator_with(case, direction);
    let mut report = verify_series(&op, &z, order).expect("closed form has the requested order");
    report.millis = start.elapsed().as_millis() as u64;
    report
}

/// The annihilation check on an arbitrary series, e.g. a perturbed `Z`.
pub fn verify_series(op: &QOp, z: &XSeries, order: usize) -> Result<AnnihilationReport, RingError> {
    let image = apply_qop(op, z, order)?;
    let degrees: Vec<bool> = image.coeffs().iter().map(RatFun::is_zero).collect();
    let first_failure = image.first_nonzero().map(|(degree, c)| DegreeFailure {
        degree,
        coefficient: c.to_text(),
    });
    Ok(AnnihilationReport {
        case: op.case.name().to_string(),
        framing: op.case.framing(),
        order,
        status: if first_failure.is_none() {
            Status::Annihilated
        } else {
            Status::Failed
        },
        first_failure,
        millis: 0,
        degrees,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecurrenceReport {
    pub case: String,
    pub framing: Option<i64>,
    pub order: usize,
    /// First `n` where the two-term relation between `a_n` and `a_{n+1}` fails.
    pub first_failure: Option<usize>,
}

impl RecurrenceReport {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

fn poly(sym: Symbol, e: i64) -> LPoly {
    LPoly::var(sym, e as i32)
}

/// Checks the two-term recurrence on consecutive closed-form coefficients
/// `a_n`, `a_{n+1}` (without their `x` powers), `n = 0 .. order-1`.
pub fn recurrence_check(case: CurveCase, order: usize) -> RecurrenceReport {
    let a: Vec<RatFun> = (0..=order).map(|n| z_closed_coefficient(case, n)).collect();
    let one = LPoly::one();
    let first_failure = (0..order).find(|&n| {
        let m = n as i64;
        let (lead, tail) = match case {
            // (n+1) lam a_{n+1} - e^{n lam} a_n
            CurveCase::Lambert => (
                LPoly::term(crate::ring::rat(m + 1), Mono::var(Symbol::Lam, 1)),
                -&poly(Symbol::E, 2 * m),
            ),
            // (1 - e^{(n+1) lam}) a_{n+1} - e^{lam/2} e^{-a n lam} a_n
            CurveCase::C3 { framing: f } => (
                &one - &poly(Symbol::E, 2 * (m + 1)),
                -&poly(Symbol::E, 1 - 2 * f * m),
            ),
            // (1 - q^{n+1}) a_{n+1} + q^{(a+1)n + 1/2} a_n - e^{-t} q^{a n + 1/2} a_n
            CurveCase::Conifold { framing: f } => (
                &one - &poly(Symbol::U, 2 * (m + 1)),
                &poly(Symbol::U, 2 * (f + 1) * m + 1)
                    - &LPoly::monomial(
                        Mono::var(Symbol::Qh, 2) * Mono::var(Symbol::U, (2 * f * m + 1) as i32),
                    ),
            ),
        };
        let lhs = &a[n + 1].try_mul_poly(&lead).expect("same ring")
            + &a[n].try_mul_poly(&tail).expect("same ring");
        !lhs.is_zero()
    });
    RecurrenceReport {
        case: case.name().to_string(),
        framing: case.framing(),
        order,
        first_failure,
    }
}
