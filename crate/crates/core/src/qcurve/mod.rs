//! Partition functions of the three geometries and their quantum curves.
//!
//! Every `Z` is a series `sum_n a_n x^n` over [`RatFun`](crate::RatFun). The
//! operators act on it term by term: `x^` multiplies by `x`, and `y^` is
//! either the Euler operator `lam x d/dx` (Lambert) or a dilation
//! `x^n -> s^n x^n` by a symbol power `s`.

mod classical;
mod operator;
mod partition_fn;
mod verify;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use classical::{
    classical_curve, classical_limit, conifold_mirror_curve, CurveMono, CurvePoly,
};
pub use operator::{apply_qop, curve_operator, curve_operator_with, QOp, QOpTerm, YAction};
pub use partition_fn::{
    conifold_coefficient_direct_form, conifold_coefficient_inverse_form, z_closed,
    z_closed_coefficient, z_from_characters,
};
pub use verify::{
    recurrence_check, verify_annihilation, verify_annihilation_with, verify_series,
    AnnihilationReport, DegreeFailure, RecurrenceReport, Status,
};

/// Which geometry, with its framing where applicable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurveCase {
    Lambert,
    C3 { framing: i64 },
    Conifold { framing: i64 },
}

impl CurveCase {
    pub fn name(&self) -> &'static str {
        match self {
            CurveCase::Lambert => "lambert",
            CurveCase::C3 { .. } => "c3",
            CurveCase::Conifold { .. } => "conifold",
        }
    }

    pub fn framing(&self) -> Option<i64> {
        match *self {
            CurveCase::Lambert => None,
            CurveCase::C3 { framing } | CurveCase::Conifold { framing } => Some(framing),
        }
    }

    /// Builds a case from its name; `framing` is ignored for `lambert`.
    pub fn from_name(name: &str, framing: i64) -> Option<CurveCase> {
        match name {
            "lambert" => Some(CurveCase::Lambert),
            "c3" => Some(CurveCase::C3 { framing }),
            "conifold" => Some(CurveCase::Conifold { framing }),
            _ => None,
        }
    }
}

impl fmt::Display for CurveCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.framing() {
            None => f.write_str(self.name()),
            Some(a) => write!(f, "{}(a={a})", self.name()),
        }
    }
}

/// How the conifold `y^` acts on `x^n`.
///
/// `Forward` is `x^n -> q^n x^n`, the direction that reproduces the
/// coefficient recurrence. `Inverse` is `x^n -> q^{-n} x^n`, the literal
/// reading of `exp(-sqrt(-1) lam x d/dx)` with `q = exp(sqrt(-1) lam)`.
/// The other cases ignore this setting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum YDirection {
    #[default]
    Forward,
    Inverse,
}

impl YDirection {
    pub fn sign(self) -> i32 {
        match self {
            YDirection::Forward => 1,
            YDirection::Inverse => -1,
        }
    }
}

impl FromStr for YDirection {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "forward" => Ok(YDirection::Forward),
            "inverse" => Ok(YDirection::Inverse),
            other => Err(format!("unknown y-direction `{other}`")),
        }
    }
}

impl fmt::Display for YDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            YDirection::Forward => "forward",
            YDirection::Inverse => "inverse",
        })
    }
}
