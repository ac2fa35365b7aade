use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{CurveCase, QOp, YAction};
use crate::error::RingError;
use crate::ring::{rat, Rat, Symbol};

/// `x^x * y^y * exp(y)^exp_y * (e^{-t})^et`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CurveMono {
    pub x: i64,
    pub y: i64,
    pub exp_y: i64,
    pub et: i64,
}

impl CurveMono {
    pub const ONE: CurveMono = CurveMono {
        x: 0,
        y: 0,
        exp_y: 0,
        et: 0,
    };

    fn mul(self, o: CurveMono) -> CurveMono {
        CurveMono {
            x: self.x + o.x,
            y: self.y + o.y,
            exp_y: self.exp_y + o.exp_y,
            et: self.et + o.et,
        }
    }
}

impl fmt::Display for CurveMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = [
            ("e^-t", self.et),
            ("x", self.x),
            ("y", self.y),
            ("exp(y)", self.exp_y),
        ]
        .iter()
        .filter(|(_, e)| *e != 0)
        .map(|(name, e)| {
            if *e == 1 {
                name.to_string()
            } else {
                format!("{name}^{e}")
            }
        })
        .collect();
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

/// Laurent polynomial in `x`, `y`, `exp(y)` and `e^{-t}` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CurvePoly {
    terms: BTreeMap<CurveMono, Rat>,
}

impl CurvePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, CurveMono)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (c, m) in it {
            p.add_term(rat(c), m);
        }
        p
    }

    pub fn add_term(&mut self, c: Rat, m: CurveMono) {
        let slot = self.terms.entry(m).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CurveMono, &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn neg(&self) -> CurvePoly {
        CurvePoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    /// `x -> -x`.
    pub fn negate_x(&self) -> CurvePoly {
        CurvePoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, if m.x % 2 == 0 { c.clone() } else { -c }))
                .collect(),
        }
    }

    /// Multiplies every term by the monomial `m`.
    pub fn mul_mono(&self, m: CurveMono) -> CurvePoly {
        CurvePoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for CurvePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rat::zero();
            let abs = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m == &CurveMono::ONE {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// The classical mirror curve of `case`.
///
/// Conifold: `1 - y + x y^{a+1} - e^{-t} x y^a`, with the `x y^{a+1}` term
/// read so that `x -> -x, a -> -a-1` maps it onto the framed mirror curve.
pub fn classical_curve(case: CurveCase) -> CurvePoly {
    let m = |x, y, exp_y, et| CurveMono { x, y, exp_y, et };
    match case {
        CurveCase::Lambert => CurvePoly::from_terms([(1, m(0, 1, 0, 0)), (-1, m(1, 0, 1, 0))]),
        CurveCase::C3 { framing: a } => CurvePoly::from_terms([
            (1, CurveMono::ONE),
            (-1, m(0, 1, 0, 0)),
            (-1, m(1, -a, 0, 0)),
        ]),
        CurveCase::Conifold { framing: a } => CurvePoly::from_terms([
            (1, CurveMono::ONE),
            (-1, m(0, 1, 0, 0)),
            (1, m(1, a + 1, 0, 0)),
            (-1, m(1, a, 0, 1)),
        ]),
    }
}

/// `y + x y^{-a} - 1 - e^{-t} x y^{-a-1}`.
pub fn conifold_mirror_curve(framing: i64) -> CurvePoly {
    let a = framing;
    let m = |x, y, et| CurveMono { x, y, exp_y: 0, et };
    CurvePoly::from_terms([
        (1, m(0, 1, 0)),
        (1, m(1, -a, 0)),
        (-1, CurveMono::ONE),
        (-1, m(1, -a - 1, 1)),
    ])
}

/// Replaces `y^` by the commuting variable `y` and sends `lam, E, u -> 1`,
/// `Qh^2 -> e^{-t}`.
///
/// Lambert: the Euler operator becomes `y` and `x^n -> E^{2kn} x^n` becomes
/// `exp(y)^k`. Other cases: `x^n -> s^{2kn} x^n` becomes `y^k`.
pub fn classical_limit(op: &QOp) -> Result<CurvePoly, RingError> {
    let mut out = CurvePoly::zero();
    for term in &op.terms {
        if !term.coeff.is_polynomial() {
            return Err(RingError::NoClassicalLimit(term.coeff.to_text()));
        }
        let ymono = match term.yact {
            YAction::LambdaEuler => CurveMono {
                y: 1,
                ..CurveMono::ONE
            },
            YAction::Dilation { step: 0, .. } => CurveMono::ONE,
            YAction::Dilation { step, .. } if step % 2 != 0 => {
                return Err(RingError::NoClassicalLimit(format!("dilation step {step}")))
            }
            YAction::Dilation { step, .. } => {
                let k = i64::from(step / 2);
                match op.case {
                    CurveCase::Lambert => CurveMono {
                        exp_y: k,
                        ..CurveMono::ONE
                    },
                    _ => CurveMono {
                        y: k,
                        ..CurveMono::ONE
                    },
                }
            }
        };
        let base = CurveMono {
            x: i64::from(term.xpow),
            ..ymono
        };
        for (mono, c) in term.coeff.num().terms() {
            let qh = mono.exp(Symbol::Qh);
            if qh % 2 != 0 {
                return Err(RingError::NoClassicalLimit(term.coeff.to_text()));
            }
            let et = CurveMono {
                et: i64::from(qh / 2),
                ..CurveMono::ONE
            };
            out.add_term(c.clone(), base.mul(et));
        }
    }
    Ok(out)
}
