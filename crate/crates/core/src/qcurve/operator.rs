use super::{CurveCase, YDirection};
use crate::error::RingError;
use crate::ring::{LPoly, Mono, RatFun, Symbol, XSeries};

/// Action of a power of `y^` on `x^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum YAction {
    /// `x^n -> symbol^{step * n} x^n`; `step = 0` is the identity.
    Dilation { symbol: Symbol, step: i32 },
    /// `x^n -> n lam x^n`
    LambdaEuler,
}

impl YAction {
    pub const IDENTITY: YAction = YAction::Dilation {
        symbol: Symbol::E,
        step: 0,
    };

    fn apply(&self, c: &RatFun, n: usize) -> RatFun {
        match *self {
            YAction::Dilation { step: 0, .. } => c.clone(),
            YAction::Dilation { symbol, step } => c.mul_mono(Mono::var(symbol, step * n as i32)),
            YAction::LambdaEuler => c
                .mul_mono(Mono::var(Symbol::Lam, 1))
                .scale(&crate::ring::rat(n as i64)),
        }
    }
}

/// `coeff * x^xpow * (y-action)`, normal ordered with `x^` on the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QOpTerm {
    pub coeff: RatFun,
    pub xpow: u32,
    pub yact: YAction,
}

impl QOpTerm {
    pub fn new(coeff: RatFun, xpow: u32, yact: YAction) -> Self {
        QOpTerm { coeff, xpow, yact }
    }
}

/// A quantum curve operator `A(x^, y^)` as a sum of normal-ordered terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QOp {
    pub terms: Vec<QOpTerm>,
    pub case: CurveCase,
    pub direction: YDirection,
}

fn mono(sym: Symbol, e: i32) -> RatFun {
    RatFun::from(LPoly::var(sym, e))
}

/// The quantum curve of `case`, with `y^` in the adopted direction.
pub fn curve_operator(case: CurveCase) -> QOp {
    curve_operator_with(case, YDirection::Forward)
}

pub fn curve_operator_with(case: CurveCase, direction: YDirection) -> QOp {
    let one = RatFun::one();
    let terms = match case {
        // y^ - x^ e^{y^},  y^ = lam x d/dx,  e^{y^}: x^n -> e^{n lam} x^n
        CurveCase::Lambert => vec![
            QOpTerm::new(one, 0, YAction::LambdaEuler),
            QOpTerm::new(
                -RatFun::one(),
                1,
                YAction::Dilation {
                    symbol: Symbol::E,
                    step: 2,
                },
            ),
        ],
        // 1 - y^ - e^{lam/2} x^ y^{-a},  y^: x^n -> e^{n lam} x^n
        CurveCase::C3 { framing: a } => {
            let y = |k: i64| YAction::Dilation {
                symbol: Symbol::E,
                step: 2 * k as i32,
            };
            vec![
                QOpTerm::new(one.clone(), 0, YAction::IDENTITY),
                QOpTerm::new(-one, 0, y(1)),
                QOpTerm::new(-mono(Symbol::E, 1), 1, y(-a)),
            ]
        }
        // 1 - y^ + q^{1/2} x^ y^{a+1} - q^{1/2} e^{-t} x^ y^a,  y^: x^n -> q^{+-n} x^n
        CurveCase::Conifold { framing: a } => {
            let d = direction.sign();
            let y = |k: i64| YAction::Dilation {
                symbol: Symbol::U,
                step: 2 * d * k as i32,
            };
            let u_qh2 = RatFun::from(LPoly::monomial(
                Mono::var(Symbol::U, 1) * Mono::var(Symbol::Qh, 2),
            ));
            vec![
                QOpTerm::new(one.clone(), 0, YAction::IDENTITY),
                QOpTerm::new(-one, 0, y(1)),
                QOpTerm::new(mono(Symbol::U, 1), 1, y(a + 1)),
                QOpTerm::new(-u_qh2, 1, y(a)),
            ]
        }
    };
    QOp {
        terms,
        case,
        direction,
    }
}

/// `op` applied to `z`, truncated at `x^order`.
///
/// Every term raises the `x`-degree by at most one, so the result through
/// `x^order` needs `z` only through `x^order`.
pub fn apply_qop(op: &QOp, z: &XSeries, order: usize) -> Result<XSeries, RingError> {
    if z.order() < order {
        return Err(RingError::OrderMismatch {
            left: z.order(),
            right: order,
        });
    }
    if let Some(t) = op.terms.iter().find(|t| t.xpow > 1) {
        return Err(RingError::UnsupportedXPower(t.xpow));
    }
    let mut out = vec![RatFun::zero(); order + 1];
    for term in &op.terms {
        let shift = term.xpow as usize;
        if shift > order {
            continue;
        }
        for n in 0..=order - shift {
            let c = z.coeff(n);
            if c.is_zero() {
                continue;
            }
            let acted = term.yact.apply(c, n).try_mul(&term.coeff)?;
            out[n + shift] = out[n + shift].try_add(&acted)?;
        }
    }
    Ok(XSeries::from_coeffs(order, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ratio;
    use proptest::prelude::*;

    fn single(coeff: RatFun, xpow: u32, yact: YAction) -> QOp {
        QOp {
            terms: vec![QOpTerm::new(coeff, xpow, yact)],
            case: CurveCase::Lambert,
            direction: YDirection::Forward,
        }
    }

    fn sample(order: usize, seed: &[i64]) -> XSeries {
        XSeries::from_coeffs(
            order,
            seed.iter().enumerate().map(|(i, &k)| {
                RatFun::from(LPoly::term(
                    ratio(k, 1 + i as i64),
                    Mono::var(Symbol::Qh, k as i32),
                ))
            }),
        )
    }

    #[test]
    fn identity_and_shift() {
        let z = sample(4, &[1, 2, -3, 4, 5]);
        let id = single(RatFun::one(), 0, YAction::IDENTITY);
        assert_eq!(apply_qop(&id, &z, 4).unwrap(), z);
        let x = single(RatFun::one(), 1, YAction::IDENTITY);
        assert_eq!(apply_qop(&x, &z, 4).unwrap(), z.shift_up());
    }

    #[test]
    fn dilation_multiplies_by_powers() {
        let z = sample(3, &[1, 1, 1, 1]);
        let y = single(
            RatFun::one(),
            0,
            YAction::Dilation {
                symbol: Symbol::U,
                step: 2,
            },
        );
        let out = apply_qop(&y, &z, 3).unwrap();
        for n in 0..=3 {
            assert_eq!(
                out.coeff(n),
                &z.coeff(n).mul_mono(Mono::var(Symbol::U, 2 * n as i32))
            );
        }
    }

    #[test]
    fn rejects_short_input_and_high_x_powers() {
        let z = sample(2, &[1, 1, 1]);
        let id = single(RatFun::one(), 0, YAction::IDENTITY);
        assert!(matches!(
            apply_qop(&id, &z, 3),
            Err(RingError::OrderMismatch { .. })
        ));
        let x2 = single(RatFun::one(), 2, YAction::IDENTITY);
        assert_eq!(apply_qop(&x2, &z, 2), Err(RingError::UnsupportedXPower(2)));
    }

    #[test]
    fn lambert_term_list() {
        let op = curve_operator(CurveCase::Lambert);
        assert_eq!(
            op.terms,
            vec![
                QOpTerm::new(RatFun::one(), 0, YAction::LambdaEuler),
                QOpTerm::new(
                    -RatFun::one(),
                    1,
                    YAction::Dilation {
                        symbol: Symbol::E,
                        step: 2
                    }
                ),
            ]
        );
    }

    #[test]
    fn c3_framing_zero_terms() {
        let op = curve_operator(CurveCase::C3 { framing: 0 });
        assert_eq!(op.terms.len(), 3);
        assert_eq!(
            op.terms[2].yact,
            YAction::Dilation {
                symbol: Symbol::E,
                step: 0
            }
        );
        assert_eq!(op.terms[2].coeff, -mono(Symbol::E, 1));
    }

    proptest! {
        #[test]
        fn q_commutation(seed in prop::collection::vec(-4i64..=4, 7), step in 1i32..=3) {
            // y^ x^ = s x^ y^ for y^: x^n -> s^n x^n
            let z = sample(6, &seed);
            let sym = Symbol::U;
            let y = single(RatFun::one(), 0, YAction::Dilation { symbol: sym, step });
            let x = single(RatFun::one(), 1, YAction::IDENTITY);
            let yx = apply_qop(&y, &apply_qop(&x, &z, 6).unwrap(), 6).unwrap();
            let xy = apply_qop(&x, &apply_qop(&y, &z, 6).unwrap(), 6).unwrap();
            let s = RatFun::from(LPoly::var(sym, step));
            prop_assert!(yx.sub(&xy.scale(&s).unwrap()).unwrap().is_zero());
        }
    }
}
