use num_bigint::BigInt;

use super::CurveCase;
use crate::combinatorics::{class_average, factorial, partitions_of};
use crate::ring::{LPoly, Mono, Rat, RatFun, Symbol, XSeries};
use crate::symfun::{quantum_dim, schur_in_p, SpecKind};

fn var(sym: Symbol, exp: i64) -> Mono {
    Mono::var(sym, exp as i32)
}

/// `prod_{j=1}^n (1 - s^{2j})`
fn one_minus_even_powers(sym: Symbol, n: i64) -> LPoly {
    (1..=n).fold(LPoly::one(), |acc, j| {
        &acc * &(&LPoly::one() - &LPoly::var(sym, 2 * j as i32))
    })
}

/// Coefficient of `x^n` in the closed form of `Z`.
pub fn z_closed_coefficient(case: CurveCase, n: usize) -> RatFun {
    let n = n as i64;
    match case {
        // e^{n(n-1) lam/2} / (n! lam^n)
        CurveCase::Lambert => {
            let inv_fact = Rat::new(1.into(), BigInt::from(factorial(n as usize)));
            RatFun::from(LPoly::term(
                inv_fact,
                var(Symbol::E, n * (n - 1)) * var(Symbol::Lam, -n),
            ))
        }
        // e^{-a n(n-1) lam/2 + n lam/2} / prod (1 - e^{j lam})
        CurveCase::C3 { framing: a } => RatFun::new(
            LPoly::monomial(var(Symbol::E, -a * n * (n - 1) + n)),
            one_minus_even_powers(Symbol::E, n),
        )
        .expect("univariate in E"),
        // prod (e^{-t} - q^{j-1}) / (1 - q^j) * q^{a n(n-1)/2 + n/2}
        CurveCase::Conifold { framing: a } => {
            let mut num = LPoly::monomial(var(Symbol::U, a * n * (n - 1) + n));
            for j in 1..=n {
                num = &num
                    * &(&LPoly::var(Symbol::Qh, 2) - &LPoly::var(Symbol::U, 2 * (j - 1) as i32));
            }
            RatFun::new(num, one_minus_even_powers(Symbol::U, n)).expect("univariate in u")
        }
    }
}

/// The closed form of `Z` through `x^order`.
pub fn z_closed(case: CurveCase, order: usize) -> XSeries {
    XSeries::from_coeffs(order, (0..=order).map(|n| z_closed_coefficient(case, n)))
}

/// Weight of `nu` in the character-sum expression for `Z`.
fn character_weight(case: CurveCase, nu: &crate::Partition) -> RatFun {
    let n = nu.size() as i64;
    let kappa = nu.kappa();
    match case {
        CurveCase::Lambert => {
            let c = Rat::new(BigInt::from(nu.dim()), BigInt::from(factorial(n as usize)));
            RatFun::from(LPoly::term(c, var(Symbol::E, kappa) * var(Symbol::Lam, -n)))
        }
        // q^{a kappa/2} s_nu(q^rho), then lam -> sqrt(-1) lam, which sends
        // q^{1/2} = e^{sqrt(-1) lam/2} to e^{-lam/2}, i.e. u -> E^{-1}.
        CurveCase::C3 { framing: a } => {
            let s = schur_in_p(nu, nu.size())
                .expect("within cap")
                .specialize_value(SpecKind::QRho)
                .expect("univariate in u");
            s.mul_mono(var(Symbol::U, a * kappa))
                .substitute_mono(Symbol::U, Mono::var(Symbol::E, -1))
                .expect("univariate in E")
        }
        // e^{-|nu| t/2} q^{a kappa/2} dim_q R_nu
        CurveCase::Conifold { framing: a } => {
            quantum_dim(nu).mul_mono(var(Symbol::Qh, n) * var(Symbol::U, a * kappa))
        }
    }
}

/// `Z` rebuilt from characters: the coefficient of `x^n` is
/// `sum_{nu |- n} w(nu) * sum_{mu |- n} chi_nu(mu) / z_mu`, with both sums
/// evaluated in full.
pub fn z_from_characters(case: CurveCase, order: usize) -> XSeries {
    let coeffs = (0..=order).map(|n| {
        partitions_of(n).iter().fold(RatFun::zero(), |acc, nu| {
            let w = character_weight(case, nu);
            &acc + &w.scale(&class_average(nu))
        })
    });
    XSeries::from_coeffs(order, coeffs)
}

/// Conifold `x^n` coefficient written in inverse powers of `q`:
/// `prod (1 - e^{-t} q^{-(j-1)}) / (1 - q^{-j}) * q^{a n(n-1)/2 - n/2}`.
pub fn conifold_coefficient_inverse_form(framing: i64, n: usize) -> RatFun {
    let n = n as i64;
    let mut num = LPoly::monomial(var(Symbol::U, framing * n * (n - 1) - n));
    let mut den = LPoly::one();
    for j in 1..=n {
        let shifted = LPoly::monomial(var(Symbol::Qh, 2) * var(Symbol::U, -2 * (j - 1)));
        num = &num * &(&LPoly::one() - &shifted);
        den = &den * &(&LPoly::one() - &LPoly::var(Symbol::U, -2 * j as i32));
    }
    RatFun::new(num, den).expect("univariate in u")
}

/// The same coefficient with the inverse powers cleared; equal to
/// [`z_closed_coefficient`].
pub fn conifold_coefficient_direct_form(framing: i64, n: usize) -> RatFun {
    z_closed_coefficient(CurveCase::Conifold { framing }, n)
}
