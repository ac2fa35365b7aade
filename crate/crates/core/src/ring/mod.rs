//! Exact coefficient ring tower.
//!
//! `Rat` (big rationals) underlies [`LPoly`], Laurent polynomials in the four
//! formal symbols `lam`, `E = e^{lam/2}`, `u = q^{1/2}` and `Qh = e^{-t/2}`.
//! Integral powers of these cover every half-integer exponent that appears.
//! [`RatFun`] adds univariate denominators and [`XSeries`] truncated series
//! in `x`.

mod lpoly;
mod ratfun;
mod series;
mod univariate;

pub use lpoly::{LPoly, Mono, Symbol};
pub use ratfun::RatFun;
pub use series::XSeries;
pub use univariate::gcd_univariate;

/// Arbitrary-precision rational, always stored in lowest terms.
pub type Rat = num_rational::BigRational;

/// `n` as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// `n / d` as a rational.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}
