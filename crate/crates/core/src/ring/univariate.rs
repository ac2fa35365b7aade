//! Dense univariate polynomials over the rationals, used for denominator
//! arithmetic. Laurent inputs are shifted so the lowest exponent is zero;
//! monomial factors are units and never reach this layer.

use num_traits::{One, Zero};

use super::lpoly::{LPoly, Mono, Symbol};
use super::Rat;
use crate::error::RingError;

/// Coefficients from low to high degree, with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct UPoly(Vec<Rat>);

impl UPoly {
    pub fn new(mut c: Vec<Rat>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        UPoly(c)
    }

    pub fn one() -> Self {
        UPoly(vec![Rat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    fn lead(&self) -> &Rat {
        self.0.last().expect("nonzero polynomial")
    }

    pub fn monic(mut self) -> Self {
        if self.is_zero() {
            return self;
        }
        let l = self.lead().clone();
        if !l.is_one() {
            for c in &mut self.0 {
                *c /= &l;
            }
        }
        self
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.0.len() < d.0.len() {
            return (UPoly(Vec::new()), self.clone());
        }
        let dl = d.lead();
        let dn = d.degree();
        let mut r = self.0.clone();
        let mut q = vec![Rat::zero(); r.len() - dn];
        for i in (0..q.len()).rev() {
            let top = &r[i + dn];
            if top.is_zero() {
                continue;
            }
            let f = top / dl;
            for (j, dc) in d.0.iter().enumerate() {
                if !dc.is_zero() {
                    r[i + j] -= &f * dc;
                }
            }
            q[i] = f;
        }
        r.truncate(dn);
        (UPoly::new(q), UPoly::new(r))
    }

    /// Monic gcd by the Euclidean algorithm; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone().monic();
        let mut b = other.clone().monic();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.is_constant() {
                return UPoly::one();
            }
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly(Vec::new());
        }
        let mut out = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    /// Reads `p` as `sym^shift * q(sym)` with `q(0) != 0`.
    pub fn from_lpoly(p: &LPoly, sym: Symbol) -> Option<(i32, UPoly)> {
        if p.is_zero() {
            return Some((0, UPoly(Vec::new())));
        }
        if p.terms().any(|(m, _)| m.support().any(|s| s != sym)) {
            return None;
        }
        let lo = p.terms().map(|(m, _)| m.exp(sym)).min().unwrap_or(0);
        let hi = p.terms().map(|(m, _)| m.exp(sym)).max().unwrap_or(0);
        let mut c = vec![Rat::zero(); (hi - lo) as usize + 1];
        for (m, v) in p.terms() {
            c[(m.exp(sym) - lo) as usize] = v.clone();
        }
        Some((lo, UPoly::new(c)))
    }

    pub fn to_lpoly(&self, sym: Symbol, shift: i32) -> LPoly {
        LPoly::from_terms(
            self.0
                .iter()
                .enumerate()
                .map(|(i, c)| (c.clone(), Mono::var(sym, i as i32 + shift))),
        )
    }
}

/// The single symbol a polynomial involves, if any. Errors on two or more.
pub(crate) fn sole_symbol(p: &LPoly) -> Result<Option<Symbol>, (Symbol, Symbol)> {
    let syms = p.symbols();
    match syms.as_slice() {
        [] => Ok(None),
        [s] => Ok(Some(*s)),
        [a, b, ..] => Err((*a, *b)),
    }
}

/// Monic gcd of two univariate Laurent polynomials in a common symbol.
///
/// Monomial content is discarded (it is a unit), so the result has lowest
/// exponent zero. `gcd(a, 0)` is `a` normalized.
pub fn gcd_univariate(a: &LPoly, b: &LPoly) -> Result<LPoly, RingError> {
    let sa = sole_symbol(a).map_err(|_| RingError::MultivariateInput)?;
    let sb = sole_symbol(b).map_err(|_| RingError::MultivariateInput)?;
    let sym = match (sa, sb) {
        (Some(x), Some(y)) if x != y => return Err(RingError::MultivariateInput),
        (Some(x), _) | (None, Some(x)) => x,
        (None, None) => Symbol::U,
    };
    let (_, pa) = UPoly::from_lpoly(a, sym).ok_or(RingError::MultivariateInput)?;
    let (_, pb) = UPoly::from_lpoly(b, sym).ok_or(RingError::MultivariateInput)?;
    Ok(pa.gcd(&pb).to_lpoly(sym, 0))
}
