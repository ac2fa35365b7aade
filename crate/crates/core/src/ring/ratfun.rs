use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::lpoly::{LPoly, Mono, Symbol};
use super::univariate::{sole_symbol, UPoly};
use super::Rat;
use crate::error::RingError;

/// A reduced quotient `num / den` with a univariate denominator.
///
/// Canonical form: `den` is either `1` or a monic polynomial in a single
/// symbol with nonzero constant term, and `gcd(num, den) = 1`. Monomial
/// factors of the denominator are units and live in the numerator. Two
/// values are equal iff their canonical forms are identical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: LPoly,
    den: LPoly,
}

/// Numerator split by the monomial in the symbols other than `sym`.
struct Groups {
    sym: Symbol,
    parts: Vec<(Mono, i32, UPoly)>,
}

impl Groups {
    fn split(p: &LPoly, sym: Symbol) -> Self {
        let mut by_rest: BTreeMap<Mono, Vec<(Rat, Mono)>> = BTreeMap::new();
        for (m, c) in p.terms() {
            by_rest
                .entry(m.with_exp(sym, 0))
                .or_default()
                .push((c.clone(), Mono::var(sym, m.exp(sym))));
        }
        let parts = by_rest
            .into_iter()
            .map(|(rest, ts)| {
                let (shift, up) = UPoly::from_lpoly(&LPoly::from_terms(ts), sym)
                    .expect("univariate by construction");
                (rest, shift, up)
            })
            .collect();
        Groups { sym, parts }
    }

    fn gcd_with(&self, d: &UPoly) -> UPoly {
        let mut g = d.clone();
        for (_, _, p) in &self.parts {
            if g.is_constant() {
                break;
            }
            g = g.gcd(p);
        }
        g
    }

    fn divide(&mut self, g: &UPoly) {
        for (_, _, p) in &mut self.parts {
            let (q, r) = p.div_rem(g);
            debug_assert!(r.is_zero());
            *p = q;
        }
    }

    fn join(&self) -> LPoly {
        let mut out = LPoly::zero();
        for (rest, shift, p) in &self.parts {
            out = out + p.to_lpoly(self.sym, *shift).mul_mono(*rest);
        }
        out
    }
}

impl RatFun {
    pub fn zero() -> Self {
        RatFun::from(LPoly::zero())
    }

    pub fn one() -> Self {
        RatFun::from(LPoly::one())
    }

    pub fn integer(n: i64) -> Self {
        RatFun::from(LPoly::integer(n))
    }

    pub fn constant(c: Rat) -> Self {
        RatFun::from(LPoly::constant(c))
    }

    /// Builds the reduced, sign-normalized representative of `num / den`.
    pub fn new(num: LPoly, den: LPoly) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFun::zero());
        }
        let content = den.min_mono().inverse();
        let den = den.mul_mono(content);
        let num = num.mul_mono(content);
        let sym = match sole_symbol(&den) {
            Ok(Some(s)) => s,
            Ok(None) => {
                let c = den.constant_term();
                return Ok(RatFun {
                    num: num.scale(&c.recip()),
                    den: LPoly::one(),
                });
            }
            Err((a, b)) => return Err(RingError::MultivariateDenominator(a, b)),
        };
        let (_, d) = UPoly::from_lpoly(&den, sym).expect("univariate");
        Ok(Self::reduce(num, sym, d))
    }

    fn reduce(num: LPoly, sym: Symbol, d: UPoly) -> Self {
        let mut groups = Groups::split(&num, sym);
        let g = groups.gcd_with(&d);
        let (num, d) = if g.is_constant() {
            (num, d)
        } else {
            groups.divide(&g);
            (groups.join(), d.div_rem(&g).0)
        };
        let den = d.to_lpoly(sym, 0);
        let lead = den
            .leading()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::one);
        if den.is_constant() || !lead.is_one() {
            let inv = lead.recip();
            let den = den.scale(&inv);
            RatFun {
                num: num.scale(&inv),
                den,
            }
        } else {
            RatFun { num, den }
        }
    }

    pub fn num(&self) -> &LPoly {
        &self.num
    }

    pub fn den(&self) -> &LPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The symbol of the denominator, if it is not `1`.
    pub fn den_symbol(&self) -> Option<Symbol> {
        self.den.symbols().first().copied()
    }

    /// Decides `a/b == c/d` via `a*d == b*c` without relying on canonical form.
    pub fn cross_eq(&self, other: &RatFun) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    fn common_symbol(&self, other: &RatFun) -> Result<Option<Symbol>, RingError> {
        match (self.den_symbol(), other.den_symbol()) {
            (Some(a), Some(b)) if a != b => Err(RingError::MultivariateDenominator(a, b)),
            (Some(a), _) | (None, Some(a)) => Ok(Some(a)),
            (None, None) => Ok(None),
        }
    }

    pub fn try_add(&self, other: &RatFun) -> Result<RatFun, RingError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let Some(sym) = self.common_symbol(other)? else {
            return Ok(RatFun::from(&self.num + &other.num));
        };
        if self.den == other.den {
            let (_, d) = UPoly::from_lpoly(&self.den, sym).expect("univariate");
            return Ok(Self::reduce(&self.num + &other.num, sym, d));
        }
        let (_, d1) = UPoly::from_lpoly(&self.den, sym).expect("univariate");
        let (_, d2) = UPoly::from_lpoly(&other.den, sym).expect("univariate");
        let g = d1.gcd(&d2);
        let c1 = d2.div_rem(&g).0;
        let c2 = d1.div_rem(&g).0;
        let num = &self.num * &c1.to_lpoly(sym, 0) + &other.num * &c2.to_lpoly(sym, 0);
        Ok(Self::reduce(num, sym, d1.mul(&c1)))
    }

    pub fn try_sub(&self, other: &RatFun) -> Result<RatFun, RingError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &RatFun) -> Result<RatFun, RingError> {
        if self.is_zero() || other.is_zero() {
            return Ok(RatFun::zero());
        }
        let Some(sym) = self.common_symbol(other)? else {
            return Ok(RatFun::from(&self.num * &other.num));
        };
        // Cross-cancel; inputs are already reduced, so the product is too.
        let (n1, d2) = Self::cancel(&self.num, &other.den, sym);
        let (n2, d1) = Self::cancel(&other.num, &self.den, sym);
        let den = d1.mul(&d2);
        Ok(Self::reduce_trivial(&n1 * &n2, sym, den))
    }

    fn cancel(num: &LPoly, den: &LPoly, sym: Symbol) -> (LPoly, UPoly) {
        let (_, d) = UPoly::from_lpoly(den, sym).expect("univariate");
        if d.is_constant() {
            return (num.clone(), d);
        }
        let mut groups = Groups::split(num, sym);
        let g = groups.gcd_with(&d);
        if g.is_constant() {
            (num.clone(), d)
        } else {
            groups.divide(&g);
            (groups.join(), d.div_rem(&g).0)
        }
    }

    /// Wraps an already coprime pair, only normalizing the leading coefficient.
    fn reduce_trivial(num: LPoly, sym: Symbol, d: UPoly) -> Self {
        let den = d.to_lpoly(sym, 0);
        let lead = den
            .leading()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::one);
        if lead.is_one() {
            RatFun { num, den }
        } else {
            let inv = lead.recip();
            RatFun {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> RatFun {
        RatFun {
            num: self.num.scale(c),
            den: if c.is_zero() {
                LPoly::one()
            } else {
                self.den.clone()
            },
        }
    }

    pub fn mul_mono(&self, m: Mono) -> RatFun {
        RatFun {
            num: self.num.mul_mono(m),
            den: self.den.clone(),
        }
    }

    pub fn try_mul_poly(&self, p: &LPoly) -> Result<RatFun, RingError> {
        self.try_mul(&RatFun::from(p.clone()))
    }

    pub fn try_pow(&self, k: u32) -> Result<RatFun, RingError> {
        let mut acc = RatFun::one();
        for _ in 0..k {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// Multiplicative inverse. The numerator must itself be a valid
    /// (univariate) denominator.
    pub fn try_recip(&self) -> Result<RatFun, RingError> {
        RatFun::new(self.den.clone(), self.num.clone())
    }

    /// Substitutes `sym -> image` in numerator and denominator.
    pub fn substitute_mono(&self, sym: Symbol, image: Mono) -> Result<RatFun, RingError> {
        RatFun::new(
            self.num.substitute_mono(sym, image),
            self.den.substitute_mono(sym, image),
        )
    }

    /// Canonical text form: `num` or `(num)/(den)`.
    pub fn to_text(&self) -> String {
        if self.den.is_one() {
            self.num.to_string()
        } else {
            format!("({})/({})", self.num, self.den)
        }
    }
}

impl From<LPoly> for RatFun {
    fn from(num: LPoly) -> Self {
        RatFun {
            num,
            den: LPoly::one(),
        }
    }
}

impl From<Rat> for RatFun {
    fn from(c: Rat) -> Self {
        RatFun::constant(c)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Serialize for RatFun {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RatFun", 2)?;
        st.serialize_field("num", &self.num.term_strings())?;
        st.serialize_field("den", &self.den.term_strings())?;
        st.end()
    }
}

// Operator sugar. These panic on a mixed-symbol denominator, which only
// happens when a caller combines values from different curve cases.
impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        self.try_add(rhs).expect("RatFun addition")
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self.try_sub(rhs).expect("RatFun subtraction")
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        self.try_mul(rhs).expect("RatFun multiplication")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl Zero for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, rhs: RatFun) -> RatFun {
        &self + &rhs
    }
}

impl One for RatFun {
    fn one() -> Self {
        RatFun::one()
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, rhs: RatFun) -> RatFun {
        &self * &rhs
    }
}
