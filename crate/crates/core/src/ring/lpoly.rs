use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Rat;

/// The closed set of formal symbols.
///
/// Declaration order is the ASCII order of the printed names, which is the
/// order used for monomial comparison and text output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    /// `e^{lambda/2}`
    E,
    /// `e^{-t/2}`
    Qh,
    /// `lambda`
    Lam,
    /// `q^{1/2}`
    U,
}

impl Symbol {
    pub const ALL: [Symbol; 4] = [Symbol::E, Symbol::Qh, Symbol::Lam, Symbol::U];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::E => "E",
            Symbol::Qh => "Qh",
            Symbol::Lam => "lam",
            Symbol::U => "u",
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A Laurent monomial `E^a Qh^b lam^c u^d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Mono([i32; 4]);

impl Mono {
    pub const ONE: Mono = Mono([0; 4]);

    pub fn new(exps: [i32; 4]) -> Self {
        Mono(exps)
    }

    pub fn var(sym: Symbol, exp: i32) -> Self {
        let mut e = [0; 4];
        e[sym.index()] = exp;
        Mono(e)
    }

    pub fn exp(&self, sym: Symbol) -> i32 {
        self.0[sym.index()]
    }

    pub fn exps(&self) -> [i32; 4] {
        self.0
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn with_exp(mut self, sym: Symbol, exp: i32) -> Self {
        self.0[sym.index()] = exp;
        self
    }

    pub fn inverse(&self) -> Self {
        Mono(self.0.map(|e| -e))
    }

    pub fn pow(&self, k: i32) -> Self {
        Mono(self.0.map(|e| e * k))
    }

    /// Symbols carrying a nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = Symbol> + '_ {
        Symbol::ALL.into_iter().filter(|s| self.exp(*s) != 0)
    }
}

impl Mul for Mono {
    type Output = Mono;
    // exponents add
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Mono) -> Mono {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(rhs.0) {
            *a += b;
        }
        Mono(e)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in self.support() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match self.exp(s) {
                1 => write!(f, "{s}")?,
                e => write!(f, "{s}^{e}")?,
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Multivariate Laurent polynomial over the rationals in the fixed symbol set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LPoly {
    terms: BTreeMap<Mono, Rat>,
}

impl LPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::term(c, Mono::ONE)
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(Rat::from_integer(n.into()))
    }

    pub fn term(c: Rat, m: Mono) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LPoly { terms }
    }

    pub fn monomial(m: Mono) -> Self {
        Self::term(Rat::one(), m)
    }

    /// `sym^exp`
    pub fn var(sym: Symbol, exp: i32) -> Self {
        Self::monomial(Mono::var(sym, exp))
    }

    /// Builds from `(coefficient, monomial)` pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Rat, Mono)>>(it: I) -> Self {
        let mut p = LPoly::zero();
        for (c, m) in it {
            p.add_term(c, m);
        }
        p
    }

    fn add_term(&mut self, c: Rat, m: Mono) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// True when the polynomial is a rational constant (possibly zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Mono::is_one)
    }

    /// A single term `c * m`.
    pub fn as_term(&self) -> Option<(&Rat, &Mono)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, m))
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Mono::ONE)
    }

    /// Symbols occurring with a nonzero exponent in some term.
    pub fn symbols(&self) -> Vec<Symbol> {
        Symbol::ALL
            .into_iter()
            .filter(|&s| self.terms.keys().any(|m| m.exp(s) != 0))
            .collect()
    }

    /// Componentwise minimum exponent over all terms (the monomial content).
    pub fn min_mono(&self) -> Mono {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Mono::ONE;
        };
        let mut e = first.exps();
        for m in it {
            for (a, b) in e.iter_mut().zip(m.exps()) {
                *a = (*a).min(b);
            }
        }
        Mono::new(e)
    }

    pub fn max_exp(&self, sym: Symbol) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(sym)).max()
    }

    pub fn mul_mono(&self, m: Mono) -> Self {
        LPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k * m, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return LPoly::zero();
        }
        LPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = LPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Drops every term whose exponent in `sym` exceeds `max`.
    pub fn truncate_degree(&self, sym: Symbol, max: i32) -> Self {
        LPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(sym) <= max)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Coefficient of `sym^k`, as a polynomial in the remaining symbols.
    pub fn coeff_of_power(&self, sym: Symbol, k: i32) -> Self {
        LPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(sym) == k)
                .map(|(m, c)| (m.with_exp(sym, 0), c.clone()))
                .collect(),
        }
    }

    /// Formal partial derivative in `sym`.
    pub fn derivative(&self, sym: Symbol) -> Self {
        LPoly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.exp(sym);
            (e != 0).then(|| (c * Rat::from_integer(e.into()), m.with_exp(sym, e - 1)))
        }))
    }

    /// Substitutes `sym -> image` where `image` is a monomial.
    pub fn substitute_mono(&self, sym: Symbol, image: Mono) -> Self {
        LPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let e = m.exp(sym);
            (c.clone(), m.with_exp(sym, 0) * image.pow(e))
        }))
    }

    /// Highest-order coefficient with respect to the monomial order.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn map_monos<F: Fn(Mono) -> Mono>(&self, f: F) -> Self {
        LPoly::from_terms(self.terms.iter().map(|(m, c)| (c.clone(), f(*m))))
    }
}

impl From<Rat> for LPoly {
    fn from(c: Rat) -> Self {
        LPoly::constant(c)
    }
}

impl From<Mono> for LPoly {
    fn from(m: Mono) -> Self {
        LPoly::monomial(m)
    }
}

impl Add for &LPoly {
    type Output = LPoly;
    fn add(self, rhs: &LPoly) -> LPoly {
        let (big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(c.clone(), *m);
        }
        out
    }
}

impl Sub for &LPoly {
    type Output = LPoly;
    fn sub(self, rhs: &LPoly) -> LPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(-c, *m);
        }
        out
    }
}

impl Mul for &LPoly {
    type Output = LPoly;
    fn mul(self, rhs: &LPoly) -> LPoly {
        if self.is_zero() || rhs.is_zero() {
            return LPoly::zero();
        }
        let mut out = LPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ca * cb, *ma * *mb);
            }
        }
        out
    }
}

impl Neg for &LPoly {
    type Output = LPoly;
    fn neg(self) -> LPoly {
        LPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for LPoly {
            type Output = LPoly;
            fn $f(self, rhs: LPoly) -> LPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&LPoly> for LPoly {
            type Output = LPoly;
            fn $f(self, rhs: &LPoly) -> LPoly {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LPoly {
    type Output = LPoly;
    fn neg(self) -> LPoly {
        -&self
    }
}

/// Text form of one term, e.g. `(-1/2)*E^2*lam^-1`.
pub(crate) fn format_term(c: &Rat, m: &Mono) -> String {
    match (c.is_one(), m.is_one()) {
        (_, true) if c.is_integer() && !c.is_negative() => c.to_string(),
        (_, true) => format!("({c})"),
        (true, false) => m.to_string(),
        (false, false) => format!("({c})*{m}"),
    }
}

impl LPoly {
    /// Terms in canonical text form, ascending total degree then lexicographic.
    pub fn term_strings(&self) -> Vec<String> {
        self.terms.iter().map(|(m, c)| format_term(c, m)).collect()
    }
}

impl fmt::Display for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        f.write_str(&self.term_strings().join(" + "))
    }
}
