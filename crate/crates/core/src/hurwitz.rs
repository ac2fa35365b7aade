//! Hurwitz numbers from the Burnside character formula.
//!
//! The generating series
//! `sum_nu dim R_nu / |nu|! * e^{kappa_nu lam / 2} * s_nu`
//! is built with `e^{kappa lam/2}` expanded as a polynomial in `lam`, and its
//! logarithm read off as `lam^b / b! * H_{g,mu} * p_mu` with
//! `b = 2g - 2 + l(mu) + |mu|`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::combinatorics::{factorial, partitions_up_to, Partition};
use crate::error::AlgebraError;
use crate::ring::{LPoly, Mono, Rat, RatFun, Symbol};
use crate::symfun::{schur_in_p, SymP};

/// The Burnside side of the generating function, with coefficients that
/// are polynomials in `lam` of degree at most `lambda_order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnsideSeries {
    pub sym: SymP,
    pub lambda_order: usize,
}

/// `sum_{k <= order} (c lam)^k / k!`
fn exp_taylor(c: &Rat, order: usize) -> LPoly {
    let mut term = Rat::one();
    let mut out = LPoly::zero();
    for k in 0..=order {
        if k > 0 {
            term = term * c / Rat::from_integer(k.into());
        }
        out = out + LPoly::term(term.clone(), Mono::var(Symbol::Lam, k as i32));
        if c.is_zero() {
            break;
        }
    }
    out
}

fn truncate_lambda(c: &RatFun, order: usize) -> RatFun {
    debug_assert!(c.is_polynomial());
    RatFun::from(c.num().truncate_degree(Symbol::Lam, order as i32))
}

/// Right-hand side of the Burnside formula through `|nu| <= degree_cap`.
pub fn burnside_rhs(degree_cap: usize, lambda_order: usize) -> BurnsideSeries {
    let mut sym = SymP::zero(degree_cap);
    for nu in partitions_up_to(degree_cap) {
        let weight = Rat::new(BigInt::from(nu.dim()), BigInt::from(factorial(nu.size())));
        let half_kappa = Rat::new(nu.kappa().into(), 2.into());
        let coeff = RatFun::from(exp_taylor(&half_kappa, lambda_order).scale(&weight));
        let s = schur_in_p(&nu, degree_cap).expect("within cap");
        sym = sym.add(&s.scale(&coeff));
    }
    BurnsideSeries { sym, lambda_order }
}

/// Exact Hurwitz numbers `H_{g,mu}` for `g <= genus_cap`, `1 <= |mu| <= degree_cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HurwitzTable {
    entries: BTreeMap<(usize, Partition), Rat>,
    degree_cap: usize,
    genus_cap: usize,
}

/// One `(g, mu, H)` row with `H` as an exact `"p/q"` string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct HurwitzRow {
    pub genus: usize,
    pub partition: String,
    pub value: String,
}

impl HurwitzTable {
    pub fn get(&self, genus: usize, mu: &Partition) -> Option<&Rat> {
        self.entries.get(&(genus, mu.clone()))
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn genus_cap(&self) -> usize {
        self.genus_cap
    }

    /// Entries ordered by genus, then partition.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &Partition, &Rat)> {
        self.entries.iter().map(|((g, mu), h)| (*g, mu, h))
    }

    pub fn rows(&self) -> Vec<HurwitzRow> {
        self.entries()
            .map(|(genus, mu, h)| HurwitzRow {
                genus,
                partition: mu.to_string(),
                value: h.to_string(),
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// `lam`-order needed so every `(g <= genus_cap, |mu| <= degree_cap)` appears.
pub fn required_lambda_order(degree_cap: usize, genus_cap: usize) -> usize {
    (2 * genus_cap + 2 * degree_cap).saturating_sub(2)
}

/// Logarithm of the Burnside series, truncated in `lam`.
pub fn burnside_log(degree_cap: usize, lambda_order: usize) -> SymP {
    let rhs = burnside_rhs(degree_cap, lambda_order);
    rhs.sym
        .graded_log_with(|c| truncate_lambda(&c, lambda_order))
        .expect("constant term is 1")
}

pub fn hurwitz_numbers(degree_cap: usize, genus_cap: usize) -> HurwitzTable {
    let order = required_lambda_order(degree_cap, genus_cap);
    let log = burnside_log(degree_cap, order);
    let mut entries = BTreeMap::new();
    for mu in partitions_up_to(degree_cap).into_iter().skip(1) {
        let c = log.coeff(&mu);
        debug_assert!(c.is_polynomial());
        for g in 0..=genus_cap {
            let b = 2 * g as i64 - 2 + (mu.len() + mu.size()) as i64;
            if b < 0 {
                continue;
            }
            let coeff = c.num().coeff(&Mono::var(Symbol::Lam, b as i32));
            let h = coeff * Rat::from_integer(BigInt::from(factorial(b as usize)));
            entries.insert((g, mu.clone()), h);
        }
    }
    HurwitzTable {
        entries,
        degree_cap,
        genus_cap,
    }
}

/// Genus-0 closed form
/// `H_{0,mu} = 1/|Aut mu| * prod mu_i^{mu_i} / mu_i! * |mu|^{l(mu) - 3}`,
/// valid for `l(mu) >= 3`.
pub fn elsv_genus0(mu: &Partition) -> Result<Rat, AlgebraError> {
    let l = mu.len();
    if l < 3 {
        return Err(AlgebraError::LengthTooSmall(l));
    }
    let mut h = Rat::new(BigInt::one(), BigInt::from(mu.aut()));
    for &m in mu.parts() {
        h *= Rat::new(BigInt::from(m).pow(m as u32), BigInt::from(factorial(m)));
    }
    h *= Rat::from_integer(BigInt::from(mu.size()).pow((l - 3) as u32));
    Ok(h)
}

/// [`elsv_genus0`] times `b!`, `b = l(mu) + |mu| - 2`: the genus-0 count in
/// the normalization of [`hurwitz_numbers`]. The bare closed form equals the
/// raw coefficient of `lam^b p_mu` in the Burnside logarithm.
pub fn elsv_genus0_count(mu: &Partition) -> Result<Rat, AlgebraError> {
    let b = (mu.len() + mu.size()).saturating_sub(2);
    Ok(elsv_genus0(mu)? * Rat::from_integer(BigInt::from(factorial(b))))
}

/// First disagreement between `d/dlam H` and `K H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutJoinMismatch {
    pub partition: String,
    pub lambda_power: usize,
    pub derivative: String,
    pub cut_and_join: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutJoinReport {
    pub degree_cap: usize,
    pub lambda_order: usize,
    pub coefficients_checked: usize,
    pub mismatch: Option<CutJoinMismatch>,
}

impl CutJoinReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Checks the cut-and-join equation on the Burnside series for
/// `|mu| <= degree_cap` through `lam^{lambda_order - 1}`.
pub fn cutjoin_verify(degree_cap: usize, lambda_order: usize) -> CutJoinReport {
    cutjoin_check(&burnside_rhs(degree_cap, lambda_order))
}

/// The cut-and-join comparison on an arbitrary (possibly perturbed) series.
pub fn cutjoin_check(series: &BurnsideSeries) -> CutJoinReport {
    let top = series.lambda_order.checked_sub(1);
    let derivative = series
        .sym
        .map_coeffs(|c| RatFun::from(c.num().derivative(Symbol::Lam)));
    let joined = series.sym.cut_and_join();
    let mut keys: Vec<&Partition> = derivative
        .terms()
        .map(|(mu, _)| mu)
        .chain(joined.terms().map(|(mu, _)| mu))
        .collect();
    keys.sort();
    keys.dedup();
    let mut checked = 0;
    let mut mismatch = None;
    if let Some(top) = top {
        'outer: for mu in keys {
            let lhs = derivative.coeff(mu);
            let rhs = joined.coeff(mu);
            for k in 0..=top {
                let m = Mono::var(Symbol::Lam, k as i32);
                let (a, b) = (lhs.num().coeff(&m), rhs.num().coeff(&m));
                checked += 1;
                if a != b {
                    mismatch = Some(CutJoinMismatch {
                        partition: mu.to_string(),
                        lambda_power: k,
                        derivative: a.to_string(),
                        cut_and_join: b.to_string(),
                    });
                    break 'outer;
                }
            }
        }
    }
    CutJoinReport {
        degree_cap: series.sym.cap(),
        lambda_order: series.lambda_order,
        coefficients_checked: checked,
        mismatch,
    }
}
