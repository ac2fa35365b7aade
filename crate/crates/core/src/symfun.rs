//! Symmetric functions in the power-sum basis.
//!
//! A [`SymP`] is a finite combination of `p_mu = p_{mu_1} ... p_{mu_l}` with
//! [`RatFun`] coefficients, truncated above a degree cap (`deg p_mu = |mu|`).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use crate::combinatorics::{mn_character, partitions_of, z_rat, Partition};
use crate::error::{AlgebraError, RingError};
use crate::ring::{LPoly, Mono, Rat, RatFun, Symbol, XSeries};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymP {
    cap: usize,
    terms: BTreeMap<Partition, RatFun>,
}

impl SymP {
    pub fn zero(cap: usize) -> Self {
        SymP {
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(cap: usize) -> Self {
        Self::monomial(Partition::empty(), RatFun::one(), cap)
    }

    /// `c * p_mu`, or zero when `|mu|` exceeds the cap.
    pub fn monomial(mu: Partition, c: RatFun, cap: usize) -> Self {
        let mut s = Self::zero(cap);
        s.add_term(mu, c);
        s
    }

    pub fn p(mu: Partition, cap: usize) -> Self {
        Self::monomial(mu, RatFun::one(), cap)
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, RatFun)>>(cap: usize, it: I) -> Self {
        let mut s = Self::zero(cap);
        for (mu, c) in it {
            s.add_term(mu, c);
        }
        s
    }

    pub fn add_term(&mut self, mu: Partition, c: RatFun) {
        if c.is_zero() || mu.size() > self.cap {
            return;
        }
        match self.terms.entry(mu) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms sorted by `(|mu|, reverse-lex mu)`.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFun)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mu: &Partition) -> RatFun {
        self.terms.get(mu).cloned().unwrap_or_else(RatFun::zero)
    }

    pub fn constant_term(&self) -> RatFun {
        self.coeff(&Partition::empty())
    }

    pub fn add(&self, other: &SymP) -> SymP {
        let mut out = SymP {
            cap: self.cap.min(other.cap),
            terms: BTreeMap::new(),
        };
        for (mu, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(mu.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> SymP {
        self.map_coeffs(|c| -c)
    }

    pub fn sub(&self, other: &SymP) -> SymP {
        self.add(&other.neg())
    }

    /// Product, truncated at the smaller cap.
    pub fn mul(&self, other: &SymP) -> SymP {
        let cap = self.cap.min(other.cap);
        let mut out = SymP::zero(cap);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a.size() + b.size() > cap {
                    continue;
                }
                out.add_term(a.union(b), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &RatFun) -> SymP {
        let mut out = SymP::zero(self.cap);
        for (mu, v) in &self.terms {
            out.add_term(mu.clone(), v * c);
        }
        out
    }

    pub fn scale_rat(&self, c: &Rat) -> SymP {
        self.map_coeffs(|v| v.scale(c))
    }

    /// Applies `f` to every coefficient, dropping those that become zero.
    pub fn map_coeffs<F: Fn(&RatFun) -> RatFun>(&self, f: F) -> SymP {
        SymP {
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .map(|(mu, c)| (mu.clone(), f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// The degree-`n` homogeneous component.
    pub fn degree_part(&self, n: usize) -> SymP {
        SymP {
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .filter(|(mu, _)| mu.size() == n)
                .map(|(mu, c)| (mu.clone(), c.clone()))
                .collect(),
        }
    }

    /// Formal logarithm of a series with constant term 1.
    pub fn graded_log(&self) -> Result<SymP, AlgebraError> {
        self.graded_log_with(|c| c)
    }

    /// Formal exponential of a series with constant term 0.
    pub fn graded_exp(&self) -> Result<SymP, AlgebraError> {
        self.graded_exp_with(|c| c)
    }

    /// [`graded_log`](Self::graded_log), applying `trunc` to every
    /// coefficient after each product. Used to truncate in a second grading.
    pub fn graded_log_with<F: Fn(RatFun) -> RatFun>(&self, trunc: F) -> Result<SymP, AlgebraError> {
        if !self.constant_term().is_one() {
            return Err(AlgebraError::BadConstantTerm { expected: "1" });
        }
        let g = self.sub(&SymP::one(self.cap));
        let mut power = g.clone();
        let mut out = g.clone();
        for k in 2..=self.cap {
            power = power.mul(&g).map_coeffs(|c| trunc(c.clone()));
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 0 { -1 } else { 1 };
            out = out.add(&power.scale_rat(&Rat::new(sign.into(), (k as i64).into())));
        }
        Ok(out.map_coeffs(|c| trunc(c.clone())))
    }

    pub fn graded_exp_with<F: Fn(RatFun) -> RatFun>(&self, trunc: F) -> Result<SymP, AlgebraError> {
        if !self.constant_term().is_zero() {
            return Err(AlgebraError::BadConstantTerm { expected: "0" });
        }
        let mut power = SymP::one(self.cap);
        let mut out = SymP::one(self.cap);
        let mut fact = Rat::one();
        for k in 1..=self.cap {
            power = power.mul(self).map_coeffs(|c| trunc(c.clone()));
            if power.is_zero() {
                break;
            }
            fact *= Rat::from_integer(k.into());
            out = out.add(&power.scale_rat(&fact.recip()));
        }
        Ok(out.map_coeffs(|c| trunc(c.clone())))
    }

    /// The cut-and-join operator
    /// `K = 1/2 sum_{i,j} (ij p_{i+j} d^2/dp_i dp_j + (i+j) p_i p_j d/dp_{i+j})`.
    pub fn cut_and_join(&self) -> SymP {
        let mut out = SymP::zero(self.cap);
        for (mu, c) in &self.terms {
            for (nu, w) in cut_and_join_monomial(mu) {
                out.add_term(nu, c.scale(&w));
            }
        }
        out
    }

    /// Image under a specialization, graded by `x^{|mu|}`.
    pub fn specialize(&self, kind: SpecKind) -> Result<XSeries, RingError> {
        let mut images: Vec<RatFun> = vec![RatFun::one()];
        for m in 1..=self.cap {
            images.push(kind.power_sum_image(m)?);
        }
        let mut coeffs = vec![RatFun::zero(); self.cap + 1];
        for (mu, c) in &self.terms {
            let mut v = c.clone();
            for &part in mu.parts() {
                v = v.try_mul(&images[part])?;
            }
            let slot = &mut coeffs[mu.size()];
            *slot = slot.try_add(&v)?;
        }
        Ok(XSeries::from_coeffs(self.cap, coeffs))
    }

    /// Image under a specialization with the grading forgotten.
    pub fn specialize_value(&self, kind: SpecKind) -> Result<RatFun, RingError> {
        self.specialize(kind)?
            .coeffs()
            .iter()
            .try_fold(RatFun::zero(), |acc, c| acc.try_add(c))
    }
}

/// Terms of `K p_mu`. Joins merge two parts `i, j` into `i + j`; cuts split a
/// part `k` into `i + j = k`.
fn cut_and_join_monomial(mu: &Partition) -> Vec<(Partition, Rat)> {
    let mut out = Vec::new();
    let mult = mu.multiplicities();
    // joins: unordered pairs of distinct parts i < j, then i = j
    for (a, &(i, mi)) in mult.iter().enumerate() {
        for &(j, mj) in &mult[a + 1..] {
            let nu = mu
                .without_part(i)
                .and_then(|r| r.without_part(j))
                .expect("parts present")
                .with_part(i + j);
            out.push((nu, Rat::from_integer((i * j * mi * mj).into())));
        }
        if mi >= 2 {
            let nu = mu
                .without_part(i)
                .and_then(|r| r.without_part(i))
                .expect("parts present")
                .with_part(2 * i);
            let w = Rat::new((i * i * mi * (mi - 1)).into(), 2.into());
            out.push((nu, w));
        }
    }
    // cuts: ordered pairs (i, j) with i + j = k contribute k/2 each
    for &(k, mk) in &mult {
        let rest = mu.without_part(k).expect("part present");
        for i in 1..k {
            let nu = rest.with_part(i).with_part(k - i);
            out.push((nu, Rat::new((k * mk).into(), 2.into())));
        }
    }
    out
}

impl fmt::Display for SymP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (mu, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let text = c.to_text();
            let simple = c.is_polynomial() && c.num().len() == 1;
            if simple {
                write!(f, "{text} * p{mu}")?;
            } else {
                write!(f, "({text}) * p{mu}")?;
            }
        }
        Ok(())
    }
}

/// Ring homomorphisms out of the power-sum algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecKind {
    /// One variable `x`: `p_m -> x^m`, with `x` carried by the grading.
    SingleVariable,
    /// Principal specialization `(q^{-1/2}, q^{-3/2}, ...)`: `p_m -> 1/[m]`.
    QRho,
    /// Conifold specialization: `p_m -> (e^{mt/2} - e^{-mt/2}) / [m]`.
    ConifoldY,
}

impl SpecKind {
    /// Image of `p_m` (the `x^m` marker excluded).
    pub fn power_sum_image(self, m: usize) -> Result<RatFun, RingError> {
        let m = m as i32;
        match self {
            SpecKind::SingleVariable => Ok(RatFun::one()),
            SpecKind::QRho => RatFun::new(LPoly::one(), quantum_integer(m)),
            SpecKind::ConifoldY => RatFun::new(
                &LPoly::var(Symbol::Qh, -m) - &LPoly::var(Symbol::Qh, m),
                quantum_integer(m),
            ),
        }
    }
}

/// `[n] = q^{n/2} - q^{-n/2} = u^n - u^{-n}`.
pub fn quantum_integer(n: i32) -> LPoly {
    &LPoly::var(Symbol::U, n) - &LPoly::var(Symbol::U, -n)
}

/// `[n]_{e^t} = e^{t/2} q^{n/2} - e^{-t/2} q^{-n/2} = Qh^{-1} u^n - Qh u^{-n}`.
pub fn quantum_integer_et(n: i32) -> LPoly {
    &LPoly::monomial(Mono::var(Symbol::Qh, -1) * Mono::var(Symbol::U, n))
        - &LPoly::monomial(Mono::var(Symbol::Qh, 1) * Mono::var(Symbol::U, -n))
}

/// `[n]! = [1][2]...[n]`.
pub fn quantum_factorial(n: i32) -> LPoly {
    (1..=n).fold(LPoly::one(), |acc, j| &acc * &quantum_integer(j))
}

/// `s_nu = sum_mu chi_nu(mu) / z_mu * p_mu`.
pub fn schur_in_p(nu: &Partition, cap: usize) -> Result<SymP, AlgebraError> {
    if nu.size() > cap {
        return Err(AlgebraError::DegreeCapExceeded {
            size: nu.size(),
            cap,
        });
    }
    let mut s = SymP::zero(cap);
    for mu in partitions_of(nu.size()) {
        let chi = mn_character(nu, &mu)?;
        if chi != 0 {
            let c = Rat::from_integer(chi.into()) / z_rat(&mu);
            s.add_term(mu, RatFun::constant(c));
        }
    }
    Ok(s)
}

/// Quantum dimension by the hook-content product
/// `prod_{x in mu} [c(x)]_{e^t} / [h(x)]`.
pub fn quantum_dim(mu: &Partition) -> RatFun {
    let mut num = LPoly::one();
    let mut den = LPoly::one();
    for hc in mu.hooks_contents() {
        num = &num * &quantum_integer_et(hc.content as i32);
        den = &den * &quantum_integer(hc.hook as i32);
    }
    RatFun::new(num, den).expect("denominator is univariate in u")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_up_to;
    use crate::ring::ratio;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }
    fn c(n: i64, d: i64) -> RatFun {
        RatFun::constant(ratio(n, d))
    }

    #[test]
    fn small_schur_expansions() {
        assert_eq!(schur_in_p(&p(&[1]), 3).unwrap(), SymP::p(p(&[1]), 3));
        let s2 = SymP::from_terms(3, [(p(&[2]), c(1, 2)), (p(&[1, 1]), c(1, 2))]);
        assert_eq!(schur_in_p(&p(&[2]), 3).unwrap(), s2);
        let s11 = SymP::from_terms(3, [(p(&[2]), c(-1, 2)), (p(&[1, 1]), c(1, 2))]);
        assert_eq!(schur_in_p(&p(&[1, 1]), 3).unwrap(), s11);
        assert!(matches!(
            schur_in_p(&p(&[3]), 2),
            Err(AlgebraError::DegreeCapExceeded { size: 3, cap: 2 })
        ));
    }

    #[test]
    fn cut_and_join_on_generators() {
        assert!(SymP::p(p(&[1]), 4).cut_and_join().is_zero());
        assert_eq!(SymP::p(p(&[2]), 4).cut_and_join(), SymP::p(p(&[1, 1]), 4));
        // K p_1^2 = p_2 (join of the two 1s)
        assert_eq!(SymP::p(p(&[1, 1]), 4).cut_and_join(), SymP::p(p(&[2]), 4));
        let s2 = schur_in_p(&p(&[2]), 4).unwrap();
        assert_eq!(s2.cut_and_join(), s2);
    }

    #[test]
    fn schur_functions_are_cut_and_join_eigenvectors() {
        for nu in partitions_up_to(8) {
            let s = schur_in_p(&nu, 8).unwrap();
            let half_kappa = ratio(nu.kappa(), 2);
            assert_eq!(s.cut_and_join(), s.scale_rat(&half_kappa), "{nu}");
        }
    }

    #[test]
    fn inverse_basis_change() {
        // p_nu = sum_mu chi_mu(nu) s_mu
        for nu in partitions_up_to(8) {
            let mut acc = SymP::zero(8);
            for mu in partitions_of(nu.size()) {
                let chi = mn_character(&mu, &nu).unwrap();
                let s = schur_in_p(&mu, 8).unwrap();
                acc = acc.add(&s.scale_rat(&Rat::from_integer(chi.into())));
            }
            assert_eq!(acc, SymP::p(nu.clone(), 8), "{nu}");
        }
    }

    #[test]
    fn qrho_single_box() {
        let v = schur_in_p(&p(&[1]), 1)
            .unwrap()
            .specialize_value(SpecKind::QRho)
            .unwrap();
        assert_eq!(v, RatFun::new(LPoly::one(), quantum_integer(1)).unwrap());
    }

    #[test]
    fn qrho_one_row_identity() {
        for n in 1..=10usize {
            let s = schur_in_p(&Partition::row(n), n).unwrap();
            let lhs = s.specialize_value(SpecKind::QRho).unwrap();
            let k = (n * (n - 1) / 2) as i32;
            let rhs = RatFun::new(LPoly::var(Symbol::U, k), quantum_factorial(n as i32)).unwrap();
            assert_eq!(lhs, rhs, "n={n}");
        }
    }

    #[test]
    fn single_variable_kills_long_schur_functions() {
        for nu in partitions_up_to(8) {
            if nu.is_empty() {
                continue;
            }
            let s = schur_in_p(&nu, 8).unwrap();
            let img = s.specialize(SpecKind::SingleVariable).unwrap();
            let mut expect = XSeries::zero(8);
            if nu.len() == 1 {
                expect.set_coeff(nu.size(), RatFun::one());
            }
            assert_eq!(img, expect, "{nu}");
        }
        let s11 = schur_in_p(&p(&[1, 1]), 2).unwrap();
        assert!(s11.specialize(SpecKind::SingleVariable).unwrap().is_zero());
    }

    #[test]
    fn quantum_dim_single_box_and_rows() {
        let d1 = quantum_dim(&p(&[1]));
        let expect = RatFun::new(
            &LPoly::var(Symbol::Qh, -1) - &LPoly::var(Symbol::Qh, 1),
            quantum_integer(1),
        )
        .unwrap();
        assert_eq!(d1, expect);
        for n in 1..=6i32 {
            let mut num = LPoly::one();
            let mut den = LPoly::one();
            for j in 1..=n {
                num = &num * &quantum_integer_et(j - 1);
                den = &den * &quantum_integer(j);
            }
            let expect = RatFun::new(num, den).unwrap();
            assert_eq!(quantum_dim(&Partition::row(n as usize)), expect);
        }
    }

    #[test]
    fn quantum_dim_matches_conifold_specialization() {
        for mu in partitions_up_to(6) {
            if mu.is_empty() {
                continue;
            }
            let s = schur_in_p(&mu, mu.size()).unwrap();
            let v = s.specialize_value(SpecKind::ConifoldY).unwrap();
            assert_eq!(quantum_dim(&mu), v, "{mu}");
        }
    }

    #[test]
    fn log_of_one_plus_p1() {
        let f = SymP::one(4).add(&SymP::p(p(&[1]), 4));
        let l = f.graded_log().unwrap();
        let expect = SymP::from_terms(
            4,
            [
                (p(&[1]), c(1, 1)),
                (p(&[1, 1]), c(-1, 2)),
                (p(&[1, 1, 1]), c(1, 3)),
                (p(&[1, 1, 1, 1]), c(-1, 4)),
            ],
        );
        assert_eq!(l, expect);
    }

    #[test]
    fn exp_of_zero_and_bad_constants() {
        assert_eq!(SymP::zero(5).graded_exp().unwrap(), SymP::one(5));
        assert!(SymP::zero(5).graded_log().is_err());
        assert!(SymP::one(5).graded_exp().is_err());
    }

    #[test]
    fn text_form() {
        let s = schur_in_p(&p(&[1, 1]), 2).unwrap();
        assert_eq!(s.to_string(), "(-1/2) * p[2] + (1/2) * p[1,1]");
    }

    fn arb_symp() -> impl Strategy<Value = SymP> {
        let parts: Vec<Partition> = partitions_up_to(6).into_iter().skip(1).collect();
        prop::collection::vec((0..parts.len(), -5i64..=5, 1i64..=4), 0..8).prop_map(move |v| {
            SymP::from_terms(
                6,
                v.into_iter().map(|(i, n, d)| (parts[i].clone(), c(n, d))),
            )
        })
    }

    fn arb_small_symp() -> impl Strategy<Value = SymP> {
        let parts: Vec<Partition> = partitions_up_to(3).into_iter().collect();
        prop::collection::vec((0..parts.len(), -3i64..=3), 0..4).prop_map(move |v| {
            SymP::from_terms(6, v.into_iter().map(|(i, n)| (parts[i].clone(), c(n, 1))))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn exp_log_round_trip(f in arb_symp()) {
            let e = f.graded_exp().unwrap();
            prop_assert_eq!(e.graded_log().unwrap(), f.clone());
            let g = SymP::one(6).add(&f);
            prop_assert_eq!(g.graded_log().unwrap().graded_exp().unwrap(), g);
        }

        #[test]
        fn specialization_is_multiplicative(f in arb_small_symp(), g in arb_small_symp()) {
            for kind in [SpecKind::QRho, SpecKind::ConifoldY, SpecKind::SingleVariable] {
                let lhs = f.mul(&g).specialize(kind).unwrap();
                let rhs = f.specialize(kind).unwrap().mul(&g.specialize(kind).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
