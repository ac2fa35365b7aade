use std::fmt;

use serde::Serialize;

use super::{Rat, RatFun};
use crate::error::RingError;

/// Power series in `x` truncated after `x^order`, with rational-function
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XSeries {
    order: usize,
    coeffs: Vec<RatFun>,
}

impl XSeries {
    pub fn zero(order: usize) -> Self {
        XSeries {
            order,
            coeffs: vec![RatFun::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = RatFun::one();
        s
    }

    /// Builds from explicit coefficients; missing ones are zero and extra
    /// ones beyond `order` are dropped.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = RatFun>) -> Self {
        let mut c: Vec<RatFun> = coeffs.into_iter().take(order + 1).collect();
        c.resize(order + 1, RatFun::zero());
        XSeries { order, coeffs: c }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize) -> &RatFun {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[RatFun] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RatFun::is_zero)
    }

    pub fn set_coeff(&mut self, n: usize, c: RatFun) {
        self.coeffs[n] = c;
    }

    fn check(&self, other: &XSeries) -> Result<(), RingError> {
        if self.order != other.order {
            Err(RingError::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        } else {
            Ok(())
        }
    }

    /// Re-truncates at a lower order.
    pub fn truncate(&self, order: usize) -> Result<XSeries, RingError> {
        if order > self.order {
            return Err(RingError::OrderMismatch {
                left: self.order,
                right: order,
            });
        }
        Ok(XSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    pub fn add(&self, other: &XSeries) -> Result<XSeries, RingError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<_, _>>()?;
        Ok(XSeries {
            order: self.order,
            coeffs,
        })
    }

    pub fn sub(&self, other: &XSeries) -> Result<XSeries, RingError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> XSeries {
        XSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &XSeries) -> Result<XSeries, RingError> {
        self.check(other)?;
        let n = self.order;
        let mut coeffs = vec![RatFun::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].try_add(&a.try_mul(b)?)?;
            }
        }
        Ok(XSeries { order: n, coeffs })
    }

    pub fn scale(&self, c: &RatFun) -> Result<XSeries, RingError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.try_mul(c))
            .collect::<Result<_, _>>()?;
        Ok(XSeries {
            order: self.order,
            coeffs,
        })
    }

    pub fn scale_rat(&self, c: &Rat) -> XSeries {
        XSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// Multiplication by `x`, dropping the coefficient pushed past the order.
    pub fn shift_up(&self) -> XSeries {
        let mut coeffs = Vec::with_capacity(self.order + 1);
        coeffs.push(RatFun::zero());
        coeffs.extend(self.coeffs[..self.order].iter().cloned());
        XSeries {
            order: self.order,
            coeffs,
        }
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn first_nonzero(&self) -> Option<(usize, &RatFun)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }
}

impl fmt::Display for XSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "x^{n}: {c}")?;
        }
        write!(f, "O(x^{})", self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn rat(n: i64, d: i64) -> RatFun {
        RatFun::constant(Rat::new(n.into(), d.into()))
    }

    #[test]
    fn product_of_binomials() {
        let a = XSeries::from_coeffs(2, [rat(1, 1), rat(1, 1)]);
        let b = XSeries::from_coeffs(2, [rat(1, 1), rat(-1, 1)]);
        let p = a.mul(&b).unwrap();
        assert_eq!(
            p,
            XSeries::from_coeffs(2, [rat(1, 1), rat(0, 1), rat(-1, 1)])
        );
    }

    #[test]
    fn scale_by_zero() {
        let a = XSeries::from_coeffs(3, [rat(1, 2), rat(3, 1), rat(0, 1), rat(7, 5)]);
        assert!(a.scale(&RatFun::zero()).unwrap().is_zero());
    }

    #[test]
    fn exponential_identity() {
        // e^x * e^{-x} = 1, with factorials computed independently.
        let n = 6;
        let mut fact = Rat::one();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for k in 0..=n {
            if k > 0 {
                fact *= Rat::from_integer(k.into());
            }
            let c = fact.recip();
            pos.push(RatFun::constant(c.clone()));
            neg.push(RatFun::constant(if k % 2 == 0 { c } else { -c }));
        }
        let p = XSeries::from_coeffs(n as usize, pos)
            .mul(&XSeries::from_coeffs(n as usize, neg))
            .unwrap();
        assert_eq!(p, XSeries::one(n as usize));
    }

    #[test]
    fn order_mismatch() {
        let a = XSeries::one(2);
        let b = XSeries::one(3);
        assert_eq!(
            a.add(&b),
            Err(RingError::OrderMismatch { left: 2, right: 3 })
        );
        assert!(a.mul(&b).is_err());
        assert!(a.truncate(3).is_err());
        assert_eq!(b.truncate(2).unwrap(), a);
    }
}
