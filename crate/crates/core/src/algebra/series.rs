//! Power series in one formal variable `u`, truncated at a stated order.
//!
//! A series of order `d` stores the coefficients of `u^0 .. u^d` and nothing
//! else; arithmetic between series of different orders truncates to the
//! smaller one. Inversion uses the usual recurrence
//! `b_0 = a_0^{-1}, b_k = -a_0^{-1} * sum_{j=1..k} a_j b_{k-j}`
//! and is defined exactly when the constant coefficient is a unit.

use std::fmt;

use super::{AlgebraError, Ring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries<R: Ring> {
    order: usize,
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    /// Series from the given coefficients, truncated or zero-padded to
    /// exactly `order + 1` entries.
    pub fn new(order: usize, mut coeffs: Vec<R>) -> Self {
        coeffs.truncate(order + 1);
        while coeffs.len() < order + 1 {
            coeffs.push(R::zero());
        }
        TruncatedSeries { order, coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        TruncatedSeries {
            order,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::new(order, vec![R::one()])
    }

    /// `c * u^k`.
    pub fn monomial(c: R, k: usize, order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `u^k`; panics beyond the truncation order, where the
    /// value is unknown rather than zero.
    pub fn coefficient(&self, k: usize) -> &R {
        assert!(
            k <= self.order,
            "coefficient {k} beyond truncation order {}",
            self.order
        );
        &self.coeffs[k]
    }

    pub fn coefficients(&self) -> &[R] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        TruncatedSeries::from_fn(order, |k| self.coeffs[k].add(&rhs.coeffs[k]))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        TruncatedSeries::from_fn(order, |k| self.coeffs[k].sub(&rhs.coeffs[k]))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![R::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        TruncatedSeries { order, coeffs }
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let a0_inv = self.coeffs[0]
            .inverse()
            .ok_or_else(|| AlgebraError::NonUnitConstantTerm(format!("{}", self.coeffs[0])))?;
        let mut coeffs = vec![R::zero(); self.order + 1];
        coeffs[0] = a0_inv.clone();
        for k in 1..=self.order {
            let mut acc = R::zero();
            for j in 1..=k {
                acc = acc.add(&self.coeffs[j].mul(&coeffs[k - j]));
            }
            coeffs[k] = a0_inv.neg().mul(&acc);
        }
        Ok(TruncatedSeries {
            order: self.order,
            coeffs,
        })
    }

    /// Integer power; negative exponents invert first and therefore require a
    /// unit constant coefficient.
    pub fn pow(&self, e: i64) -> Result<Self, AlgebraError> {
        let (mut base, mut e) = if e < 0 {
            (self.inverse()?, e.unsigned_abs())
        } else {
            (self.clone(), e as u64)
        };
        let mut acc = TruncatedSeries::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }
}

impl<R: Ring> fmt::Display for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            wrote = true;
            let rendered = format!("{c}");
            let simple = !rendered.contains(' ') && !rendered.starts_with('-');
            if k == 0 {
                write!(f, "{rendered}")?;
                continue;
            }
            if rendered == "1" {
                // coefficient 1 prints as the bare power of u
            } else if simple {
                write!(f, "{rendered}*")?;
            } else {
                write!(f, "({rendered})*")?;
            }
            if k == 1 {
                write!(f, "u")?;
            } else {
                write!(f, "u^{k}")?;
            }
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(u^{})", self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{IntPoly, MotiveClass};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn int_series(order: usize, coeffs: &[i64]) -> TruncatedSeries<BigInt> {
        TruncatedSeries::new(order, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn multiplication_truncates_to_smaller_order() {
        // (1 + t*u)^2 at order 1 is 1 + 2t*u
        let t = IntPoly::x();
        let a = TruncatedSeries::new(1, vec![IntPoly::one(), t.clone()]);
        let sq = a.mul(&a);
        assert_eq!(sq.order(), 1);
        assert_eq!(*sq.coefficient(0), IntPoly::one());
        assert_eq!(*sq.coefficient(1), IntPoly::from_coeffs(&[0, 2]));

        let b = int_series(5, &[1, 1, 1, 1, 1, 1]);
        let c = int_series(2, &[1, -1]);
        let prod = b.mul(&c);
        assert_eq!(prod.order(), 2);
        assert_eq!(prod, int_series(2, &[1, 0, 0]));
    }

    #[test]
    fn geometric_series_inverts() {
        let one_minus_u = int_series(4, &[1, -1]);
        let geo = one_minus_u.inverse().unwrap();
        assert_eq!(geo, int_series(4, &[1, 1, 1, 1, 1]));
        assert_eq!(geo.mul(&one_minus_u), TruncatedSeries::one(4));
    }

    #[test]
    fn inverse_over_class_coefficients() {
        // 1/(1 - L*u) = sum L^k u^k
        let l = MotiveClass::lefschetz();
        let s = TruncatedSeries::new(
            3,
            vec![MotiveClass::one(), crate::algebra::Ring::neg(&l)],
        );
        let inv = s.inverse().unwrap();
        for k in 0..=3 {
            assert_eq!(*inv.coefficient(k), crate::algebra::Ring::pow(&l, k as u64));
        }
    }

    #[test]
    fn inverse_requires_unit_constant() {
        let s = int_series(3, &[2, 1]);
        assert_eq!(
            s.inverse(),
            Err(AlgebraError::NonUnitConstantTerm("2".to_string()))
        );
        let z = int_series(2, &[0, 1]);
        assert!(z.inverse().is_err());
    }

    #[test]
    fn powers_including_negative() {
        let one_minus_u = int_series(3, &[1, -1]);
        // (1-u)^{-2} = 1 + 2u + 3u^2 + 4u^3
        assert_eq!(one_minus_u.pow(-2).unwrap(), int_series(3, &[1, 2, 3, 4]));
        assert_eq!(one_minus_u.pow(0).unwrap(), TruncatedSeries::one(3));
        assert_eq!(one_minus_u.pow(2).unwrap(), int_series(3, &[1, -2, 1, 0]));
        assert!(int_series(3, &[3, 1]).pow(-1).is_err());
    }

    #[test]
    fn coefficient_beyond_order_panics() {
        let s = int_series(2, &[1, 2, 3]);
        let got = std::panic::catch_unwind(|| s.coefficient(3).clone());
        assert!(got.is_err());
    }

    #[test]
    fn rendering() {
        let s = int_series(2, &[1, 0, -2]);
        assert_eq!(s.to_string(), "1 + (-2)*u^2 + O(u^3)");
        let m = TruncatedSeries::new(
            2,
            vec![
                MotiveClass::one(),
                MotiveClass::sym(1).sub(&MotiveClass::one()),
                MotiveClass::sym(2),
            ],
        );
        assert_eq!(m.to_string(), "1 + (-1 + S1)*u + S2*u^2 + O(u^3)");
    }

    proptest! {
        #[test]
        fn series_times_inverse_is_one(
            tail in prop::collection::vec(-6i64..=6, 0..6),
            sign in prop::bool::ANY,
        ) {
            let mut coeffs = vec![if sign { 1 } else { -1 }];
            coeffs.extend(tail);
            let order = coeffs.len() - 1;
            let s = int_series(order, &coeffs);
            let inv = s.inverse().unwrap();
            prop_assert_eq!(s.mul(&inv), TruncatedSeries::one(order));
        }
    }
}
