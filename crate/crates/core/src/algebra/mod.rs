//! Exact polynomial and truncated power-series arithmetic.
//!
//! Three coefficient domains cover everything the rest of the crate needs:
//! arbitrary-precision integers, univariate integer polynomials, and
//! [`MotiveClass`] (integer polynomials in the Lefschetz class L, the
//! cohomological variable t, and the symmetric-product symbols S_m). All of
//! them implement [`Ring`], so [`TruncatedSeries`] works uniformly over each.

mod int_poly;
mod motive_class;
mod series;

pub use int_poly::IntPoly;
pub use motive_class::{Monomial, MotiveClass, Symbol};
pub use series::TruncatedSeries;

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("no value assigned to symbol {0}")]
    UnassignedSymbol(Symbol),
    #[error("series constant term {0} is not a unit, cannot invert")]
    NonUnitConstantTerm(String),
}

/// Commutative ring operations used by series arithmetic and substitution.
///
/// `inverse` returns the multiplicative inverse when the element is a unit
/// and `None` otherwise; over the integers and integer polynomial rings the
/// units are exactly the constants 1 and -1.
pub trait Ring: Clone + Eq + std::fmt::Debug + std::fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inverse(&self) -> Option<Self>;
    fn from_bigint(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    fn pow(&self, e: u64) -> Self {
        let mut base = self.clone();
        let mut e = e;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }

    fn one() -> Self {
        num_traits::One::one()
    }

    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inverse(&self) -> Option<Self> {
        let one: BigInt = num_traits::One::one();
        if *self == one || *self == -&one {
            Some(self.clone())
        } else {
            None
        }
    }

    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }
}
