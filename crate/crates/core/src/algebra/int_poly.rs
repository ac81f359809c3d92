//! Univariate polynomials with arbitrary-precision integer coefficients,
//! stored densely in ascending degree with no trailing zeros.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use super::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map(Ring::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly::default()
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// `c * x^k` in the single formal variable.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly::new(coeffs)
    }

    pub fn x() -> Self {
        IntPoly::monomial(BigInt::one(), 1)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficients padded with zeros up to degree `deg` inclusive.
    pub fn coeffs_padded(&self, deg: usize) -> Vec<BigInt> {
        (0..=deg).map(|k| self.coefficient(k)).collect()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// True when coefficients read the same from both ends.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|k| self.coeffs[k] == self.coeffs[n - 1 - k])
    }

    /// Render with the given variable name, e.g. `1 + 2*t^2 + t^4`.
    pub fn render(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if first {
                if negative {
                    out.push('-');
                }
                first = false;
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            if k == 0 {
                out.push_str(&mag.to_string());
            } else {
                if mag != BigInt::from(1) {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                if k == 1 {
                    out.push_str(var);
                } else {
                    out.push_str(&format!("{var}^{k}"));
                }
            }
        }
        out
    }
}

impl Ring for IntPoly {
    fn zero() -> Self {
        IntPoly::zero()
    }

    fn one() -> Self {
        IntPoly::one()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new(
            (0..n)
                .map(|k| self.coefficient(k) + rhs.coefficient(k))
                .collect(),
        )
    }

    fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new(
            (0..n)
                .map(|k| self.coefficient(k) - rhs.coefficient(k))
                .collect(),
        )
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }

    fn neg(&self) -> Self {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    fn inverse(&self) -> Option<Self> {
        if self.coeffs.len() == 1 {
            self.coeffs[0].inverse().map(IntPoly::constant)
        } else {
            None
        }
    }

    fn from_bigint(n: &BigInt) -> Self {
        IntPoly::new(vec![n.clone()])
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("t"))
    }
}
