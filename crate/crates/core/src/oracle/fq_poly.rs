//! Univariate polynomials over a small finite field, used as Hermite form
//! entries and as moduli in the direct submodule enumerations.

use super::fq::{FqElement, FqField};

/// Dense coefficients, constant first, no trailing zeros. All arithmetic
/// takes the owning field explicitly; mixing fields is a caller bug.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FqPoly {
    coeffs: Vec<FqElement>,
}

impl FqPoly {
    pub fn new(mut coeffs: Vec<FqElement>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        FqPoly { coeffs }
    }

    pub fn zero() -> Self {
        FqPoly::default()
    }

    pub fn one() -> Self {
        FqPoly::new(vec![FqElement::ONE])
    }

    pub fn constant(c: FqElement) -> Self {
        FqPoly::new(vec![c])
    }

    /// `x^k`.
    pub fn x_power(k: usize) -> Self {
        let mut coeffs = vec![FqElement::ZERO; k + 1];
        coeffs[k] = FqElement::ONE;
        FqPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coefficient(&self, k: usize) -> FqElement {
        self.coeffs.get(k).copied().unwrap_or(FqElement::ZERO)
    }

    pub fn coefficients(&self) -> &[FqElement] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&FqElement::ONE)
    }

    pub fn add(&self, rhs: &FqPoly, field: &FqField) -> FqPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FqPoly::new(
            (0..n)
                .map(|k| field.add(self.coefficient(k), rhs.coefficient(k)))
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &FqPoly, field: &FqField) -> FqPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FqPoly::new(
            (0..n)
                .map(|k| field.sub(self.coefficient(k), rhs.coefficient(k)))
                .collect(),
        )
    }

    pub fn scale(&self, c: FqElement, field: &FqField) -> FqPoly {
        FqPoly::new(self.coeffs.iter().map(|&a| field.mul(a, c)).collect())
    }

    pub fn mul(&self, rhs: &FqPoly, field: &FqField) -> FqPoly {
        if self.is_zero() || rhs.is_zero() {
            return FqPoly::zero();
        }
        let mut coeffs = vec![FqElement::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = field.add(coeffs[i + j], field.mul(a, b));
            }
        }
        FqPoly::new(coeffs)
    }

    /// Remainder modulo a monic divisor.
    pub fn rem(&self, divisor: &FqPoly, field: &FqField) -> FqPoly {
        assert!(divisor.is_monic(), "division requires a monic divisor");
        let dd = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let lead = *rem.last().unwrap();
            let shift = rem.len() - 1 - dd;
            if !lead.is_zero() {
                for i in 0..=dd {
                    let sub = field.mul(lead, divisor.coefficient(i));
                    rem[shift + i] = field.sub(rem[shift + i], sub);
                }
            }
            rem.pop();
        }
        FqPoly::new(rem)
    }

    pub fn divides(&self, other: &FqPoly, field: &FqField) -> bool {
        other.rem(self, field).is_zero()
    }

    /// All monic polynomials of the given degree, in deterministic order of
    /// the lower coefficients.
    pub fn monic_of_degree(deg: usize, field: &FqField) -> Vec<FqPoly> {
        let q = field.order() as usize;
        let count = q.pow(deg as u32);
        let mut out = Vec::with_capacity(count);
        for idx in 0..count {
            let mut coeffs = vec![FqElement::ZERO; deg + 1];
            coeffs[deg] = FqElement::ONE;
            let mut rest = idx;
            for slot in coeffs.iter_mut().take(deg) {
                *slot = FqElement(rest % q);
                rest /= q;
            }
            out.push(FqPoly { coeffs });
        }
        out
    }

    /// All polynomials of degree strictly below `deg` (the residues modulo a
    /// degree-`deg` monic), in deterministic order. `deg = 0` yields only the
    /// zero polynomial.
    pub fn all_below_degree(deg: usize, field: &FqField) -> Vec<FqPoly> {
        let q = field.order() as usize;
        let count = q.pow(deg as u32);
        let mut out = Vec::with_capacity(count);
        for idx in 0..count {
            let mut coeffs = vec![FqElement::ZERO; deg];
            let mut rest = idx;
            for slot in coeffs.iter_mut() {
                *slot = FqElement(rest % q);
                rest /= q;
            }
            out.push(FqPoly::new(coeffs));
        }
        out
    }
}
