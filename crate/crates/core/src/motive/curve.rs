//! Curve descriptions: the input data all specializations run on.
//!
//! A smooth projective curve enters the computations through two optional
//! pieces of data beyond its genus. The zeta numerator P drives exact point
//! counts: over F_q the curve has q^d + 1 minus the d-th power sums of the
//! inverse roots of P rational points in degree d, and every symmetric-power
//! count is a coefficient of P(u) / ((1 - u)(1 - qu)). A plane equation, when
//! present, lets the enumeration oracles recount the same numbers point by
//! point.

use num_bigint::BigInt;

use serde::{Deserialize, Serialize};

use crate::algebra::IntPoly;
use crate::oracle::PlaneCurveEquation;

use super::MotiveError;

/// A smooth projective curve over a (possibly unspecified) base field.
///
/// `zeta_numerator` lists the coefficients of P in ascending order; for a
/// curve over F_q it must have degree exactly 2 * genus and constant term 1.
/// `equation` is an affine plane model for the enumeration oracles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSpec {
    pub genus: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeta_numerator: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equation: Option<PlaneCurveEquation>,
}

impl CurveSpec {
    /// Genus-g curve with no arithmetic data: enough for Poincare
    /// polynomials, Betti numbers and Euler characteristics.
    pub fn abstract_curve(genus: u32) -> Self {
        CurveSpec {
            genus,
            zeta_numerator: None,
            equation: None,
        }
    }

    /// The projective line with its full data: trivial zeta numerator and
    /// the plane model `y = 0` completed by one point at infinity.
    pub fn projective_line() -> Self {
        CurveSpec {
            genus: 0,
            zeta_numerator: Some(vec![1]),
            equation: Some(PlaneCurveEquation {
                affine_poly: vec![(0, 1, 1)],
                points_at_infinity: 1,
            }),
        }
    }

    /// Parse from JSON and validate.
    pub fn from_json_str(text: &str) -> Result<Self, MotiveError> {
        let spec: CurveSpec = serde_json::from_str(text)?;
        spec.validate()?;
        Ok(spec)
    }

    /// Check the structural constraints that later computations rely on.
    pub fn validate(&self) -> Result<(), MotiveError> {
        if let Some(p) = &self.zeta_numerator {
            let expected = 2 * self.genus as usize + 1;
            if p.len() != expected {
                return Err(MotiveError::InvalidCurveSpec(format!(
                    "zeta numerator must have exactly {expected} coefficients \
                     for genus {}, got {}",
                    self.genus,
                    p.len()
                )));
            }
            if p[0] != 1 {
                return Err(MotiveError::InvalidCurveSpec(format!(
                    "zeta numerator must have constant term 1, got {}",
                    p[0]
                )));
            }
        }
        Ok(())
    }

    /// The numerator as a polynomial, or the error that point counting is
    /// impossible without it.
    pub fn zeta_numerator_poly(&self) -> Result<IntPoly, MotiveError> {
        match &self.zeta_numerator {
            Some(p) => Ok(IntPoly::from_coeffs(p)),
            None => Err(MotiveError::MissingZetaData),
        }
    }

    /// Point counts over F_{q^d} for d = 1..=max_degree, derived from the
    /// zeta numerator through Newton's identities on its inverse roots.
    pub fn point_counts_from_zeta(&self, q: u64, max_degree: u32) -> Result<Vec<BigInt>, MotiveError> {
        let p = self.zeta_numerator_poly()?;
        let deg = 2 * self.genus as usize;
        // power sums s_d of the inverse roots of P, from the coefficients
        let mut power_sums: Vec<BigInt> = Vec::new();
        for d in 1..=max_degree as usize {
            // Newton: s_d + sum_{i=1}^{d-1} c_i s_{d-i} + d c_d = 0 for d <= deg,
            // and s_d + sum_{i=1}^{deg} c_i s_{d-i} = 0 beyond
            let mut s = if d <= deg {
                -p.coefficient(d) * BigInt::from(d)
            } else {
                BigInt::from(0)
            };
            for i in 1..=d.min(deg) {
                if i < d {
                    s -= p.coefficient(i) * &power_sums[d - i - 1];
                }
            }
            power_sums.push(s);
        }
        let q_big = BigInt::from(q);
        let mut q_power = BigInt::from(1);
        let mut counts = Vec::with_capacity(max_degree as usize);
        for d in 1..=max_degree as usize {
            q_power *= &q_big;
            counts.push(&q_power + BigInt::from(1) - &power_sums[d - 1]);
        }
        Ok(counts)
    }
}
