//! Brute-force enumeration oracles over small finite fields.
//!
//! Everything in this module counts objects directly: Hermite normal forms
//! with polynomial entries, x-stable subspaces, and points on affine plane
//! curves. None of it shares a formula with the `motive` module, which is the
//! point: agreement between the two sides is the correctness evidence.
//!
//! Every enumeration charges an explicit operation budget and fails loudly
//! when it would run past it; counts are never silently truncated.

mod curve;
mod fq;
mod fq_poly;
mod hermite;
mod subspaces;

pub use curve::{
    closed_point_counts, curve_point_counts, sym_point_count_bruteforce, PlaneCurveEquation,
};
pub use fq::{FqElement, FqField, MAX_FIELD_ORDER};
pub use fq_poly::FqPoly;
pub use hermite::{
    count_colength_submodules_affine, count_colength_submodules_direct,
    count_punctual_quotients, count_punctual_quotients_hnf, count_punctual_quotients_walk,
    quot_point_count_bruteforce_p1, HermiteForm,
};
pub use subspaces::{gaussian_binomial, RrefBasis};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration budget of {limit} field operations exceeded")]
    BudgetExceeded { limit: u64 },
    #[error("{0} is not a prime power >= 2")]
    NotPrimePower(u64),
    #[error("field of order {q} exceeds the supported maximum {max}")]
    FieldTooLarge { q: u64, max: u64 },
    #[error(
        "point count N_{d} = {count} violates the Weil bound for genus {genus} over F_{q}: \
         |N_{d} - ({q}^{d} + 1)| <= 2*{genus}*{q}^({d}/2) fails"
    )]
    WeilBoundViolated { d: u32, q: u64, genus: u32, count: u64 },
    #[error("point counts are not consistent: closed points of degree {d} do not come out integral")]
    InconsistentPointCounts { d: u32 },
}

/// Operation budget for one oracle call. Each enumeration step charges its
/// approximate cost in elementary field operations; going over the limit is
/// an error, so a successful count is always a complete count.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub const DEFAULT_OPS: u64 = 10_000_000;

    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    /// Default limit, overridable through the `QUOTMOTIVE_BUDGET` environment
    /// variable (a plain integer number of operations).
    pub fn from_env() -> Self {
        let limit = std::env::var("QUOTMOTIVE_BUDGET")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(Self::DEFAULT_OPS);
        Budget::new(limit)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn remaining(&self) -> u64 {
        self.limit.saturating_sub(self.used)
    }

    pub fn charge(&mut self, ops: u64) -> Result<(), OracleError> {
        self.used = self.used.saturating_add(ops);
        if self.used > self.limit {
            Err(OracleError::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_OPS)
    }
}

/// Factor `q` as `p^d` with `p` prime, or report that it is not a prime power.
pub fn factor_prime_power(q: u64) -> Result<(u64, u32), OracleError> {
    if q < 2 {
        return Err(OracleError::NotPrimePower(q));
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if p * p > q {
        return Ok((q, 1)); // q itself is prime
    }
    let mut rest = q;
    let mut d = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        d += 1;
    }
    if rest == 1 {
        Ok((p, d))
    } else {
        Err(OracleError::NotPrimePower(q))
    }
}
