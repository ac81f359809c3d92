//! Classes of Quot schemes and their specializations, computed from
//! closed formulas: composition sums over symmetric-product symbols,
//! truncated-series products, and zeta-function coefficient extraction.
//!
//! The `oracle` module recomputes every finite-field number appearing here
//! by direct enumeration; nothing in this module calls into it.

mod compositions;
mod curve;
mod ops;

pub use compositions::{bounded_tuples, Composition};
pub use curve::CurveSpec;
pub use ops::{
    betti_numbers, euler_characteristic, euler_characteristic_closed_form, open_sym_series,
    poincare_polynomial, poincare_series_product, punctual_class, punctual_point_count,
    quot_class, quot_point_count, sym_point_count, sym_poincare, verify_stratification,
    StratificationReport,
};

use thiserror::Error;

use crate::algebra::AlgebraError;

/// Errors from curve-dependent computations.
#[derive(Debug, Error)]
pub enum MotiveError {
    #[error("curve has no zeta numerator, which point counting needs")]
    MissingZetaData,
    #[error("invalid curve description: {0}")]
    InvalidCurveSpec(String),
    #[error("could not parse curve description: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
