//! Exact arithmetic for classes of Quot schemes of zero-dimensional quotients
//! on smooth projective curves.
//!
//! The class of the Quot scheme of length-n quotients of a rank-r bundle on a
//! curve C, taken in the Grothendieck ring of varieties, depends only on n, r
//! and the curve, and expands as a sum over compositions of n:
//!
//! ```text
//! [Quot] = sum over (n_1, ..., n_r), n_1 + ... + n_r = n, of
//!          [Sym^{n_1} C] ... [Sym^{n_r} C] * L^(sum of (i-1) n_i)
//! ```
//!
//! where L is the class of the affine line. Everything here is exact: classes
//! are integer polynomials in L and symmetric-product symbols S_m, and the
//! specializations (Poincare polynomials, Betti numbers, Euler characteristics,
//! point counts over finite fields) are integer valued. The `oracle` module
//! recomputes the finite-field numbers by direct enumeration, with no shared
//! formulas, so the two sides check each other.

pub mod algebra;
pub mod motive;
pub mod oracle;
pub mod suite;

pub use algebra::{AlgebraError, IntPoly, MotiveClass, Ring, Symbol, TruncatedSeries};
pub use motive::{CurveSpec, MotiveError};
pub use oracle::{Budget, OracleError, PlaneCurveEquation};
pub use suite::{run_suite, SuiteCell, SuiteConfig, SuiteReport};
