//! Correlation functions R_{m,n}(y) = ∫ pₙ(x) pₙ₊ₘ(x+y) w(x) dx of the
//! classical orthogonal polynomials.
//!
//! The crate provides three independent routes to the same quantity:
//!
//! * closed forms — terminating hypergeometric / Appell-F₂ expressions and
//!   the equivalent coefficient sums ([`mod@corr`]);
//! * a Gauss-quadrature oracle built from the three-term recurrences via
//!   Golub–Welsch ([`quad`]), sharing no code with the closed forms;
//! * a two-variable second-order difference equation usable both as a
//!   residual checker and as a table propagator ([`recur`]).
//!
//! The numeric core is generic over the scalar type (see [`Real`]); `f64`
//! is the default type parameter and the type the accuracy contracts are
//! stated for.

// reference tables are frozen at full precision; domain checks use
// negated comparisons deliberately so NaN parameters are rejected
#![allow(clippy::excessive_precision)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::manual_is_multiple_of)]

pub mod appell;
pub mod check;
pub mod corr;
pub(crate) mod dd;
pub mod error;
pub mod family;
pub mod gamma;
pub mod hyp;
pub mod kahan;
#[doc(hidden)]
pub mod negative_control;
pub mod quad;
pub mod real;
pub mod recur;

pub use appell::AppellF2;
pub use corr::{
    coefficient_vector, corr, CoeffVector, CorrResult, CorrelationQuery, Representation,
};
pub use error::{Error, Result};
pub use family::{Family, RecurrenceCoeffs};
pub use hyp::HypSeries;
pub use quad::QuadratureRule;
pub use real::Real;
pub use recur::{CorrTable, Provenance, Residual};

/// Double-precision aliases for the core types.
pub type Family64 = Family<f64>;
pub type HypSeries64 = HypSeries<f64>;
pub type AppellF264 = AppellF2<f64>;
pub type CorrResult64 = CorrResult<f64>;
pub type CoeffVector64 = CoeffVector<f64>;
pub type QuadratureRule64 = QuadratureRule<f64>;
pub type CorrTable64 = CorrTable<f64>;
