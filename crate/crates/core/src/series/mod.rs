//! Exact formal-series infrastructure: arbitrary-precision rationals,
//! univariate integer polynomials and rational generating functions, sparse
//! multivariate truncated series, and continued-fraction evaluation.

mod binom;
mod cf;
mod gf;
mod poly;
mod trunc;

pub use binom::{binom, BinomMode};
pub use cf::{eval_finite_cf, eval_schroder_cf};
pub use gf::RationalGF;
pub use poly::IntPoly;
pub use trunc::{Monomial, TruncSeries};

/// Arbitrary-precision rational, reduced and with positive denominator.
pub type BigRat = num::rational::BigRational;
