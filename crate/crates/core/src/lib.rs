//! Exact combinatorics of Schröder permutations: permutations of {1..n}
//! avoiding both 1243 and 2143.
//!
//! The crate provides
//!
//! * pattern containment and the increasing-subsequence statistics `tau_k`
//!   on permutations, with exhaustive class enumeration ([`perm`]);
//! * Schröder lattice paths, their height statistics and the first-return
//!   product ([`path`]);
//! * the statistic-preserving bijection between Schröder paths of size `n`
//!   and the avoidance class of size `n + 1`, in both a recursive and a
//!   direct triangle-labeling form ([`bijection`]);
//! * exact formal series: big rationals, sparse multivariate truncated
//!   series, univariate rational generating functions and continued
//!   fractions ([`series`]);
//! * the closed-form generating functions of the class, expressed through
//!   rescaled Chebyshev polynomials of the second kind, together with the
//!   transfer-matrix method and statistic-matrix continued-fraction
//!   correspondence ([`formulas`]);
//! * named verification suites checking every identity against brute-force
//!   enumeration oracles ([`verify`]).
//!
//! All arithmetic is exact; counts and coefficients are arbitrary-precision.

pub mod bijection;
mod error;
pub mod formulas;
pub mod path;
pub mod perm;
pub mod series;
pub mod verify;

pub use error::{Error, Result};

/// Default cap on enumeration size; class sizes grow like Schröder numbers.
pub const DEFAULT_ENUM_LIMIT: usize = 12;
