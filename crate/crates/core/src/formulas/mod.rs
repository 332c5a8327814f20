//! Closed-form results for the avoidance class: rescaled Chebyshev
//! polynomials, the generating functions for avoiding or containing
//! additional patterns, the exact-occurrence sum, transfer matrices for
//! bounded-height paths, and the statistic-matrix continued-fraction
//! correspondence.  Every formula here has a brute-force oracle next to it
//! in the test and verification suites.

mod cheb;
mod e2;
mod families;
mod numbers;
mod once;
mod oracle;
mod statcf;
mod transfer;

pub use cheb::cheb_p;
pub use e2::gf_exactly_r_12k;
pub use families::{
    avoid_append_transform, count_231, count_321, gf_avoid_12k, gf_avoid_213k, gf_avoid_2314k,
    gf_avoid_3214k, gf_avoid_12k_via_cf,
};
pub use numbers::{catalan_number, schroder_number};
pub use once::{contain_once_transform, gf_once_12k, gf_once_213k};
pub use oracle::{brute_avoid, brute_contain_once, brute_contain_once_avoid_next, brute_exactly_r};
pub use statcf::{binomial_matrix, binomial_matrix_inverse, check_stat_matrix_cf, StatMatrix};
pub use transfer::{transfer_det, transfer_matrix, transfer_minor_gf};
