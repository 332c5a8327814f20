//! Correspondence between matrix-indexed families of statistics and
//! monic-monomial continued fractions, in its finite form: inside the class
//! restricted to avoid `12...K`, only `tau_1 ... tau_{K-1}` survive, and a
//! `(K-1) x (K-1)` integer matrix `A` defines statistics
//! `tau_{A,j} = sum_k A_{kj} tau_k` (column `j`).  With `B` the lower
//! binomial matrix `B_{ij} = C(i-1, j-1)`:
//!
//! * the statistic polynomial of `A` equals the continued fraction of
//!   `B A` (rows give level monomials), and
//! * the continued fraction of `A` equals the statistic polynomial of
//!   `B^{-1} A`.
//!
//! A length-tracking variable is adjoined to both sides so that the series
//! truncation is graded by permutation length: an all-ones column on the
//! continued-fraction side corresponds under `B^{-1}` to the plain length
//! statistic `tau_1` on the polynomial side.

use num::bigint::BigInt;

use crate::perm::{enumerate_class_with_limit, increasing_pattern, PatternSet};
use crate::series::{eval_schroder_cf, BigRat, Monomial, TruncSeries};
use crate::{Error, Result};

/// Square integer matrix whose columns define linear-combination
/// statistics over the `tau_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatMatrix {
    entries: Vec<Vec<i64>>,
}

impl StatMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidInput("statistic matrix must be square".into()));
        }
        Ok(StatMatrix { entries })
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        StatMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Entry in row `i`, column `j`, zero-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn mul(&self, other: &StatMatrix) -> StatMatrix {
        let n = self.size();
        assert_eq!(n, other.size());
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| self.entries[i][k] * other.entries[k][j]).sum())
                    .collect()
            })
            .collect();
        StatMatrix { entries }
    }

    pub fn is_identity(&self) -> bool {
        *self == StatMatrix::identity(self.size())
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }
}

/// `B_{ij} = C(i-1, j-1)` for `i, j = 1..=n`.
pub fn binomial_matrix(n: usize) -> StatMatrix {
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = crate::series::binom(i as i64, j as i64, crate::series::BinomMode::Standard);
                    i64::try_from(c).expect("binomial entry fits i64")
                })
                .collect()
        })
        .collect();
    StatMatrix { entries }
}

/// `(B^{-1})_{ij} = (-1)^{i+j} C(i-1, j-1)`.
pub fn binomial_matrix_inverse(n: usize) -> StatMatrix {
    let b = binomial_matrix(n);
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                    sign * b.entry(i, j)
                })
                .collect()
        })
        .collect();
    StatMatrix { entries }
}

/// One line of a verification report.
#[derive(Debug, Clone)]
pub struct StatCfCheck {
    pub name: String,
    pub pass: bool,
    pub detail: Option<String>,
}

/// Verifies the finite correspondence for a given `(K-1) x (K-1)` matrix:
/// statistic polynomial of `A` against continued fraction of `BA`, the
/// continued fraction of `A` against the statistic polynomial of
/// `B^{-1} A`, and `B B^{-1} = I` at this size.  Both series are graded
/// and truncated by permutation length (variable 0) at `n_max`.
pub fn check_stat_matrix_cf(
    a: &StatMatrix,
    big_k: usize,
    n_max: usize,
) -> Result<Vec<StatCfCheck>> {
    if big_k < 2 || a.size() != big_k - 1 {
        return Err(Error::InvalidInput(format!(
            "matrix must be (K-1) x (K-1) with K >= 2; got size {} for K = {big_k}",
            a.size()
        )));
    }
    let b = binomial_matrix(big_k - 1);
    let b_inv = binomial_matrix_inverse(big_k - 1);
    let mut checks = Vec::new();

    let ba = b.mul(a);
    let lhs = stat_polynomial(a, big_k, n_max)?;
    let rhs = cf_with_length_column(&ba, n_max)?;
    checks.push(compare("statistic polynomial equals cf of B*A", &lhs, &rhs));

    let lhs = cf_with_length_column(a, n_max)?;
    let rhs = stat_polynomial(&b_inv.mul(a), big_k, n_max)?;
    checks.push(compare("cf equals statistic polynomial of B^-1*A", &lhs, &rhs));

    let prod = b.mul(&b_inv);
    checks.push(StatCfCheck {
        name: "binomial matrix times its inverse is the identity".into(),
        pass: prod.is_identity(),
        detail: (!prod.is_identity()).then(|| format!("product rows {:?}", prod.rows())),
    });
    Ok(checks)
}

/// Brute statistic polynomial: sum over class permutations of length at
/// most `n_max` (avoiding `12...K` as well) of
/// `q_0^length * prod_j q_j^(tau_{M,j})`.
pub fn stat_polynomial(m: &StatMatrix, big_k: usize, n_max: usize) -> Result<TruncSeries> {
    let dim = big_k - 1;
    let set = PatternSet::schroder_with(&[increasing_pattern(big_k)]);
    let mut series = TruncSeries::zero(0, n_max as i64);
    for n in 0..=n_max {
        for pi in enumerate_class_with_limit(n, &set, n_max)? {
            let taus: Vec<i64> = pi
                .stat_vector(dim)
                .values
                .iter()
                .map(|t| i64::try_from(t).expect("tau fits i64 at desk scale"))
                .collect();
            let mut exps = vec![(0u32, n as i64)];
            for j in 0..dim {
                let e: i64 = (0..dim).map(|k| m.entry(k, j) * taus[k]).sum();
                exps.push((j as u32 + 1, e));
            }
            series.add_term(Monomial::from_exponents(&exps), BigRat::from_integer(BigInt::from(1)));
        }
    }
    Ok(series)
}

/// Finite continued fraction whose level `i` monomial is
/// `q_0 * prod_j q_j^(M_{ij})` (row `i`, one-based), truncated by the
/// adjoined length variable `q_0`.
pub fn cf_with_length_column(m: &StatMatrix, n_max: usize) -> Result<TruncSeries> {
    let dim = m.size();
    let level = |d: usize| {
        let mut exps = vec![(0u32, 1i64)];
        for j in 0..dim {
            exps.push((j as u32 + 1, m.entry(d, j)));
        }
        Monomial::from_exponents(&exps)
    };
    eval_schroder_cf(&level, dim - 1, n_max as i64, 0)
}

fn compare(name: &str, lhs: &TruncSeries, rhs: &TruncSeries) -> StatCfCheck {
    match lhs.first_difference(rhs) {
        None => StatCfCheck { name: name.into(), pass: true, detail: None },
        Some((m, a, b)) => StatCfCheck {
            name: name.into(),
            pass: false,
            detail: Some(format!("first mismatch at {m}: {a} vs {b}")),
        },
    }
}
