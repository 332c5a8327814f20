//! Brute-force coefficient oracles: every closed form in this module's
//! siblings is compared against direct enumeration of the class.

use num::bigint::BigInt;
use num::{One, Zero};

use crate::perm::{append_max, enumerate_class_with_limit, PatternSet, Permutation};
use crate::Result;

/// Coefficients `n = 0..=n_max` of the generating function for class
/// permutations avoiding `tau`.
pub fn brute_avoid(tau: &Permutation, n_max: usize) -> Result<Vec<BigInt>> {
    let set = PatternSet::schroder_with(std::slice::from_ref(tau));
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut count = BigInt::zero();
        for _ in enumerate_class_with_limit(n, &set, n_max)? {
            count += 1;
        }
        out.push(count);
    }
    Ok(out)
}

/// Coefficients for class permutations containing exactly one subsequence
/// of type `tau`.
pub fn brute_contain_once(tau: &Permutation, n_max: usize) -> Result<Vec<BigInt>> {
    brute_filtered(n_max, |pi| pi.count_occurrences(tau).is_one())
}

/// Coefficients for class permutations containing exactly one `tau` while
/// avoiding `tau` with its next value appended.
pub fn brute_contain_once_avoid_next(tau: &Permutation, n_max: usize) -> Result<Vec<BigInt>> {
    let extended = append_max(tau);
    brute_filtered(n_max, |pi| {
        pi.count_occurrences(tau).is_one() && !pi.contains(&extended)
    })
}

/// Coefficients for class permutations with `tau_k` exactly `r`.
pub fn brute_exactly_r(k: usize, r: usize, n_max: usize) -> Result<Vec<BigInt>> {
    let r = BigInt::from(r);
    brute_filtered(n_max, |pi| pi.tau(k) == r)
}

fn brute_filtered(n_max: usize, keep: impl Fn(&Permutation) -> bool) -> Result<Vec<BigInt>> {
    let set = PatternSet::schroder();
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut count = BigInt::zero();
        for pi in enumerate_class_with_limit(n, &set, n_max)? {
            if keep(&pi) {
                count += 1;
            }
        }
        out.push(count);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn exactly_one_21_avoiding_213() {
        // Only 21 and 132 qualify: coefficients are x^2 + x^3.
        let j = brute_contain_once_avoid_next(&p("21"), 6).unwrap();
        let want: Vec<BigInt> = [0, 0, 1, 1, 0, 0, 0].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(j, want);
    }

    #[test]
    fn one_123_witnesses() {
        let g = brute_contain_once(&p("123"), 4).unwrap();
        assert_eq!(g[4], BigInt::from(6));
    }
}
