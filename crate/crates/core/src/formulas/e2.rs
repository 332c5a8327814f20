use num::bigint::BigInt;
use num::{One, Zero};

use super::cheb::cheb_p;
use crate::series::{binom, BinomMode, IntPoly, RationalGF};
use crate::{Error, Result};

/// Generating function, by length, for class permutations containing
/// exactly `r` subsequences of type `12...k`.
///
/// The sum runs over all nonnegative `l_0..=l_b`, `m_0..=m_b` with
/// `r = sum (l_i + m_i) C(k+i-1, k-1)`, where `b` is fixed by
/// `C(k+b, k) <= r < C(k+b+1, k)`; the term for one solution is
///
/// ```text
/// prod_{i=0..b} C(l_i + l_{i+1} + m_i - 1, l_{i+1} + m_i) C(l_{i+1} + m_i, m_i)
///   * x^(k - 1 + sum (l_j + m_j)) * p_{k-2}^(l_0 - 1) / p_{k-1}^(l_0 + 1)
/// ```
///
/// with `l_{b+1} = 0` and binomials in the convention that allows a
/// negative upper argument at lower argument zero
/// ([`BinomMode::AllowNegativeUpper`]).  The classical statement carries
/// half-integer powers of `x`; rescaling through `(sqrt x)^m U_m = p_m`
/// cancels them all into the single factor `x^(k-1)`.
///
/// Solutions with `l_0 = 0` contribute `1 / (p_{k-2} p_{k-1})`; the whole
/// sum is assembled over the common denominator `p_{k-2} p_{k-1}^(L+1)`
/// where `L` is the largest `l_0` among the solutions.
pub fn gf_exactly_r_12k(k: usize, r: usize) -> Result<RationalGF> {
    if k < 2 || r < 1 {
        return Err(Error::Range(format!("k = {k}, r = {r}; need k >= 2, r >= 1")));
    }
    let b = depth_for(k, r);
    let weights: Vec<usize> = (0..=b)
        .map(|i| {
            let w = binom((k + i - 1) as i64, k as i64 - 1, BinomMode::Standard);
            usize::try_from(w).expect("weight fits usize at desk scale")
        })
        .collect();
    let mut solutions = Vec::new();
    let mut current = vec![(0usize, 0usize); b + 1];
    collect_solutions(&weights, r, 0, &mut current, &mut solutions);

    let p_km2 = cheb_p(k as i64 - 2);
    let p_km1 = cheb_p(k as i64 - 1);
    let max_l0 = solutions.iter().map(|s| s[0].0).max().unwrap_or(0);
    // Powers of the two Chebyshev denominators, up to what any term needs.
    let pow_km2: Vec<IntPoly> = powers(&p_km2, max_l0);
    let pow_km1: Vec<IntPoly> = powers(&p_km1, max_l0);

    let mut numerator = IntPoly::zero();
    for sol in &solutions {
        let coeff = solution_coefficient(sol);
        if coeff.is_zero() {
            continue;
        }
        let total: usize = sol.iter().map(|&(l, m)| l + m).sum();
        let l0 = sol[0].0;
        // term = coeff x^(k-1+total) p_{k-2}^(l0-1) / p_{k-1}^(l0+1)
        //      = coeff x^(k-1+total) p_{k-2}^l0 p_{k-1}^(max_l0-l0) / common
        let term = &pow_km2[l0] * &pow_km1[max_l0 - l0];
        numerator = &numerator + &term.scale(&coeff).shift_up(k - 1 + total);
    }
    let denominator = &(&p_km2 * &pow_km1[max_l0]) * &p_km1;
    Ok(RationalGF::new(numerator, denominator))
}

/// Largest `b >= 0` with `C(k+b, k) <= r`.
fn depth_for(k: usize, r: usize) -> usize {
    let r = BigInt::from(r);
    let mut b = 0usize;
    while binom((k + b + 1) as i64, k as i64, BinomMode::Standard) <= r {
        b += 1;
    }
    b
}

fn powers(p: &IntPoly, max: usize) -> Vec<IntPoly> {
    let mut v = Vec::with_capacity(max + 1);
    v.push(IntPoly::one());
    for i in 1..=max {
        let next = &v[i - 1] * p;
        v.push(next);
    }
    v
}

fn collect_solutions(
    weights: &[usize],
    remaining: usize,
    index: usize,
    current: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if index == weights.len() {
        if remaining == 0 {
            out.push(current.clone());
        }
        return;
    }
    let w = weights[index];
    let max_units = remaining / w;
    for l in 0..=max_units {
        for m in 0..=max_units - l {
            current[index] = (l, m);
            collect_solutions(weights, remaining - (l + m) * w, index + 1, current, out);
        }
    }
    current[index] = (0, 0);
}

fn solution_coefficient(sol: &[(usize, usize)]) -> BigInt {
    let mut coeff = BigInt::one();
    for i in 0..sol.len() {
        let (l_i, m_i) = sol[i];
        let l_next = if i + 1 < sol.len() { sol[i + 1].0 } else { 0 };
        let a = l_i as i64 + l_next as i64 + m_i as i64 - 1;
        let b = l_next as i64 + m_i as i64;
        coeff *= binom(a, b, BinomMode::AllowNegativeUpper);
        coeff *= binom(b, m_i as i64, BinomMode::AllowNegativeUpper);
        if coeff.is_zero() {
            break;
        }
    }
    coeff
}
